#pragma once

#include <string>

#include "glres/differentials.hpp"

namespace glres {

enum class Format { Text, Json, Cas };

// Throws InputError on an unknown name.
Format parse_format(const std::string& name);

// Human-readable dump: header, ordered bases, matrices.
std::string export_text(const Resolution& res);
// Machine-readable document with the input system, bases and matrices.
std::string export_json(const Resolution& res);
// Macaulay2 script rebuilding the matrices and asserting the complex
// property and the Betti table.
std::string export_cas(const Resolution& res);

std::string export_resolution(const Resolution& res, Format f);

}  // namespace glres
