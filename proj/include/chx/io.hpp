#pragma once

// On-disk format for bounded complexes with optional named elements:
// versioned JSON text with explicit degree keys (never positional degree
// arrays) and decimal-string integers. Writing is canonical, so
// serialization round-trips byte-identically.

#include <string>

#include "chx/complex.hpp"

namespace chx {

struct ComplexFile {
    ChainComplex complex;
    std::map<std::string, Element> elements;  // optional named elements
};

// Canonical text (2-space indented JSON, ascending degree keys, trailing
// newline). Every integer is rendered as a decimal string.
std::string write_complex_file(const ComplexFile& f);

// Parse and fully validate (shape, relation respect, and boundary-squared
// checks); throws invalid_argument with the offending location on any
// failure, including unsupported format versions.
ComplexFile read_complex_file(const std::string& text);

}  // namespace chx
