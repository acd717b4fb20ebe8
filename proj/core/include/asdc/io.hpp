#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "asdc/chow.hpp"
#include "asdc/complex.hpp"
#include "asdc/threshold.hpp"

namespace asdc {

/// Parses "p/q" or "p" (base 10) into a canonical rational.
mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& q);

/// Complex files: {"n": <int>, "facets": [[<1-based vertex>, ...], ...]}.
/// The reader applies downward closure; the writer emits sorted facets only.
SimplicialComplex read_complex_json(std::istream& in);
SimplicialComplex parse_complex_json(const std::string& text);
std::string write_complex_json(const SimplicialComplex& k);

/// Length files: {"lengths": ["p/q", ...]}.
LengthVector read_lengths_json(std::istream& in);
LengthVector parse_lengths_json(const std::string& text);
std::string write_lengths_json(const LengthVector& l);

/// Cycle expressions: blocks in parentheses with 1-based vertices, integer
/// coefficients, '+'/'-', e.g. "(1 2)(4 5) + 3*(2 3 4)".  A juxtaposition of
/// blocks multiplies their classes.
ChowClass parse_cycle_expression(const SimplicialComplex& k, std::string_view text);

/// Renders a class in the same syntax (1-based, terms by degree then cycle).
std::string format_cycle_expression(const ChowClass& c);

}  // namespace asdc
