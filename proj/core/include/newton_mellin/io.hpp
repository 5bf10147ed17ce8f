/*
 * Text formats.
 *
 * Expansion (one term per line, '#' starts a comment line):
 *
 *   side=zero
 *   r=-1/2 m1=0 m2=0 : 0:0.5,0 1:-2,0.25
 *
 * Each `k:re,im` item is the u^k coefficient. Exponents that are not
 * canonical (r outside (-1, 0]) are folded; repeated exponents add up.
 *
 * Polygon:        (p/q,p/q) : re,im u^l        one vertex per line
 * Mellin table:   r=p/q m1=a m2=b k=k c=re,im C=re,im
 *
 * Numbers are printed with 17 significant digits so that every double
 * survives a print/parse round trip bit for bit.
 */
#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include "newton_mellin/expansion.hpp"
#include "newton_mellin/mellin.hpp"
#include "newton_mellin/newton.hpp"

namespace nm {

std::string format_number(double value);
std::string format_complex(std::complex<double> value);

/// Throws ParseError with the offending line number.
Expansion parse_expansion(std::istream& in);
Expansion parse_expansion(std::string_view text);

void write_expansion(std::ostream& out, const Expansion& e);
std::string format_expansion(const Expansion& e);

void write_polygon(std::ostream& out, const DecoratedPolygon& polygon);
void write_mellin_table(std::ostream& out, const MellinTable& table);

}  // namespace nm
