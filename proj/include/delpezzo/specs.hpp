// Textual specs for surfaces and curve classes, shared by the CLI and the
// file formats.
//
//   surface: "P2" | "P1xP1" | "dP:<n>"            (1 <= n <= 8)
//   class:   "d"            on P2
//            "a,b"          on P1xP1
//            "d;m1,...,mn"  on dP:n, meaning d*H - sum_i m_i E_i
//
// Parsing then printing is the identity on valid specs.
#pragma once

#include <iosfwd>
#include <string>

#include "delpezzo/extract.hpp"
#include "delpezzo/surface.hpp"

namespace delpezzo {

// Throw std::invalid_argument on malformed input.
Surface parse_surface(const std::string& spec);
CurveClass parse_class(const Surface& s, const std::string& spec);

std::string class_spec(const Surface& s, const CurveClass& c);

// Betti table as CSV with header "k,m,b"; values are decimal integers of
// arbitrary size, one cell per line, LF endings.
BettiInput read_betti_csv(std::istream& in);
void write_betti_csv(std::ostream& out, const BettiInput& input);

} // namespace delpezzo
