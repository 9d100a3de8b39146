#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "polyarea/area.hpp"
#include "polyarea/complexity.hpp"
#include "polyarea/groebner.hpp"
#include "polyarea/ideal.hpp"
#include "polyarea/ring.hpp"
#include "polyarea/words.hpp"

namespace polyarea {

/// Text grammar:
///   poly := ['-'] term (('+'|'-') term)*
///   term := [integer '*']? monomial | integer
///   monomial := var ('^' integer)? ('*' var ('^' integer)?)*
///   var := 'x' index            (indices start at 1)
/// Example: "2*x1^3*x2^-1 - x2 + 5". Whitespace-insensitive.
///
/// `vars` = 0 infers the variable count from the largest index used
/// (at least 1). Throws SyntaxError with a position on bad input and
/// NegativeExponentError when polynomial mode sees a negative exponent.
Poly parse_poly(std::string_view text, Mode mode, int vars = 0);

/// Canonical printer: grlex-descending terms, sign-separated, unit
/// coefficients and unit exponents omitted. parse(print(p)) == p, and
/// print(parse(print(p))) is byte-identical.
std::string to_string(const Poly& p);

/// Ideal file: header "mode=polynomial|laurent vars=k", then one generator
/// per line in the grammar above. Blank lines are ignored.
Ideal parse_ideal_file(const std::string& path);
Ideal parse_ideal_text(std::string_view text);
std::string to_ideal_text(const Ideal& I);

/// Words are whitespace-separated letters: "a", "x3" and capitalized
/// inverses "A", "X3".
GroupWord parse_word(std::string_view text, int vars = 0);
std::string to_string(const GroupWord& w);

/// Certificate serialization: a "target <poly>" header then one entry per
/// line as "i eps d_1 ... d_k" with 1-based generator index and eps in {+,-}.
std::string serialize_certificate(const AreaCertificate& c);
AreaCertificate parse_certificate(std::string_view text, const Ideal& I);

std::string table_csv(const ComplexityTable& table);
nlohmann::json table_json(const ComplexityTable& table);
nlohmann::json datapoint_json(const DehnDatapoint& p);

}  // namespace polyarea
