#pragma once

#include <cstdint>
#include <vector>

#include "polyarea/ideal.hpp"
#include "polyarea/order.hpp"
#include "polyarea/ring.hpp"

namespace polyarea {

/// Strong Groebner basis over Z of an ideal, in the ambient polynomial ring:
/// the source ring itself in polynomial mode, or the 2k-variable ring with
/// the relations x_i*y_i - 1 adjoined in laurent mode. "Strong" means the
/// leading term (coefficient included) of every nonzero ideal element is
/// divisible by the leading term of some basis element, so division with
/// remainder 0 characterizes membership exactly.
///
/// Every basis element carries a provenance row expressing it over the
/// source generators; composing provenance with division cofactors yields
/// explicit representations over the original generating set.
struct GroebnerBasis {
  MonomialOrder order;
  Mode source_mode = Mode::polynomial;
  int source_vars = 0;
  int ambient_vars = 0;
  std::vector<Poly> elements;                   // ambient polynomial mode
  std::vector<std::vector<Poly>> provenance;    // elements[i] = sum_j provenance[i][j]*source[j]
  std::vector<Poly> source;                     // lifted generators (+ relations in laurent mode)
  int original_count = 0;                       // s = number of original generators
};

struct BuchbergerConfig {
  std::int64_t step_budget = 200000;  // processed critical pairs
  bool autoreduce = true;             // drop strongly top-redundant elements
};

/// S-polynomial over Z: cancels the lcm of the leading monomials at the lcm
/// of the leading coefficients.
Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);
/// GCD-polynomial: realizes gcd(lc f, lc g) at the lcm monomial through a
/// Bezout combination. Needed over Z where leading coefficients do not
/// divide each other.
Poly gcd_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);

GroebnerBasis buchberger_z(const Ideal& I, const MonomialOrder& order = {},
                           const BuchbergerConfig& config = {});

struct NormalFormResult {
  Poly remainder;
  std::vector<Poly> cofactors;  // aligned with basis elements; exact identity
  NormalFormResult(Poly r, std::vector<Poly> c)
      : remainder(std::move(r)), cofactors(std::move(c)) {}
};

/// Division with quotient tracking. Laurent inputs are lifted first.
/// Invariant: lifted input == sum_j cofactors[j]*elements[j] + remainder,
/// and no remainder term is top-reducible by the basis.
NormalFormResult normal_form(const Poly& g, const GroebnerBasis& B);

bool is_member(const Poly& g, const Ideal& I, const GroebnerBasis& B);
bool is_member(const Poly& g, const Ideal& I);

/// Explicit representation g = sum_i h_i f_i over the *original* generators,
/// with the certified area upper bound sum_i |h_i|.
struct Representation {
  std::vector<Poly> cofactors;  // in the source ring, aligned with I.generators
  Int norm_bound;
};

Representation representation_from_cofactors(const Poly& g, const Ideal& I,
                                             const GroebnerBasis& B);

}  // namespace polyarea
