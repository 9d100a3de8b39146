#pragma once

#include <utility>
#include <vector>

#include "polyarea/ring.hpp"

namespace polyarea {

/// Monomial order on nonnegative exponent vectors, used by the division and
/// basis-completion machinery. Default is graded-reverse-lexicographic; the
/// variable priority can be permuted.
struct MonomialOrder {
  enum class Kind { grevlex, grlex, lex };

  Kind kind = Kind::grevlex;
  /// var_order[i] = index of the i-th most significant variable.
  /// Empty means the identity permutation.
  std::vector<int> var_order;

  bool less(const ExpVec& a, const ExpVec& b) const;
  bool equal_config(const MonomialOrder& o) const {
    return kind == o.kind && var_order == o.var_order;
  }
};

/// Leading (coefficient, monomial) of a nonzero polynomial under the order.
std::pair<Int, ExpVec> leading_term(const Poly& f, const MonomialOrder& order);

/// Componentwise divisibility of monomials: a | b.
bool monomial_divides(const ExpVec& a, const ExpVec& b);

ExpVec monomial_lcm(const ExpVec& a, const ExpVec& b);

}  // namespace polyarea
