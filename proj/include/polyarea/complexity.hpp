#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "polyarea/area.hpp"
#include "polyarea/groebner.hpp"
#include "polyarea/ideal.hpp"

namespace polyarea {

struct EnumerationBudget {
  std::int64_t max_candidates = 2000000;
  std::int64_t max_area = 64;           // per-candidate area search budget
  std::int64_t wall_clock_ms = 300000;
};

/// Members of the ideal with norm <= m and degree <= n, one representative
/// per {g, -g} pair (leading coefficient positive), zero included.
/// `truncated` is set when a budget cut the stream short; results are then
/// only a lower bound on the member set.
struct MemberEnumeration {
  std::vector<Poly> members;
  bool truncated = false;
  std::int64_t candidates = 0;  // candidate polynomials examined
};

MemberEnumeration enumerate_members(const Ideal& I, const GroebnerBasis& B, std::int64_t m,
                                    std::int64_t n, const EnumerationBudget& budget = {});

/// One evaluated cell of the complexity function: the max area over members
/// in the (norm <= m, degree <= n) box, with the witness attaining it.
/// `exact` is false whenever any budget truncated the enumeration or an area
/// search; the value is then a certified lower bound rather than the sup.
struct ComplexityCell {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t value = 0;
  Poly witness;
  bool exact = true;
  std::int64_t candidates = 0;

  ComplexityCell(std::int64_t m_, std::int64_t n_, Poly w)
      : m(m_), n(n_), witness(std::move(w)) {}
};

ComplexityCell complexity_value(const Ideal& I, const GroebnerBasis& B, std::int64_t m,
                                std::int64_t n, const EnumerationBudget& budget = {});

struct ComplexityTable {
  std::vector<ComplexityCell> rows;  // m-major, n-minor, both starting at 1
};

ComplexityTable complexity_table(const Ideal& I, const GroebnerBasis& B, std::int64_t max_m,
                                 std::int64_t max_n, const EnumerationBudget& budget = {});

}  // namespace polyarea
