#include "polyarea/complexity.hpp"

#include <algorithm>
#include <chrono>

#include "polyarea/errors.hpp"

namespace polyarea {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<ExpVec> degree_ball(int k, std::int64_t n, bool nonneg) {
  std::vector<ExpVec> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int pos, std::int64_t left) -> void {
    if (pos == k) {
      out.emplace_back(cur);
      return;
    }
    const std::int64_t lo = nonneg ? 0 : -left;
    for (std::int64_t v = lo; v <= left; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - (v < 0 ? -v : v));
    }
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace

MemberEnumeration enumerate_members(const Ideal& I, const GroebnerBasis& B, std::int64_t m,
                                    std::int64_t n, const EnumerationBudget& budget) {
  if (m < 0 || n < 0) throw ZeroInputError("norm/degree box must be nonnegative");
  MemberEnumeration out;
  const auto deadline = Clock::now() + std::chrono::milliseconds(budget.wall_clock_ms);

  // Candidate generation: assign coefficients with total mass <= m to the
  // grlex-sorted points of the degree-n ball. Sign symmetry is factored out
  // by forcing the coefficient of the grlex-largest occupied point positive.
  const auto ball = degree_ball(I.vars, n, I.mode == Mode::polynomial);
  std::vector<std::pair<Int, ExpVec>> picked;

  auto consider = [&](const Poly& candidate) {
    ++out.candidates;
    if (candidate.is_zero() || is_member(candidate, I, B)) out.members.push_back(candidate);
  };

  // Points are visited in descending grlex order; the first (largest) point
  // assigned a nonzero coefficient must take it positive.
  auto rec = [&](auto&& self, std::size_t idx, std::int64_t mass_left, bool lead_fixed) -> bool {
    if (out.candidates >= budget.max_candidates || Clock::now() > deadline) {
      out.truncated = true;
      return false;
    }
    if (idx == ball.size()) {
      consider(Poly::from_terms(I.mode, I.vars, picked));
      return true;
    }
    const ExpVec& point = ball[ball.size() - 1 - idx];
    const std::int64_t lo = lead_fixed ? -mass_left : 0;
    for (std::int64_t c = lo; c <= mass_left; ++c) {
      if (c != 0) picked.emplace_back(c, point);
      const bool ok = self(self, idx + 1, mass_left - (c < 0 ? -c : c), lead_fixed || c != 0);
      if (c != 0) picked.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  rec(rec, 0, m, false);
  return out;
}

ComplexityCell complexity_value(const Ideal& I, const GroebnerBasis& B, std::int64_t m,
                                std::int64_t n, const EnumerationBudget& budget) {
  auto enumeration = enumerate_members(I, B, m, n, budget);
  ComplexityCell cell(m, n, Poly(I.mode, I.vars));
  cell.candidates = enumeration.candidates;
  cell.exact = !enumeration.truncated;

  SearchConfig area_cfg;
  area_cfg.max_area = budget.max_area;
  for (const auto& g : enumeration.members) {
    if (g.is_zero()) continue;
    std::int64_t a;
    try {
      a = area_exact(g, I, B, area_cfg).area();
    } catch (const BudgetExceededError&) {
      cell.exact = false;  // the cell is now only a lower bound
      continue;
    }
    if (a > cell.value) {
      cell.value = a;
      cell.witness = g;
    }
  }
  return cell;
}

ComplexityTable complexity_table(const Ideal& I, const GroebnerBasis& B, std::int64_t max_m,
                                 std::int64_t max_n, const EnumerationBudget& budget) {
  ComplexityTable table;
  for (std::int64_t m = 1; m <= max_m; ++m)
    for (std::int64_t n = 1; n <= max_n; ++n)
      table.rows.push_back(complexity_value(I, B, m, n, budget));
  return table;
}

}  // namespace polyarea
