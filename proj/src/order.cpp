#include "polyarea/order.hpp"

#include <algorithm>
#include <numeric>

#include "polyarea/errors.hpp"

namespace polyarea {

namespace {

std::int64_t total_degree(const ExpVec& a) {
  return std::accumulate(a.e.begin(), a.e.end(), std::int64_t{0});
}

}  // namespace

bool MonomialOrder::less(const ExpVec& a, const ExpVec& b) const {
  const int k = a.size();
  auto at = [&](const ExpVec& v, int i) {
    const int j = var_order.empty() ? i : var_order[static_cast<std::size_t>(i)];
    return v[j];
  };
  if (kind != Kind::lex) {
    const std::int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
  }
  switch (kind) {
    case Kind::grevlex:
      for (int i = k - 1; i >= 0; --i) {
        const std::int64_t diff = at(a, i) - at(b, i);
        if (diff != 0) return diff > 0;
      }
      return false;
    case Kind::grlex:
    case Kind::lex:
      for (int i = 0; i < k; ++i) {
        const std::int64_t diff = at(a, i) - at(b, i);
        if (diff != 0) return diff < 0;
      }
      return false;
  }
  return false;
}

std::pair<Int, ExpVec> leading_term(const Poly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ZeroInputError("leading term of the zero polynomial");
  auto it = f.terms().begin();
  auto best = it;
  for (++it; it != f.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->second, best->first};
}

bool monomial_divides(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

ExpVec monomial_lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

}  // namespace polyarea
