#include "polyarea/ring.hpp"

#include <algorithm>
#include <cstdlib>

namespace polyarea {

std::string to_string(Mode mode) {
  return mode == Mode::polynomial ? "polynomial" : "laurent";
}

std::int64_t ExpVec::norm() const {
  std::int64_t n = 0;
  for (auto v : e) n += v < 0 ? -v : v;
  return n;
}

bool ExpVec::nonneg() const {
  return std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v >= 0; });
}

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  ExpVec r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  ExpVec r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
  return r;
}

ExpVec ExpVec::operator-() const {
  ExpVec r = *this;
  for (auto& v : r.e) v = -v;
  return r;
}

std::int64_t distance(const ExpVec& a, const ExpVec& b) {
  return (a - b).norm();
}

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  const std::int64_t na = a.norm(), nb = b.norm();
  if (na != nb) return na < nb;
  return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
}

void Poly::add_term(const Int& c, const ExpVec& d) {
  if (c == 0) return;
  if (d.size() != vars_)
    throw ModeMismatchError("exponent vector has length " + std::to_string(d.size()) +
                            ", ring has " + std::to_string(vars_) + " variables");
  if (mode_ == Mode::polynomial && !d.nonneg())
    throw NegativeExponentError("negative exponent in polynomial mode");
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& rhs) const {
  if (mode_ != rhs.mode_ || vars_ != rhs.vars_)
    throw ModeMismatchError("operands live in different rings (" + to_string(mode_) + "/" +
                            std::to_string(vars_) + " vs " + to_string(rhs.mode_) + "/" +
                            std::to_string(rhs.vars_) + ")");
}

Poly Poly::from_terms(Mode mode, int vars, const std::vector<std::pair<Int, ExpVec>>& raw) {
  Poly p(mode, vars);
  for (const auto& [c, d] : raw) p.add_term(c, d);
  return p;
}

Poly Poly::monomial(Mode mode, int vars, Int coeff, ExpVec d) {
  Poly p(mode, vars);
  p.add_term(coeff, d);
  return p;
}

Poly Poly::constant(Mode mode, int vars, Int c) {
  return monomial(mode, vars, std::move(c), ExpVec::zero(vars));
}

Int Poly::norm() const {
  Int n = 0;
  for (const auto& [d, c] : terms_) n += abs(c);
  return n;
}

std::optional<std::int64_t> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  // Keys are graded by L1 norm, so the largest key has maximal norm.
  return terms_.rbegin()->first.norm();
}

std::vector<ExpVec> Poly::support() const {
  std::vector<ExpVec> s;
  s.reserve(terms_.size());
  for (const auto& [d, c] : terms_) s.push_back(d);
  return s;
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_compatible(rhs);
  for (const auto& [d, c] : rhs.terms_) add_term(c, d);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_compatible(rhs);
  for (const auto& [d, c] : rhs.terms_) add_term(-c, d);
  return *this;
}

Poly Poly::operator-() const {
  Poly r(mode_, vars_);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly r(a.mode_, a.vars_);
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) r.add_term(ca * cb, da + db);
  return r;
}

Poly Poly::monomial_mul(const Int& c, const ExpVec& d) const {
  Poly r(mode_, vars_);
  if (c == 0) return r;
  for (const auto& [e, coeff] : terms_) r.add_term(c * coeff, e + d);
  return r;
}

Poly Poly::as_laurent() const {
  Poly r(Mode::laurent, vars_);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, c);
  return r;
}

bool Poly::operator==(const Poly& rhs) const {
  return mode_ == rhs.mode_ && vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

std::int64_t diameter(const std::vector<ExpVec>& s) {
  if (s.empty()) throw EmptySupportError("diameter of empty support");
  std::int64_t d = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) d = std::max(d, distance(s[i], s[j]));
  return d;
}

std::int64_t support_distance(const std::vector<ExpVec>& a, const std::vector<ExpVec>& b) {
  if (a.empty() || b.empty()) throw EmptySupportError("distance with empty support");
  std::int64_t best = distance(a.front(), b.front());
  for (const auto& p : a)
    for (const auto& q : b) best = std::min(best, distance(p, q));
  return best;
}

Poly lift_to_polynomial(const Poly& g) {
  if (g.mode() != Mode::laurent)
    throw ModeMismatchError("lift_to_polynomial expects a laurent-mode input");
  const int k = g.vars();
  Poly r(Mode::polynomial, 2 * k);
  std::vector<std::pair<Int, ExpVec>> terms;
  for (const auto& [d, c] : g.terms()) {
    std::vector<std::int64_t> split(static_cast<std::size_t>(2 * k), 0);
    for (int i = 0; i < k; ++i) {
      if (d[i] >= 0)
        split[static_cast<std::size_t>(i)] = d[i];
      else
        split[static_cast<std::size_t>(k + i)] = -d[i];
    }
    terms.emplace_back(c, ExpVec(std::move(split)));
  }
  return Poly::from_terms(Mode::polynomial, 2 * k, terms);
}

Poly laurent_from_lifted(const Poly& p, int k) {
  if (p.vars() != 2 * k)
    throw ModeMismatchError("lifted polynomial must have 2k variables");
  std::vector<std::pair<Int, ExpVec>> terms;
  for (const auto& [d, c] : p.terms()) {
    std::vector<std::int64_t> folded(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) folded[static_cast<std::size_t>(i)] = d[i] - d[k + i];
    terms.emplace_back(c, ExpVec(std::move(folded)));
  }
  return Poly::from_terms(Mode::laurent, k, terms);
}

}  // namespace polyarea
