#include "polyarea/area.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_set>

#include "polyarea/errors.hpp"

namespace polyarea {

namespace {

// All lattice points with L1 norm <= radius (nonnegative orthant only in
// polynomial mode), in grlex order.
void ball_points_rec(int k, int pos, std::int64_t left, bool nonneg,
                     std::vector<std::int64_t>& cur, std::vector<ExpVec>& out) {
  if (pos == k) {
    out.emplace_back(cur);
    return;
  }
  const std::int64_t lo = nonneg ? 0 : -left;
  for (std::int64_t v = lo; v <= left; ++v) {
    cur[static_cast<std::size_t>(pos)] = v;
    ball_points_rec(k, pos + 1, left - (v < 0 ? -v : v), nonneg, cur, out);
  }
}

std::vector<ExpVec> ball_points(int k, std::int64_t radius, bool nonneg) {
  std::vector<ExpVec> out;
  if (radius < 0) return out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(k), 0);
  ball_points_rec(k, 0, radius, nonneg, cur, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

struct PoolEntry {
  CertEntry key;
  Poly term;                  // sign * x^shift * f_gen
  std::vector<ExpVec> supp;
  PoolEntry(CertEntry k, Poly t) : key(std::move(k)), term(std::move(t)), supp(term.support()) {}
};

std::vector<PoolEntry> build_pool(const Ideal& I, std::int64_t radius,
                                  bool subtract_generator_degree) {
  const bool nonneg = I.mode == Mode::polynomial;
  std::vector<PoolEntry> pool;
  for (int i = 0; i < I.size(); ++i) {
    const Poly& f = I.generators[static_cast<std::size_t>(i)];
    const std::int64_t budget = subtract_generator_degree ? radius - *f.degree() : radius;
    for (const auto& d : ball_points(I.vars, budget, nonneg)) {
      for (int sign : {+1, -1}) {
        pool.emplace_back(CertEntry{i, sign, d}, f.monomial_mul(sign, d));
      }
    }
  }
  // ball_points is grlex-sorted and generators are visited in order, so the
  // pool is already sorted by entry_less; keep an explicit sort as the
  // single source of truth.
  std::sort(pool.begin(), pool.end(),
            [](const PoolEntry& a, const PoolEntry& b) { return entry_less(a.key, b.key); });
  return pool;
}

std::string state_key(const Poly& residual, std::int64_t budget, std::size_t index) {
  std::ostringstream os;
  os << budget << '|' << index;
  for (const auto& [d, c] : residual.terms()) {
    os << ';' << c;
    for (auto v : d.e) os << ',' << v;
  }
  return os.str();
}

struct Searcher {
  const std::vector<PoolEntry>& pool;
  const Poly& target;
  Int max_entry_norm;
  Pruning pruning;
  std::int64_t diag_bound;  // max generator support diameter
  std::size_t memo_limit;
  std::unordered_set<std::string> dead;
  std::vector<CertEntry> taken;
  std::vector<CertEntry> found;
  bool success = false;

  bool connectivity_prunes(const Poly& residual, std::size_t index) {
    if (taken.empty()) return false;
    Poly partial = target - residual;
    if (partial.is_zero()) return false;
    auto ps = partial.support();
    if (support_distance(ps, target.support()) <= diag_bound) return false;
    for (std::size_t j = index; j < pool.size(); ++j)
      if (support_distance(ps, pool[j].supp) <= diag_bound) return false;
    return true;
  }

  // Entries are chosen with non-decreasing pool index, so the first complete
  // certificate found is the lexicographically least one.
  bool dfs(Poly& residual, std::int64_t budget, std::size_t index) {
    if (residual.is_zero()) {
      found = taken;
      success = true;
      return true;
    }
    if (budget == 0) return false;
    if (residual.norm() > budget * max_entry_norm) return false;
    if (pruning == Pruning::connectivity && connectivity_prunes(residual, index)) return false;

    std::string key = state_key(residual, budget, index);
    if (dead.contains(key)) return false;

    for (std::size_t j = index; j < pool.size(); ++j) {
      const auto& entry = pool[j];
      if (!taken.empty()) {
        // A +/- pair on the same (generator, shift) cancels to nothing and
        // never occurs in a minimal certificate.
        const auto& last = taken.back();
        if (last.gen == entry.key.gen && last.shift == entry.key.shift &&
            last.sign != entry.key.sign)
          continue;
      }
      taken.push_back(entry.key);
      residual -= entry.term;
      if (dfs(residual, budget - 1, j)) return true;
      residual += entry.term;
      taken.pop_back();
    }
    if (dead.size() < memo_limit) dead.insert(std::move(key));
    return false;
  }
};

std::int64_t clamped_int64(const Int& v) {
  static const Int cap = std::numeric_limits<std::int64_t>::max();
  return v > cap ? std::numeric_limits<std::int64_t>::max() : v.convert_to<std::int64_t>();
}

}  // namespace

bool entry_less(const CertEntry& a, const CertEntry& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  GrlexLess less;
  if (less(a.shift, b.shift)) return true;
  if (less(b.shift, a.shift)) return false;
  return a.sign > b.sign;  // + before -
}

std::vector<Poly> AreaCertificate::cofactors(const Ideal& I) const {
  std::vector<Poly> h(static_cast<std::size_t>(I.size()), Poly(I.mode, I.vars));
  for (const auto& e : entries)
    h[static_cast<std::size_t>(e.gen)] += Poly::monomial(I.mode, I.vars, e.sign, e.shift);
  return h;
}

std::int64_t degree_radius(const Poly& g, std::int64_t area, const Ideal& I) {
  return degree_or(g, 0) + I.degree_constant * area;
}

AreaCertificate area_exact(const Poly& g, const Ideal& I, const GroebnerBasis& B,
                           const SearchConfig& cfg) {
  if (g.mode() != I.mode || g.vars() != I.vars)
    throw ModeMismatchError("element and ideal live in different rings");
  if (g.is_zero()) return {g, {}};
  if (!is_member(g, I, B)) throw NotMemberError("area of a non-member is undefined");

  // A concrete representation bounds the area from above. If iterative
  // deepening passes this level without finding a certificate inside the
  // radius, the degree bound itself has failed -- report that loudly
  // instead of searching forever.
  const std::int64_t known_upper =
      clamped_int64(representation_from_cofactors(g, I, B).norm_bound);

  Int max_entry_norm = 0;
  for (const auto& f : I.generators) max_entry_norm = std::max(max_entry_norm, f.norm());

  for (std::int64_t a = 1; a <= cfg.max_area; ++a) {
    const std::int64_t radius = degree_radius(g, a, I) + cfg.radius_slack;
    auto pool = build_pool(I, radius, /*subtract_generator_degree=*/true);
    Searcher s{pool,       g,  max_entry_norm, cfg.pruning, I.max_generator_diameter(),
               cfg.memo_limit, {}, {},             {}};
    Poly residual = g;
    if (s.dfs(residual, a, 0)) {
      AreaCertificate cert{g, std::move(s.found)};
      std::sort(cert.entries.begin(), cert.entries.end(), entry_less);
      return cert;
    }
    if (a >= known_upper)
      throw RadiusExhaustedError(
          "verified member with no certificate inside the degree radius at level " +
          std::to_string(a) + "; this contradicts the degree bound and should be recorded");
  }
  throw BudgetExceededError("area search exceeded max_area = " + std::to_string(cfg.max_area));
}

AreaCertificate area_exact(const Poly& g, const Ideal& I, const SearchConfig& cfg) {
  return area_exact(g, I, buchberger_z(I), cfg);
}

std::optional<AreaCertificate> area_brute_oracle(const Poly& g, const Ideal& I,
                                                 std::int64_t a_max, std::int64_t radius) {
  if (g.mode() != I.mode || g.vars() != I.vars)
    throw ModeMismatchError("element and ideal live in different rings");
  if (g.is_zero()) return AreaCertificate{g, {}};

  auto pool = build_pool(I, radius, /*subtract_generator_degree=*/false);
  std::vector<CertEntry> taken;

  // Plain depth-first enumeration of non-decreasing entry sequences of the
  // exact length, residual updated incrementally. No cutoffs besides the
  // wasted +/- pair rule, which is part of the certificate format.
  auto rec = [&](auto&& self, Poly& residual, std::int64_t left, std::size_t index) -> bool {
    if (left == 0) return residual.is_zero();
    for (std::size_t j = index; j < pool.size(); ++j) {
      const auto& entry = pool[j];
      if (!taken.empty()) {
        const auto& last = taken.back();
        if (last.gen == entry.key.gen && last.shift == entry.key.shift &&
            last.sign != entry.key.sign)
          continue;
      }
      taken.push_back(entry.key);
      residual -= entry.term;
      if (self(self, residual, left - 1, j)) return true;
      residual += entry.term;
      taken.pop_back();
    }
    return false;
  };

  for (std::int64_t a = 1; a <= a_max; ++a) {
    Poly residual = g;
    taken.clear();
    if (rec(rec, residual, a, 0)) {
      AreaCertificate cert{g, taken};
      std::sort(cert.entries.begin(), cert.entries.end(), entry_less);
      return cert;
    }
  }
  return std::nullopt;
}

CertificateReport verify_certificate(const AreaCertificate& c, const Ideal& I) {
  CertificateReport report;

  Poly sum(I.mode, I.vars);
  bool wasted_pair = false;
  std::map<std::pair<int, std::vector<std::int64_t>>, int> signs;
  for (const auto& e : c.entries) {
    if (e.gen < 0 || e.gen >= I.size() || (e.sign != 1 && e.sign != -1)) return report;
    if (e.shift.size() != I.vars) return report;
    sum += I.generators[static_cast<std::size_t>(e.gen)].monomial_mul(e.sign, e.shift);
    auto& seen = signs[{e.gen, e.shift.e}];
    if (seen != 0 && seen != e.sign) wasted_pair = true;
    seen = e.sign;
  }
  report.valid = !wasted_pair && sum == c.target && c.target.mode() == I.mode &&
                 c.target.vars() == I.vars;

  std::int64_t max_deg = 0;
  bool any = false;
  for (const auto& h : c.cofactors(I)) {
    if (h.is_zero()) continue;
    max_deg = std::max(max_deg, *h.degree());
    any = true;
  }
  report.max_cofactor_degree = any ? max_deg : 0;
  report.degree_cap = degree_or(c.target, 0) + I.degree_constant * c.area();
  report.degree_bound_holds = !any || max_deg <= report.degree_cap;
  return report;
}

AreaCertificate convert_representation(const AreaCertificate& c, const Ideal& from,
                                       const Ideal& to,
                                       const std::vector<std::vector<Poly>>& rows) {
  if (from.mode != to.mode || from.vars != to.vars)
    throw ModeMismatchError("generating sets live in different rings");
  if (rows.size() != static_cast<std::size_t>(from.size()))
    throw BadConversionMatrixError("conversion matrix must have one row per source generator");
  for (int i = 0; i < from.size(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (row.size() != static_cast<std::size_t>(to.size()))
      throw BadConversionMatrixError("conversion row has wrong length");
    Poly rebuilt(to.mode, to.vars);
    for (int j = 0; j < to.size(); ++j)
      rebuilt += row[static_cast<std::size_t>(j)] * to.generators[static_cast<std::size_t>(j)];
    if (!(rebuilt == from.generators[static_cast<std::size_t>(i)]))
      throw BadConversionMatrixError("row " + std::to_string(i + 1) +
                                     " does not reproduce its generator");
  }

  // Expand each unit entry through its row, then cancel opposite signs on
  // equal (generator, shift) slots; what remains decomposes back into units.
  std::map<std::pair<int, std::vector<std::int64_t>>, Int> net;
  for (const auto& e : c.entries) {
    for (int j = 0; j < to.size(); ++j) {
      for (const auto& [d, coeff] : rows[static_cast<std::size_t>(e.gen)][static_cast<std::size_t>(j)].terms())
        net[{j, (e.shift + d).e}] += e.sign * coeff;
    }
  }

  AreaCertificate out{c.target, {}};
  for (const auto& [slot, coeff] : net) {
    if (coeff == 0) continue;
    const int sign = coeff > 0 ? 1 : -1;
    Int count = abs(coeff);
    for (Int t = 0; t < count; ++t)
      out.entries.push_back({slot.first, sign, ExpVec(slot.second)});
  }
  std::sort(out.entries.begin(), out.entries.end(), entry_less);
  return out;
}

}  // namespace polyarea
