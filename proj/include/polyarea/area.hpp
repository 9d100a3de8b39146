#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyarea/groebner.hpp"
#include "polyarea/ideal.hpp"
#include "polyarea/ring.hpp"

namespace polyarea {

/// One unit term eps * x^shift * f_gen of a representation. Certificates are
/// multisets of these; the area of the target is the entry count of a
/// minimal certificate.
struct CertEntry {
  int gen = 0;   // 0-based generator index
  int sign = 1;  // +1 or -1
  ExpVec shift;

  bool operator==(const CertEntry&) const = default;
};

/// Canonical entry order (generator, shift, sign with + first); certificates
/// are kept sorted so equal multisets compare equal and tie-breaking is
/// reproducible.
bool entry_less(const CertEntry& a, const CertEntry& b);

struct AreaCertificate {
  Poly target;
  std::vector<CertEntry> entries;  // sorted by entry_less

  std::int64_t area() const { return static_cast<std::int64_t>(entries.size()); }
  /// Aggregated cofactors h_i; target == sum_i h_i * f_i for valid certificates.
  std::vector<Poly> cofactors(const Ideal& I) const;
};

enum class Pruning { none, connectivity };

struct SearchConfig {
  std::int64_t max_area = 64;
  std::int64_t radius_slack = 0;
  Pruning pruning = Pruning::none;
  std::size_t memo_limit = 4000000;
};

/// Search radius for certificates of a given candidate area: any minimal
/// representation's cofactor monomials satisfy |d| <= deg g + 5D*a, so the
/// level-a pool may be restricted to shifts with |d| + deg f_i inside it.
std::int64_t degree_radius(const Poly& g, std::int64_t area, const Ideal& I);

/// Exact area by iterative deepening over the entry count, each level
/// restricted to the theorem radius. Returns the lexicographically least
/// minimal certificate. Throws NotMemberError if g is not in the ideal,
/// BudgetExceededError past cfg.max_area, and RadiusExhaustedError in the
/// (theorem-violating, never yet observed) case that a verified member has
/// no certificate inside the radius at a level where one must exist.
AreaCertificate area_exact(const Poly& g, const Ideal& I, const GroebnerBasis& B,
                           const SearchConfig& cfg = {});
AreaCertificate area_exact(const Poly& g, const Ideal& I, const SearchConfig& cfg = {});

/// Reference search: plain exhaustive enumeration of entry multisets up to
/// size a_max over the fixed pool {eps*x^d*f_i : |d| <= radius}, no radius
/// scheduling, no pruning, no memoization. Feasible for entry pools up to a
/// few dozen and a_max <= 6; intended as the independent check for the
/// clever search.
std::optional<AreaCertificate> area_brute_oracle(const Poly& g, const Ideal& I,
                                                 std::int64_t a_max, std::int64_t radius);

struct CertificateReport {
  bool valid = false;              // entries re-expand to the target, no wasted pairs
  bool degree_bound_holds = false; // max_i deg h_i <= deg target + 5D * area
  std::int64_t max_cofactor_degree = 0;  // meaningful when some h_i != 0
  std::int64_t degree_cap = 0;
};

CertificateReport verify_certificate(const AreaCertificate& c, const Ideal& I);

/// Rewrites a certificate over F into one over F' given rows with
/// f_i = sum_j rows[i][j] * g_j (verified; BadConversionMatrixError if not).
/// The result is valid for the same target and has area at most
/// |F'| * max_{i,j} |rows[i][j]| times the input area.
AreaCertificate convert_representation(const AreaCertificate& c, const Ideal& from,
                                       const Ideal& to,
                                       const std::vector<std::vector<Poly>>& rows);

}  // namespace polyarea
