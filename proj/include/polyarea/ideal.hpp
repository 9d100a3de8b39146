#pragma once

#include <cstdint>
#include <vector>

#include "polyarea/ring.hpp"

namespace polyarea {

/// Finitely generated ideal with an ordered generating set F = {f_1,...,f_s}.
/// Carries the derived constants used by the degree-bound machinery:
/// D = max_i deg f_i and the search constant 5D.
struct Ideal {
  Mode mode = Mode::polynomial;
  int vars = 0;
  std::vector<Poly> generators;
  std::int64_t max_generator_degree = 0;  // D
  std::int64_t degree_constant = 0;       // 5D

  static Ideal make(std::vector<Poly> gens);

  int size() const { return static_cast<int>(generators.size()); }
  /// Max support diameter over the generators; at most 2D.
  std::int64_t max_generator_diameter() const;
};

}  // namespace polyarea
