#include "polyarea/ideal.hpp"

#include <algorithm>

#include "polyarea/errors.hpp"

namespace polyarea {

Ideal Ideal::make(std::vector<Poly> gens) {
  if (gens.empty()) throw ZeroInputError("ideal needs at least one generator");
  Ideal I;
  I.mode = gens.front().mode();
  I.vars = gens.front().vars();
  for (const auto& f : gens) {
    if (f.is_zero()) throw ZeroInputError("zero polynomial is not a valid generator");
    if (f.mode() != I.mode || f.vars() != I.vars)
      throw ModeMismatchError("generators must share mode and variable count");
    I.max_generator_degree = std::max(I.max_generator_degree, *f.degree());
  }
  I.degree_constant = 5 * I.max_generator_degree;
  I.generators = std::move(gens);
  return I;
}

std::int64_t Ideal::max_generator_diameter() const {
  std::int64_t d = 0;
  for (const auto& f : generators) d = std::max(d, diameter(f.support()));
  return d;
}

}  // namespace polyarea
