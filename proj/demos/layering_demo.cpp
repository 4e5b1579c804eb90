// Builds the vertex-layered series zero through level 5, prints its layers,
// checks that the geometric polynomial vanishes on it, and evaluates it at t2 = 1/5.

#include <iostream>

#include "hypercat/series.hpp"
#include "hypercat/subdigon.hpp"

int main() {
  using namespace hypercat;

  const LayerSpec spec{LevelMeasure::Vertex, 5, std::nullopt};
  const auto beta = build_beta(spec);
  for (std::size_t lvl = 0; lvl <= spec.max_level; ++lvl) {
    std::cout << "[v^" << lvl << "] " << poly_string(layer_slice(beta, spec.measure, lvl)) << '\n';
  }

  const auto residual = evaluate_geometric(beta, spec);
  std::cout << "1 - beta + sum t_n beta^n mod v^6 = " << poly_string(residual) << '\n';

  std::cout << "subdigons of type [2,1]: " << count_subdigons(TypeVector{{2, 2}, {3, 1}}) << '\n';
  for (const auto& s : enumerate_subdigons(TypeVector{{2, 1}, {3, 1}})) std::cout << "  " << serialize(s) << '\n';

  return residual.is_zero() ? 0 : 1;
}
