// Restricts Sweedler's action on k[u]/(u^2 - 1) to the ideal generated by
// (1 + u)/2, then globalizes and builds the Morita context.

#include <iostream>

#include "hopfpar/catalog.hpp"

using namespace hopfpar;

int main() {
  const auto global = catalog::sweedler_split_algebra(2);
  const auto a = induced_partial_algebra(global, catalog::sweedler_split_idempotent());
  std::cout << "dim A = " << a.dim() << ", x . 1 = " << to_string(a.action[2](0, 0)) << "\n";

  const auto g = globalize(a);
  std::cout << "globalization: dim " << g.dim() << ", idempotent " << is_idempotent_algebra(g.alg) << "\n";

  const auto smash = partial_smash(a);
  std::cout << "partial smash product: dim " << smash.alg.dim << "\n";

  const auto mc = morita_context(a);
  std::cout << "Morita maps surjective: " << mc.tau_surjective() << " " << mc.mu_surjective() << "\n";
  return 0;
}
