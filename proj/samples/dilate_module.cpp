// Builds a partial module over the dual of C2 by hand, dilates it and prints
// the projection in the eigenspace-adapted basis.

#include <iostream>

#include "hopfpar/catalog.hpp"

using namespace hopfpar;

int main() {
  const Scalar half(1, 2);
  const Mat p0 = Mat::diagonal({1, 0, half});
  const PartialModule m{builtin("kC2-dual"), 3, {p0, Mat::identity(3) - p0}};

  const auto report = check_partial_rep(m);
  std::cout << "partial: " << report.ok() << ", global: " << is_global(m) << "\n";

  const Dilation d = standard_dilation(m);
  std::cout << "dilation dimension: " << d.projected.module.dim << "\n";

  const BasisView v = in_basis(d, catalog::dual_c2_dilation_basis(d, 1, 1, 1));
  for (std::size_t i = 0; i < v.t.rows(); ++i) {
    for (std::size_t j = 0; j < v.t.cols(); ++j) std::cout << to_string(v.t(i, j)) << (j + 1 < v.t.cols() ? " " : "\n");
  }

  const auto back = restrict(d.projected);
  std::cout << "restriction isomorphic to M: " << (back.module.dim == m.dim) << "\n";
  return 0;
}
