// Writes the worked examples as JSON inputs for the command-line tool.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hopfpar/catalog.hpp"
#include "hopfpar/serialize.hpp"

using namespace hopfpar;

namespace {

void write(const std::filesystem::path& dir, const std::string& name, const io::json& j) {
  std::ofstream(dir / name) << io::dump(j);
  std::cout << (dir / name).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir);

  write(dir, "sweedler_h4.json", io::to_json(sweedler_h4()));
  write(dir, "dual_c2_111.json", io::to_json(catalog::dual_c2_partial(1, 1, 1)));
  write(dir, "w2.json", io::to_json(w_n_module(2)));
  write(dir, "w3.json", io::to_json(w_n_module(3)));
  write(dir, "graded_projection.json", io::to_json(catalog::dual_c2_graded_projection(1, 1, 1)));
  const Mat s = lower_shift(2);
  write(dir, "sweedler_doubled_projection.json", io::to_json(catalog::sweedler_doubled_projection(s, s)));
  write(dir, "algebra_dual_c2_half.json", io::to_json(catalog::dual_c2_half()));
  for (const auto& ex : catalog::induced_examples()) {
    std::string file = "algebra_" + ex.name + ".json";
    for (auto& ch : file)
      if (ch == '-') ch = '_';
    write(dir, file, io::to_json(ex.induced()));
  }

  // not a partial representation: pi(p0) = 1/3 violates t(t - 1)(2t - 1) = 0
  const PartialModule bad{builtin("kC2-dual"), 1, {Mat{{Scalar(1, 3)}}, Mat{{Scalar(2, 3)}}}};
  write(dir, "not_partial.json", io::to_json(bad));
  return 0;
}
