// SPDX-License-Identifier: Apache-2.0
// Prints every degree-based index for the star, the path and a caterpillar of
// the same order, side by side.

#include <iomanip>
#include <iostream>

#include "treeidx/treeidx.hpp"

int main(int argc, char** argv) {
  using namespace treeidx;
  const std::size_t n = argc > 1 ? std::stoul(argv[1]) : 8;
  const std::vector<std::pair<std::string, Tree>> trees = {
      {"star:" + std::to_string(n), make_family(StarSpec{n})},
      {"path:" + std::to_string(n), make_family(PathSpec{n})},
      {"doublestar:" + std::to_string((n - 2) / 2) + "," + std::to_string(n - 2 - (n - 2) / 2),
       make_family(DoubleStarSpec{(n - 2) / 2, n - 2 - (n - 2) / 2})},
  };
  std::cout << std::left << std::setw(18) << "tree" << std::right;
  for (const char* h : {"irr", "irr_T", "M1", "M2", "F", "sigma"}) std::cout << std::setw(8) << h;
  std::cout << "\n";
  for (const auto& [name, t] : trees) {
    const auto v = compute_indices(t);
    std::cout << std::left << std::setw(18) << name << std::right;
    for (const Integer* x : {&v.irr, &v.irr_total, &v.m1, &v.m2, &v.forgotten, &v.sigma})
      std::cout << std::setw(8) << to_decimal(*x);
    std::cout << "\n";
  }
}
