// SPDX-License-Identifier: Apache-2.0
// Loads a user claim file and verifies each claim over non-isomorphic trees
// up to a given order.
//
//   sample_custom_claim samples/data/variants.claims 8

#include <fstream>
#include <iostream>
#include <sstream>

#include "treeidx/treeidx.hpp"

int main(int argc, char** argv) {
  using namespace treeidx;
  if (argc < 2) {
    std::cerr << "usage: " << argv[0] << " CLAIM_FILE [NMAX]\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  std::stringstream text;
  text << in.rdbuf();
  const std::size_t nmax = argc > 2 ? std::stoul(argv[2]) : 8;
  try {
    CensusCache cache;
    for (const auto& claim : parse_claims(text.str())) {
      const Report r = verify_claim(claim, {ExhaustiveDomain{1, nmax}, Isomorphism::NonIsomorphic}, {}, cache);
      std::cout << claim.id << ": " << to_string(r.verdict) << " (" << r.satisfied << "/" << r.in_scope
                << " in scope)\n";
      for (const auto& c : r.counterexamples)
        std::cout << "  n=" << c.n << " lhs=" << to_decimal(c.lhs) << " rhs=" << to_decimal(c.rhs) << "\n";
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
}
