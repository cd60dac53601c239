// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

#include "treeidx/claim.hpp"

namespace treeidx {

// Built-in claims. Formulas that index the degree sequence with
// i = 2..n-1 or treat d_1 and d_n as distinct vertices are scoped to n >= 3.
inline constexpr std::string_view kRegistryText = R"claims(
(claim eq2_m1_upper (>= n 2)
  (<= M1 (max (* (- n 1) (+ Delta (/ (- n 1) Delta)))
              (/ (* (- n 1) (+ n 3)) 2)))
  (statement "M1 <= max{(n-1)(Delta + (n-1)/Delta), (n-1)(n+3)/2}"))

(claim lemma1_star_irr star
  (= irr (* (- n 1) (- n 2)))
  (statement "the star of order n has irr = (n-1)(n-2)"))

(claim star_max_irr all
  (unique-extremal max irr star)
  (statement "among trees of order n the star is the unique maximizer of irr"))

(claim ghalavand_total (> irr 0)
  (<= irr_T (* (/ (* n n) 4) irr))
  (statement "irr_T <= (n^2/4) irr")
  (note "trees with irr = 0 are out of scope"))

(claim hy1_caterpillar_max all
  (arrangement max irr)
  (statement "a prescribed ordering of spine degrees maximizes irr among caterpillars with that spine multiset")
  (note "the prescribed ordering does not define a unique permutation; the true maximizing arrangements are reported"))

(claim hy2_caterpillar_min all
  (arrangement min irr monotone distinct)
  (statement "the caterpillar whose spine degrees are strictly monotone minimizes irr among caterpillars with that spine multiset")
  (note "spine multisets with repeated degrees are out of scope")
  (note "the prescribed ordering is read as monotone spine degrees along the path"))

(claim sigma_identity all
  (= sigma (- F (* 2 M2)))
  (= (mod sigma 2) 0)
  (statement "sigma = F - 2 M2, and sigma is even"))

(claim pro_se1_monotone all
  (class-monotone irr)
  (statement "for degree-sequence classes of the same order with sum(D_i) <= sum(D_j), irr(T_Di) <= irr(T_Dj)")
  (note "irr of a class is evaluated both as the class minimum and as the class maximum"))

(claim le_sigma2_n4 (= n 4)
  (= sigma (+ (sum i 1 2 (* (+ (d i) 1) (^ (- (d i) 1) 2)))
              (sum i 1 3 (^ (- (d i) (d (+ i 1))) 2))
              (sum i 2 3 (* (+ (d i) 2) (^ (- (d i) 1) 2)))
              -2))
  (statement "order-4 sigma formula in terms of d_1..d_4")
  (note "scope is n = 4")
  (note "the consecutive-difference sum runs over i = 1..3 so that d_{i+1} stays inside the sequence"))

(claim classoftreessigma_exists (support-other 3 10)
  (exists-lower sigma)
  (statement "a tree in T(n, Delta) with a support vertex of degree in (3, 10) other than a maximum-degree vertex is not a sigma minimizer of its class"))

(claim strongsigma_exists (strong-support-other 3)
  (exists-lower sigma)
  (statement "a tree in T(n, Delta) with a strong support vertex of degree >= 3 other than a maximum-degree vertex is not a sigma minimizer of its class"))

(claim mainalb2_formula (>= n 3)
  (= irr (+ (^ (d 1) 2) (^ (d n) 2)
            (sum i 2 (- n 1) (^ (d i) 2))
            (sum i 2 (- n 1) (d i))
            (d n) (- (d 1)) (* -2 n) -2))
  (statement "irr = d_1^2 + d_n^2 + sum_{i=2}^{n-1} d_i^2 + sum_{i=2}^{n-1} d_i + d_n - d_1 - 2n - 2"))

(claim thm_sigma_formula (>= n 3)
  (= sigma (+ (* (+ (d 1) 1) (^ (- (d 1) 1) 2))
              (* (+ (d n) 1) (^ (- (d n) 1) 2))
              (sum i 2 (- n 1) (* (+ (d i) 2) (^ (- (d i) 1) 2)))
              (sum i 2 (- n 1) (^ (- (d i) (d (+ i 1))) 2))
              (* 2 n) -2))
  (statement "sigma = sum_{i in {1,n}} (d_i+1)(d_i-1)^2 + sum_{i=2}^{n-1} (d_i+2)(d_i-1)^2 + sum_{i=2}^{n-1} (d_i - d_{i+1})^2 + 2n - 2"))

(claim prozagn1_lower (>= n 3)
  (>= irr (+ M1 (* Delta (- Delta 1))))
  (statement "irr >= M1 + Delta(Delta-1)"))

(claim prozagn2_lower (>= n 3)
  (>= irr (- (+ (* 2 (sum i 1 n (binom (d i) 2))) (/ (* 4 m) (- n 1)))
             (* Delta (- Delta 1))))
  (statement "irr >= 2 sum C(d_i, 2) + 4m/(n-1) - Delta(Delta-1)"))

(claim prozagrebn1_combined (and (>= n 3) (forall i 2 (- n 1) (= (d i) lambda)))
  (>= (+ irr M1) (+ (sum i 2 (- n 1) (d i)) (^ lambda 2)))
  (statement "if d_2 = ... = d_{n-1} = lambda = (Delta+delta)/2 then irr + M1 >= sum_{i=2}^{n-1} d_i + lambda^2"))

(claim mainalb3_formula (>= n 3)
  (= irr (+ M1 (sum i 2 (- n 1) (d i)) (d n) (- (d 1)) (* -2 n) -2))
  (statement "irr = M1 + sum_{i=2}^{n-1} d_i + d_n - d_1 - 2n - 2"))

(claim mainalb4_upper (>= Delta 2)
  (<= irr (+ (* delta (+ (/ (* 2 delta) (- Delta 1)) Delta -1))
             (* Delta (- Delta 1))))
  (statement "irr <= delta(2 delta/(Delta-1) + Delta - 1) + Delta(Delta-1)")
  (note "stated for degree-regular trees, but it uses Delta - 1 as a denominator and no tree with an edge is regular apart from P2; scope widened to all trees with Delta >= 2"))

(claim thmalbn1_lower (>= n 3)
  (>= irr (- M1 (/ (+ (* 2 m n n (- Delta 1)) (- delta 1)) (+ n Delta))))
  (statement "irr >= M1 - (2 m n^2 (Delta-1) + delta - 1)/(n + Delta)"))

(claim abstract_formula (and (>= n 3) (forall i 2 (- n 1) (= (d i) lambda)))
  (= irr (+ (^ (d 1) 2) (^ (d n) 2) (* (- n 2) (^ lambda 2))
            (sum i 2 (- n 1) (d i))
            (d n) (- (d 1)) (* -2 n) -2))
  (statement "if d_2 = ... = d_{n-1} = lambda then irr = d_1^2 + d_n^2 + (n-2) lambda^2 + sum_{i=2}^{n-1} d_i + d_n - d_1 - 2n - 2")
  (note "registered only under the equal-middle-degrees premise"))

(claim prozagnsigman1_lower (>= n 3)
  (>= sigma (+ M1 (* n (^ Delta 2) (- Delta 1)) m))
  (statement "sigma >= M1 + n Delta^2 (Delta-1) + m"))

(claim prozagrebn2_combined (and (>= n 3) (forall i 2 (- n 1) (= (d i) lambda)))
  (>= (+ sigma M1) (+ (sum i 2 (- n 1) (d i)) (^ lambda 2)))
  (statement "if d_2 = ... = d_{n-1} = lambda then sigma + M1 >= sum_{i=2}^{n-1} d_i + lambda^2"))

(claim thm_sigman3_formula (>= n 3)
  (= sigma (+ M1 (^ (d 1) 3) (^ (d n) 3) (- (d 1)) (- (d n))
              (- (^ (d 1) 2)) (- (^ (d n) 2))
              (sum i 2 (- n 1) (^ (- (d i) (d (+ i 1))) 2))
              4))
  (statement "sigma = M1 + d_1^3 + d_n^3 - d_1 - d_n - d_1^2 - d_n^2 + sum_{i=2}^{n-1} (d_i - d_{i+1})^2 + 4"))

(claim thmsign1_lower (>= n 3)
  (>= sigma (- M1 (/ (+ (* 2 m n n (- Delta 1)) (- delta 1)) (+ n Delta))))
  (statement "sigma >= M1 - (2 m n^2 (Delta-1) + delta - 1)/(n + Delta)"))

(claim m1_edge_identity all
  (= (sum i 1 n (^ (d i) 2)) (sum-edges (+ du dv)))
  (statement "sum_v d_v^2 = sum_{uv in E} (d_u + d_v)"))

(claim m1_binom_identity all
  (= M1 (+ (* 2 (sum i 1 n (binom (d i) 2))) (* 2 m)))
  (statement "M1 = 2 sum C(d_i, 2) + 2m"))

(claim erdos_gallai all
  (= graphic 1)
  (statement "the degree sequence satisfies the Erdos-Gallai inequalities")
  (note "classical form: sorted non-increasingly, sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i) for every k"))
)claims";

inline const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = parse_claims(kRegistryText);
  return claims;
}

}  // namespace treeidx
