#pragma once

#include <vector>

#include <gmpxx.h>

#include "indvar/closed_set.hpp"

namespace indvar {

/// Is Y levelwise compatible with the tower: Y_{k+1} cut down to level k
/// equals Y_k (as varieties, both radical containments), and Y_k sits inside
/// X_k? CERTIFIED_TRUE makes Y a closed set of the colimit in the level-wise
/// (ind-)topology at this truncation.
Certificate ind_closed_check(const ClosedSetTower& Y, int depth);

/// Search for a regular function of total degree <= degree_bound at level
/// `depth` that vanishes on Y levelwise; the claim under test is "the point
/// lies in the closure of Y cut out by such functions".
struct SeparationProblem {
  ClosedSetTower Y;
  std::vector<mpq_class> point;  // coordinates of a rational point
  int depth = 6;
  int degree_bound = 8;
  long max_space_dim = 5000;
};

/// Exact linear algebra over Q on the coefficient space: L = { phi of degree
/// <= D : restrict(phi, n_k) in J_k for k <= depth }. A member with
/// phi(p) != 0 refutes closure membership (CERTIFIED_FALSE with witness);
/// otherwise INCONCLUSIVE with dim L recorded (L = {0} is the strongest
/// density evidence this search can produce). Vanishing on Y is encoded by
/// ideal membership in J_k, which only shrinks L, so witnesses stay sound.
Certificate separation_witness(const SeparationProblem& problem);

/// The power-chain density certificate over the full affine space tower:
/// verifies that (a) every f_k is prime by the graph criterion, (b)
/// restrict(f_{k+1}, k) = f_k^2 exactly, (c) deg f_k = 2^{k-1}; concludes
/// that a compatible function of degree <= degree_bound vanishing on all
/// V(f_k) is forced into arbitrarily high powers (f_k^{2^i}) and hence
/// vanishes, provided 2^{depth-1} > degree_bound. Hypothesis failures are
/// reported in the verdict, not thrown.
Certificate density_certificate_power_chain(const GeneratorRule& f_rule, int depth,
                                            int degree_bound);

/// Distinct rational points k*e1 on the x1-axis: any polynomial of total
/// degree <= degree_bound vanishing at more than degree_bound of them
/// vanishes on the whole line.
Certificate line_density_certificate(const std::vector<mpq_class>& axis_points,
                                     int degree_bound);

/// Zariski-local stabilization: on the open set where some h_j is nonzero,
/// do the levels stop growing from level `from` on, i.e. is
/// X_{n+1} ∩ D(h_j) ⊆ X_n for all from <= n < depth? Encoded as
/// g * h_j in sqrt(I_{n+1}) for every generator g of the embedded X_n.
Certificate stabilization_check(const Tower& T, const std::vector<Polynomial>& h,
                                int from, int depth);

/// Monomials of total degree <= bound in x_1..x_n, ascending canonical order.
std::vector<Monomial> monomials_up_to_degree(int n, int bound);

}  // namespace indvar
