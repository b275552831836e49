#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "indvar/closed_set.hpp"
#include "indvar/groebner.hpp"
#include "indvar/tower.hpp"

namespace indvar {

/// A certified Noether normalization: coordinates generating a polynomial
/// subalgebra over which the quotient is finite, the finiteness certificate
/// with its monic relations, and the randomized-search log.
struct Normalization {
  std::vector<Polynomial> coordinates;
  Certificate finiteness;
  std::vector<std::string> retry_log;
  long seed = 0;
  int attempts = 0;
};

/// dim(I) coordinates over which k[x]/I is finite: the coordinate subsets of
/// the right size are tried first (ascending lexicographically), then seeded
/// random linear forms, every attempt certified by finiteness_test and
/// algebraic independence by algebra_kernel. RetryLimitError after
/// max_retries random failures.
Normalization noether_normalize(const Ideal& I, long seed, int max_retries = 20);

/// Extend a normalization of Z = V(I_Z) to Y = V(I_Y) along Z ⊆ Y (same
/// ambient; the containment is verified by radical membership): lift the
/// coordinates unchanged, adjoin for every ambient variable the monic
/// relation it satisfies over them modulo I_Z (an element of I_Z), then
/// remove dependences by perturbing with random multiples of the trailing
/// element until algebra_kernel vanishes, re-certifying finiteness at each
/// step. The first dim Z output coordinates restrict on Z to the input
/// coordinates; the rest vanish on Z.
Normalization extend_normalization(const Ideal& I_Y, const Ideal& I_Z,
                                   const Normalization& N_Z, long seed,
                                   int max_retries = 20);

/// The witness construction for the two-topologies separation: a coordinate
/// flag along the filtration (each level extending the previous, new
/// coordinates vanishing on the previous level), seeded nonzero scalars c_k,
/// and the squaring recursion f_1 = c_1 u_1, f_{k+1} = f_k^2 + c_{k+1} u_{k+1}.
/// Emits Y = union of V(f_k) inside the levels plus the certificate bundle:
/// f_k(x) = 0, the restriction law modulo I_k, nonvanishing of f_k on the
/// declared components through the base point, levelwise closedness of Y,
/// and (over the full affine-space tower) the power-chain density
/// certificate. Reducedness of the local quotients is certified only in the
/// affine-space specialization (primality via the graph criterion);
/// otherwise it is reported UNVERIFIED and the bundle is CONDITIONAL.
struct MainPropWitness {
  std::vector<mpq_class> coefficients;
  std::vector<Polynomial> f;  // f[0] is level 1
  std::vector<Normalization> flag;
  ClosedSetTower closed_set;
  Certificate bundle;
};

MainPropWitness main_prop_witness(const Tower& T, const std::vector<mpq_class>& base_point,
                                  int depth, int degree_bound, long seed,
                                  std::optional<mpq_class> forced_coefficient = std::nullopt,
                                  int max_retries = 20);

}  // namespace indvar
