#pragma once

#include <optional>
#include <vector>

#include "indvar/certificate.hpp"
#include "indvar/ideal.hpp"

namespace indvar {
namespace groebner {

/// Per-computation cap on reduction steps; StepLimitError beyond it.
long default_step_limit();
void set_default_step_limit(long limit);

/// Thread-local step accounting for report replay data.
long steps_consumed();
void reset_step_counter();

/// Buchberger completion with the product and chain pair-elimination
/// criteria, normal selection strategy (smallest lcm first, ties by
/// generator index), followed by auto-reduction. Deterministic for a fixed
/// input and order.
GroebnerBasis reduced_basis(const std::vector<Polynomial>& gens,
                            const MonomialOrder& ord,
                            long max_steps = default_step_limit());

/// Remainder of multivariate division: no term of the result is divisible by
/// any leading monomial of G, and f - normal_form(f, G) lies in <G>.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool in_ideal(const Polynomial& f, const Ideal& I);
/// f in sqrt(I), via 1 in I + (1 - y f) with a fresh auxiliary variable.
bool in_radical(const Polynomial& f, const Ideal& I);

/// I ∩ k[variables not in drop], via a block order.
Ideal eliminate(const Ideal& I, const std::vector<VarIndex>& drop);
/// I ∩ J via t*I + (1-t)*J and elimination of t.
Ideal intersect(const Ideal& I, const Ideal& J);
/// I : J^infinity, intersected over single-generator saturations.
Ideal saturate(const Ideal& I, const Ideal& J);

/// Krull dimension of k[x]/I: the largest cardinality of a variable subset
/// meeting no leading-term support. Throws EmptyVarietyError on the unit
/// ideal.
int krull_dimension(const Ideal& I);

/// Is k[x]/I an integral (finite) extension of the subalgebra generated by
/// F? Decided from the block-order basis of (I, y_j - F_j): finiteness holds
/// iff every ambient variable has a basis element whose leading monomial is
/// a pure power of it. The monic relations found are returned as witnesses.
Certificate finiteness_test(const Ideal& I, const std::vector<Polynomial>& F);

/// Kernel of k[y_1..y_l] -> k[x]/I, y_j |-> F_j, returned with y_j renamed
/// to x_j (an ordinary ideal in ambient l).
Ideal algebra_kernel(const std::vector<Polynomial>& F, const Ideal& I);

/// A monic relation p(T) in k[F][T] with p(x_j) in I, extracted from a block
/// basis: `in_tags` lives in the tag variables (T = the pure-power tag),
/// `composed` = p(x_j) as an element of k[x]. Empty when x_j is not integral
/// over k[F] modulo I.
struct MonicRelation {
  Polynomial in_tags;
  Polynomial composed;
  int degree = 0;
};
std::optional<MonicRelation> monic_relation(const Ideal& I,
                                            const std::vector<Polynomial>& F,
                                            VarIndex xj);

}  // namespace groebner
}  // namespace indvar
