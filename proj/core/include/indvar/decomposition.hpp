#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indvar/tower.hpp"

namespace indvar {

/// One piece of a level decomposition with its irreducibility certificate.
struct Component {
  std::vector<FactoredForm> gens;
  bool declared_only = false;
  std::string note;
  Certificate irreducibility;

  Ideal expanded(int ambient) const;
  std::string label() const;
};

struct ComponentDecomposition {
  int level = 0;
  int ambient = 0;
  std::vector<Component> components;
  Certificate verification;
};

/// Irreducibility certificate without factorization: the zero ideal (an
/// affine space), or a triangular system in which every generator owns a
/// variable occurring linearly with constant coefficient and in no other
/// generator, so the quotient is a polynomial ring. Sufficient, not
/// necessary: INCONCLUSIVE otherwise.
Certificate component_irreducible(const std::vector<FactoredForm>& gens, int ambient);

/// Does the level decompose as the union of the claimed components?
/// CERTIFIED_TRUE: both radical containments hold generator-wise and every
/// component carries an irreducibility certificate. DECLARED components
/// downgrade to CONDITIONAL; a broken union is CERTIFIED_FALSE.
Certificate verify_decomposition(const Ideal& I, const std::vector<Ideal>& claimed);

/// The verified decomposition of one tower level. Sources, in order:
/// user-declared components; an automatic split of a principal generator
/// whose factored form lists certified factors; the whole level as a single
/// certified component. nullopt when none applies.
std::optional<ComponentDecomposition> decompose_level(const Tower& T, int k);

/// Deterministic search for a rational point of the component at which some
/// `avoid` generator is nonzero (empty `avoid` = any point). Solves the
/// graph/triangular structure of the generators numerically, verifying
/// membership a posteriori, so rule-defined hypersurfaces never expand.
std::optional<std::vector<Coefficient>> sample_point(
    const Component& c, int ambient, const std::vector<FactoredForm>& avoid,
    int attempts = 200);

}  // namespace indvar
