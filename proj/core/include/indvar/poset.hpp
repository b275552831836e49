#pragma once

#include <map>
#include <string>
#include <vector>

#include "indvar/decomposition.hpp"

namespace indvar {

/// Irreducible components of all levels up to a depth, ordered by inclusion
/// across levels. Relations are decided by: the structural factored test
/// (TRUE), a rational witness point escaping the candidate superset (FALSE),
/// or expanded radical membership.
class ComponentPoset {
 public:
  struct Node {
    int level = 0;
    int index = 0;
    bool operator==(const Node& o) const { return level == o.level && index == o.index; }
    bool operator<(const Node& o) const {
      return std::pair(level, index) < std::pair(o.level, o.index);
    }
  };

  int depth() const { return static_cast<int>(decs_.size()); }
  const ComponentDecomposition& at_level(int k) const { return decs_[static_cast<std::size_t>(k - 1)]; }
  const Component& comp(Node n) const {
    return at_level(n.level).components[static_cast<std::size_t>(n.index)];
  }
  std::vector<Node> nodes() const;

  /// C_a contained in C_b (requires a.level <= b.level).
  bool leq(Node a, Node b) const;

  std::string node_label(Node n) const;

  friend ComponentPoset component_poset(const Tower& T, int depth);

 private:
  std::vector<ComponentDecomposition> decs_;
  std::map<std::pair<Node, Node>, bool> rel_;
  // Keeps the tower state (and with it the generator rules referenced by
  // the components' factored forms) alive for the poset's lifetime.
  std::shared_ptr<const void> owner_;
};

/// Build the poset; every level must admit a verified decomposition
/// (declared, auto-split, or single certified component), otherwise
/// std::invalid_argument.
ComponentPoset component_poset(const Tower& T, int depth);

/// The directedness condition at truncation: every pair of nodes has an
/// upper bound within depth. CERTIFIED_TRUE, or FAILS_UP_TO_DEPTH
/// when a pair without an upper bound grows along disjoint chains separated
/// by witness points at every level (a structural obstruction), otherwise
/// INCONCLUSIVE.
Certificate is_directed(const ComponentPoset& P, int depth);

/// The irreducibility verdict at truncation:
///  - CERTIFIED_TRUE (irreducible) when the poset is directed, or when some
///    maximal component chain is dense against every other component
///    (axis-line components certified by the point-count argument);
///  - CERTIFIED_FALSE (reducible) when two chains of components are both
///    levelwise-closed compatible subtowers covering every level and each
///    misses a rational point of the other;
///  - INCONCLUSIVE otherwise. Evidence carries the chain (component index
///    per level).
Certificate irreducibility_verdict(const Tower& T, int depth, int degree_bound,
                                   int component_bound = 8);

/// Rational roots of a univariate polynomial (exact; divisor-based with an
/// integer-scan fallback).
std::vector<mpq_class> rational_roots(const Polynomial& univariate, VarIndex var);

}  // namespace indvar
