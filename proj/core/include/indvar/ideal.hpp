#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "indvar/order.hpp"
#include "indvar/polynomial.hpp"

namespace indvar {

/// A reduced Gröbner basis: monic, auto-reduced, elements sorted by leading
/// monomial ascending. Unique for a fixed ideal and order.
struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial> elements;

  bool empty() const { return elements.empty(); }
  bool contains_one() const {
    return elements.size() == 1 && elements[0].is_one();
  }
};

/// An ideal of k[x_1..x_ambient]: a generator list plus a cached reduced
/// Gröbner basis per monomial order. Values are immutable and cheap to copy;
/// the cache is populated once per order under a lock.
class Ideal {
 public:
  Ideal() : Ideal({}, 0) {}
  Ideal(std::vector<Polynomial> generators, int ambient);

  const std::vector<Polynomial>& generators() const { return data_->gens; }
  int ambient() const { return data_->ambient; }
  bool is_zero_ideal() const { return data_->gens.empty(); }

  /// Reduced Gröbner basis, computed once per order and cached.
  const GroebnerBasis& groebner(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  /// Ideal membership: the normal form against the reduced basis vanishes.
  bool contains(const Polynomial& f) const;
  /// Radical membership via the Rabinowitsch trick.
  bool radical_contains(const Polynomial& f) const;
  bool is_unit_ideal() const { return groebner().contains_one(); }

  /// Equality of ideals (reduced bases agree element-wise).
  bool equals(const Ideal& o) const;

  std::string str() const;

 private:
  struct Data {
    std::vector<Polynomial> gens;
    int ambient = 0;
    mutable std::mutex mu;
    mutable std::map<MonomialOrder, GroebnerBasis> cache;
  };
  std::shared_ptr<Data> data_;
};

}  // namespace indvar
