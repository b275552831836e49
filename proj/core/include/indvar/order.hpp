#pragma once

#include <string>
#include <vector>

#include "indvar/monomial.hpp"

namespace indvar {

/// A monomial order: lex, graded reverse lex, or a block (elimination) order
/// given by a list of variable blocks compared in turn, each with its own
/// inner order, followed by the remaining variables. All are total,
/// multiplicative, and have 1 minimal.
class MonomialOrder {
 public:
  enum class Kind { Lex, GRevLex, Block };

  static MonomialOrder lex();
  static MonomialOrder grevlex();
  /// Single elimination block: variables in `front` dominate the rest.
  static MonomialOrder block(std::vector<VarIndex> front,
                             Kind front_kind = Kind::GRevLex,
                             Kind rest_kind = Kind::GRevLex);
  /// General block order: blocks compared left to right, then the rest.
  static MonomialOrder blocks(std::vector<std::vector<VarIndex>> blocks,
                              std::vector<Kind> block_kinds,
                              Kind rest_kind = Kind::GRevLex);

  Kind kind() const { return kind_; }

  /// <0 when a < b, 0 when equal, >0 when a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& o) const;
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
  /// Strict total order so MonomialOrder can key a cache map.
  bool operator<(const MonomialOrder& o) const;

  std::string str() const;

 private:
  MonomialOrder() = default;

  Kind kind_ = Kind::GRevLex;
  std::vector<std::vector<VarIndex>> blocks_;  // each sorted ascending
  std::vector<Kind> block_kinds_;
  Kind rest_kind_ = Kind::GRevLex;
};

}  // namespace indvar
