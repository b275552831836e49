#include "indvar/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace indvar {

namespace {

// Compare two monomials restricted to a variable subset (nullptr = all
// variables not consumed by earlier blocks, passed as an exclusion list).
struct Slice {
  const Monomial& m;
  const std::vector<VarIndex>* include;  // sorted; nullptr = complement mode
  const std::vector<std::vector<VarIndex>>* exclude;

  bool contains(VarIndex v) const {
    if (include)
      return std::binary_search(include->begin(), include->end(), v);
    for (const auto& blk : *exclude)
      if (std::binary_search(blk.begin(), blk.end(), v)) return false;
    return true;
  }
};

int slice_degree(const Slice& s) {
  int d = 0;
  for (const auto& [v, e] : s.m.exponents())
    if (s.contains(v)) d += e;
  return d;
}

int compare_lex(const Slice& a, const Slice& b) {
  // Scan ascending variable index; the larger exponent at the first
  // difference wins.
  auto i = a.m.exponents().begin();
  auto j = b.m.exponents().begin();
  const auto ae = a.m.exponents().end();
  const auto be = b.m.exponents().end();
  while (true) {
    while (i != ae && !a.contains(i->first)) ++i;
    while (j != be && !b.contains(j->first)) ++j;
    if (i == ae && j == be) return 0;
    if (i == ae) return -1;
    if (j == be) return 1;
    if (i->first != j->first) return i->first < j->first ? 1 : -1;
    if (i->second != j->second) return i->second > j->second ? 1 : -1;
    ++i;
    ++j;
  }
}

int compare_grevlex(const Slice& a, const Slice& b) {
  int da = slice_degree(a), db = slice_degree(b);
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: scan descending; smaller exponent at the first difference
  // from the tail means the larger monomial.
  auto i = a.m.exponents().rbegin();
  auto j = b.m.exponents().rbegin();
  const auto ae = a.m.exponents().rend();
  const auto be = b.m.exponents().rend();
  while (true) {
    while (i != ae && !a.contains(i->first)) ++i;
    while (j != be && !b.contains(j->first)) ++j;
    if (i == ae && j == be) return 0;
    if (i == ae) return 1;   // b has a trailing variable a lacks: b smaller
    if (j == be) return -1;
    if (i->first != j->first) return i->first > j->first ? -1 : 1;
    if (i->second != j->second) return i->second > j->second ? -1 : 1;
    ++i;
    ++j;
  }
}

int compare_slices(MonomialOrder::Kind k, const Slice& a, const Slice& b) {
  return k == MonomialOrder::Kind::Lex ? compare_lex(a, b) : compare_grevlex(a, b);
}

}  // namespace

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::grevlex() {
  MonomialOrder o;
  o.kind_ = Kind::GRevLex;
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<VarIndex> front, Kind front_kind,
                                   Kind rest_kind) {
  return blocks({std::move(front)}, {front_kind}, rest_kind);
}

MonomialOrder MonomialOrder::blocks(std::vector<std::vector<VarIndex>> blocks,
                                    std::vector<Kind> block_kinds, Kind rest_kind) {
  if (blocks.size() != block_kinds.size())
    throw std::invalid_argument("one inner order per block required");
  MonomialOrder o;
  o.kind_ = Kind::Block;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  o.blocks_ = std::move(blocks);
  o.block_kinds_ = std::move(block_kinds);
  o.rest_kind_ = rest_kind;
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ != Kind::Block) {
    Slice sa{a, nullptr, nullptr}, sb{b, nullptr, nullptr};
    static const std::vector<std::vector<VarIndex>> kNone;
    sa.exclude = &kNone;
    sb.exclude = &kNone;
    return compare_slices(kind_, sa, sb);
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    Slice sa{a, &blocks_[i], nullptr}, sb{b, &blocks_[i], nullptr};
    int c = compare_slices(block_kinds_[i], sa, sb);
    if (c != 0) return c;
  }
  Slice sa{a, nullptr, &blocks_}, sb{b, nullptr, &blocks_};
  return compare_slices(rest_kind_, sa, sb);
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
  return kind_ == o.kind_ && blocks_ == o.blocks_ &&
         block_kinds_ == o.block_kinds_ && rest_kind_ == o.rest_kind_;
}

bool MonomialOrder::operator<(const MonomialOrder& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  if (rest_kind_ != o.rest_kind_) return rest_kind_ < o.rest_kind_;
  if (block_kinds_ != o.block_kinds_) return block_kinds_ < o.block_kinds_;
  return blocks_ < o.blocks_;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GRevLex:
      return "grevlex";
    case Kind::Block: {
      std::string s = "block(";
      for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
          if (j) s += ",";
          s += var_name(blocks_[i][j]);
        }
      }
      s += ")";
      return s;
    }
  }
  return "?";
}

}  // namespace indvar
