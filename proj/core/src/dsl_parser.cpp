#include <cctype>
#include <sstream>

#include "indvar/dsl/ast.hpp"

namespace indvar {
namespace dsl {

std::string Diagnostic::render() const {
  std::string s = "parse error at line " + std::to_string(loc.line) + ", column " +
                  std::to_string(loc.col) + ": " + message;
  if (!expected.empty()) {
    s += " (expected";
    for (const auto& e : expected) s += " " + e;
    s += ")";
  }
  return s;
}

namespace {

struct Token {
  enum class Kind { Ident, Int, String, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  SrcLoc loc;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip();
    Token t;
    t.loc = loc_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        t.text += advance();
      t.kind = Token::Kind::Ident;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        t.text += advance();
      t.kind = Token::Kind::Int;
      return t;
    }
    if (c == '"') {
      advance();
      while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n')
        t.text += advance();
      if (pos_ >= text_.size() || text_[pos_] != '"')
        throw ParseError({t.loc, "unterminated string literal", {}});
      advance();
      t.kind = Token::Kind::String;
      return t;
    }
    if (c == '.' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '.') {
      advance();
      advance();
      t.kind = Token::Kind::Punct;
      t.text = "..";
      return t;
    }
    static const std::string kPunct = "{}()[];,=^*+-.:/";
    if (kPunct.find(c) != std::string::npos) {
      t.kind = Token::Kind::Punct;
      t.text = std::string(1, advance());
      return t;
    }
    throw ParseError({t.loc, std::string("unexpected character '") + c + "'", {}});
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++loc_.line;
      loc_.col = 1;
    } else {
      ++loc_.col;
    }
    return c;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  SrcLoc loc_{1, 1};
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { shift(); }

  SpecFile parse_file() {
    SpecFile spec;
    while (!at_end()) {
      if (at_ident("tower")) {
        spec.order.emplace_back(0, spec.towers.size());
        spec.towers.push_back(parse_tower());
      } else if (at_ident("closedset")) {
        spec.order.emplace_back(1, spec.closed_sets.size());
        spec.closed_sets.push_back(parse_closedset());
      } else if (at_ident("check")) {
        spec.order.emplace_back(2, spec.checks.size());
        spec.checks.push_back(parse_check());
      } else {
        fail("top-level declaration", {"tower", "closedset", "check"});
      }
    }
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected = {}) {
    std::string got = cur_.kind == Token::Kind::End ? "end of input" : "'" + cur_.text + "'";
    throw ParseError({cur_.loc, "unexpected " + got + " while reading " + what,
                      std::move(expected)});
  }

  void shift() { cur_ = lex_.next(); }
  bool at_end() const { return cur_.kind == Token::Kind::End; }
  bool at_punct(const char* p) const {
    return cur_.kind == Token::Kind::Punct && cur_.text == p;
  }
  bool at_ident(const char* s) const {
    return cur_.kind == Token::Kind::Ident && cur_.text == s;
  }
  bool at_int() const { return cur_.kind == Token::Kind::Int; }

  void expect_punct(const char* p, const char* what) {
    if (!at_punct(p)) fail(what, {std::string("'") + p + "'"});
    shift();
  }

  std::string expect_ident(const char* what) {
    if (cur_.kind != Token::Kind::Ident) fail(what, {"identifier"});
    std::string s = cur_.text;
    shift();
    return s;
  }

  long expect_int(const char* what) {
    if (!at_int()) fail(what, {"integer"});
    if (cur_.text.size() > 9) throw ParseError({cur_.loc, "integer literal too large", {}});
    long v = std::stol(cur_.text);
    shift();
    return v;
  }

  mpq_class parse_rat(const char* what) {
    bool neg = false;
    if (at_punct("-")) {
      neg = true;
      shift();
    }
    if (!at_int()) fail(what, {"rational literal"});
    mpz_class num(cur_.text);
    shift();
    mpz_class den(1);
    if (at_punct("/")) {
      shift();
      if (!at_int()) fail(what, {"denominator"});
      den = mpz_class(cur_.text);
      if (den == 0) throw ParseError({cur_.loc, "zero denominator", {}});
      shift();
    }
    mpq_class q(num, den);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }

  struct DepthGuard {
    Parser* p;
    explicit DepthGuard(Parser* parser) : p(parser) {
      if (++p->depth_ > 200)
        throw ParseError({p->cur_.loc, "expression nested too deeply", {}});
    }
    ~DepthGuard() { --p->depth_; }
  };

  // ---- index expressions -------------------------------------------------
  IntExpr parse_idx() {
    DepthGuard g(this);
    IntExpr e = parse_idx_term();
    while (at_punct("+") || at_punct("-")) {
      bool plus = at_punct("+");
      shift();
      IntExpr rhs = parse_idx_term();
      e = plus ? IntExpr::add(std::move(e), std::move(rhs))
               : IntExpr::sub(std::move(e), std::move(rhs));
    }
    return e;
  }

  IntExpr parse_idx_term() {
    DepthGuard g(this);
    IntExpr e = parse_idx_atom();
    while (at_punct("*")) {
      shift();
      e = IntExpr::mul(std::move(e), parse_idx_atom());
    }
    return e;
  }

  IntExpr parse_idx_atom() {
    DepthGuard g(this);
    if (at_punct("-")) {
      shift();
      return IntExpr::neg(parse_idx_atom());
    }
    if (at_int()) return IntExpr::constant(expect_int("index"));
    if (cur_.kind == Token::Kind::Ident) return IntExpr::symbol(expect_ident("index"));
    if (at_punct("(")) {
      shift();
      IntExpr e = parse_idx();
      expect_punct(")", "index expression");
      return e;
    }
    fail("index expression", {"integer", "identifier", "'('"});
  }

  // ---- polynomial expressions ---------------------------------------------
  PolyNode parse_poly() {
    DepthGuard g(this);
    PolyNode e = parse_poly_term();
    while (at_punct("+") || at_punct("-")) {
      bool plus = at_punct("+");
      SrcLoc loc = cur_.loc;
      shift();
      PolyNode rhs = parse_poly_term();
      PolyNode out;
      out.kind = plus ? PolyNode::Kind::Add : PolyNode::Kind::Sub;
      out.loc = loc;
      out.kids = {std::move(e), std::move(rhs)};
      e = std::move(out);
    }
    return e;
  }

  PolyNode parse_poly_term() {
    DepthGuard g(this);
    PolyNode e = parse_poly_unary();
    while (at_punct("*")) {
      SrcLoc loc = cur_.loc;
      shift();
      PolyNode rhs = parse_poly_unary();
      PolyNode out;
      out.kind = PolyNode::Kind::Mul;
      out.loc = loc;
      out.kids = {std::move(e), std::move(rhs)};
      e = std::move(out);
    }
    return e;
  }

  PolyNode parse_poly_unary() {
    DepthGuard g(this);
    if (at_punct("-")) {
      SrcLoc loc = cur_.loc;
      shift();
      PolyNode out;
      out.kind = PolyNode::Kind::Neg;
      out.loc = loc;
      out.kids = {parse_poly_unary()};
      return out;
    }
    return parse_poly_power();
  }

  PolyNode parse_poly_power() {
    DepthGuard g(this);
    PolyNode base = parse_poly_atom();
    if (at_punct("^")) {
      SrcLoc loc = cur_.loc;
      shift();
      long e = expect_int("exponent");
      PolyNode out;
      out.kind = PolyNode::Kind::Pow;
      out.exponent = static_cast<int>(e);
      out.loc = loc;
      out.kids = {std::move(base)};
      return out;
    }
    return base;
  }

  PolyNode parse_poly_atom() {
    DepthGuard g(this);
    PolyNode out;
    out.loc = cur_.loc;
    if (at_int()) {
      mpz_class num(cur_.text);
      shift();
      mpz_class den(1);
      if (at_punct("/")) {
        shift();
        if (!at_int()) fail("rational literal", {"denominator"});
        den = mpz_class(cur_.text);
        if (den == 0) throw ParseError({cur_.loc, "zero denominator", {}});
        shift();
      }
      out.kind = PolyNode::Kind::Rat;
      out.value = mpq_class(num, den);
      out.value.canonicalize();
      return out;
    }
    if (cur_.kind == Token::Kind::Ident) {
      std::string name = cur_.text;
      shift();
      if (at_punct("[")) {
        shift();
        out.kind = PolyNode::Kind::Ref;
        out.name = name;
        out.index = parse_idx();
        expect_punct("]", "indexed reference");
        return out;
      }
      out.kind = PolyNode::Kind::Scalar;
      out.scalar_sym = name;
      return out;
    }
    if (at_punct("(")) {
      shift();
      PolyNode e = parse_poly();
      expect_punct(")", "parenthesized expression");
      return e;
    }
    fail("polynomial expression", {"integer", "identifier", "'('", "'-'"});
  }

  std::vector<PolyItem> parse_poly_list() {
    std::vector<PolyItem> items;
    while (true) {
      items.push_back(parse_poly_item());
      if (at_punct(",")) {
        shift();
        continue;
      }
      break;
    }
    return items;
  }

  PolyItem parse_poly_item() {
    PolyItem item;
    item.loc = cur_.loc;
    if (at_ident("gens")) {
      shift();
      expect_punct("(", "gens comprehension");
      item.is_gens = true;
      item.binder = expect_ident("gens binder");
      expect_punct("=", "gens range");
      item.lo = parse_idx();
      if (!at_punct("..")) fail("gens range", {"'..'"});
      shift();
      item.hi = parse_idx();
      expect_punct(":", "gens body");
      item.body = parse_poly_list();
      expect_punct(")", "gens comprehension");
      return item;
    }
    item.expr = parse_poly();
    return item;
  }

  // ---- ideal expressions ---------------------------------------------------
  IdealNode parse_ideal() {
    DepthGuard g(this);
    IdealNode node;
    node.loc = cur_.loc;
    if (at_ident("ideal")) {
      shift();
      expect_punct("(", "ideal");
      node.kind = IdealNode::Kind::Ideal;
      if (!at_punct(")")) node.gens = parse_poly_list();
      expect_punct(")", "ideal");
      return node;
    }
    if (at_ident("union")) {
      shift();
      expect_punct("(", "union");
      // Indexed form: IDENT '=' idx '..' idx ':' idealexpr
      if (cur_.kind == Token::Kind::Ident && !at_ident("ideal") && !at_ident("union")) {
        node.kind = IdealNode::Kind::UnionRange;
        node.binder = expect_ident("union binder");
        expect_punct("=", "union range");
        node.lo = parse_idx();
        if (!at_punct("..")) fail("union range", {"'..'"});
        shift();
        node.hi = parse_idx();
        expect_punct(":", "union body");
        node.body.push_back(parse_ideal());
        expect_punct(")", "union");
        return node;
      }
      node.kind = IdealNode::Kind::Union;
      node.parts.push_back(parse_ideal());
      while (at_punct(",")) {
        shift();
        node.parts.push_back(parse_ideal());
      }
      expect_punct(")", "union");
      return node;
    }
    fail("ideal expression", {"ideal", "union"});
  }

  // ---- declarations ---------------------------------------------------------
  TowerDecl parse_tower() {
    TowerDecl t;
    t.loc = cur_.loc;
    shift();  // tower
    t.name = expect_ident("tower name");
    expect_punct("{", "tower body");
    while (!at_punct("}")) {
      if (at_ident("vars")) {
        shift();
        t.var_family = expect_ident("variable family");
        expect_punct(";", "vars declaration");
      } else if (at_ident("rule")) {
        parse_rule_entry(t);
      } else if (at_ident("level")) {
        t.levels.push_back(parse_level());
      } else if (at_ident("decompose")) {
        t.decomposes.push_back(parse_decompose());
      } else {
        fail("tower item", {"vars", "rule", "level", "decompose", "'}'"});
      }
    }
    shift();  // }
    return t;
  }

  void parse_rule_entry(TowerDecl& t) {
    SrcLoc loc = cur_.loc;
    shift();  // rule
    std::string name = expect_ident("rule name");
    expect_punct("[", "rule index");
    RuleEntry entry;
    entry.loc = loc;
    if (at_int()) {
      entry.is_step = false;
      entry.base_index = static_cast<int>(expect_int("rule base level"));
    } else {
      std::string sym = expect_ident("rule index");
      if (sym != "k") fail("rule index", {"'k'", "integer"});
      expect_punct("+", "rule step index");
      long one = expect_int("rule step index");
      if (one != 1) throw ParseError({loc, "rule step must be indexed k+1", {}});
      entry.is_step = true;
    }
    expect_punct("]", "rule index");
    expect_punct("=", "rule definition");
    entry.expr = parse_poly();
    expect_punct(";", "rule definition");
    RuleDecl* decl = nullptr;
    for (auto& r : t.rules)
      if (r.name == name) decl = &r;
    if (!decl) {
      t.rules.push_back(RuleDecl{name, {}, loc});
      decl = &t.rules.back();
    }
    decl->entries.push_back(std::move(entry));
  }

  LevelDecl parse_level() {
    LevelDecl l;
    l.loc = cur_.loc;
    shift();  // level
    expect_ident("level name");
    expect_punct("[", "level index");
    if (at_int()) {
      l.generic = false;
      l.index = static_cast<int>(expect_int("level index"));
    } else {
      std::string sym = expect_ident("level index");
      if (sym != "k") fail("level index", {"'k'", "integer"});
      l.generic = true;
    }
    expect_punct("]", "level index");
    expect_punct("=", "level definition");
    l.expr = parse_ideal();
    expect_punct(";", "level definition");
    return l;
  }

  DecomposeDecl parse_decompose() {
    DecomposeDecl d;
    d.loc = cur_.loc;
    shift();  // decompose
    if (!at_ident("level")) fail("decompose", {"level"});
    shift();
    if (at_int()) {
      d.generic = false;
      d.index = static_cast<int>(expect_int("decompose level"));
    } else {
      std::string sym = expect_ident("decompose level");
      if (sym != "k") fail("decompose level", {"'k'", "integer"});
      d.generic = true;
    }
    expect_punct(":", "decompose components");
    while (true) {
      ComponentNode c;
      c.loc = cur_.loc;
      c.ideal = parse_ideal();
      if (at_ident("declared")) {
        shift();
        expect_punct("(", "declared note");
        if (cur_.kind != Token::Kind::String) fail("declared note", {"string"});
        c.declared = true;
        c.note = cur_.text;
        shift();
        expect_punct(")", "declared note");
      }
      d.components.push_back(std::move(c));
      if (at_punct(",")) {
        shift();
        continue;
      }
      break;
    }
    expect_punct(";", "decompose declaration");
    return d;
  }

  ClosedSetDecl parse_closedset() {
    ClosedSetDecl c;
    c.loc = cur_.loc;
    shift();  // closedset
    c.name = expect_ident("closed set name");
    if (!at_ident("in")) fail("closed set", {"in"});
    shift();
    c.tower = expect_ident("ambient tower name");
    expect_punct("{", "closed set body");
    while (!at_punct("}")) {
      if (at_ident("level")) {
        c.levels.push_back(parse_level());
      } else {
        fail("closed set item", {"level", "'}'"});
      }
    }
    shift();
    return c;
  }

  CheckDecl parse_check() {
    CheckDecl c;
    c.loc = cur_.loc;
    shift();  // check
    std::string kind = expect_ident("check kind");
    if (kind == "filtration") {
      c.kind = CheckDecl::Kind::Filtration;
      c.target = expect_ident("tower name");
    } else if (kind == "indclosed") {
      c.kind = CheckDecl::Kind::IndClosed;
      c.target = expect_ident("closed set name");
    } else if (kind == "density") {
      c.kind = CheckDecl::Kind::Density;
      c.target = expect_ident("tower name");
      expect_punct(".", "rule reference");
      c.rule_name = expect_ident("rule name");
    } else if (kind == "separation") {
      c.kind = CheckDecl::Kind::Separation;
      c.target = expect_ident("closed set name");
      parse_point(c);
    } else if (kind == "stabilize") {
      c.kind = CheckDecl::Kind::Stabilize;
      c.target = expect_ident("tower name");
      if (!at_ident("h")) fail("stabilize", {"h"});
      shift();
      expect_punct("(", "h list");
      c.h_polys = parse_poly_list();
      expect_punct(")", "h list");
      if (!at_ident("from")) fail("stabilize", {"from"});
      shift();
      c.from = static_cast<int>(expect_int("stabilize start level"));
    } else if (kind == "directed") {
      c.kind = CheckDecl::Kind::Directed;
      c.target = expect_ident("tower name");
    } else if (kind == "irreducible") {
      c.kind = CheckDecl::Kind::Irreducible;
      c.target = expect_ident("tower name");
    } else if (kind == "noether") {
      c.kind = CheckDecl::Kind::Noether;
      c.noether_sub = expect_ident("noether operation");
      if (c.noether_sub == "normalize") {
        c.ideals.push_back(parse_ideal());
        if (!at_ident("ambient")) fail("noether normalize", {"ambient"});
        shift();
        c.ambient = static_cast<int>(expect_int("ambient dimension"));
      } else if (c.noether_sub == "extend") {
        c.ideals.push_back(parse_ideal());
        if (!at_ident("within")) fail("noether extend", {"within"});
        shift();
        c.ideals.push_back(parse_ideal());
        if (!at_ident("ambient")) fail("noether extend", {"ambient"});
        shift();
        c.ambient = static_cast<int>(expect_int("ambient dimension"));
      } else if (c.noether_sub == "witness") {
        c.target = expect_ident("tower name");
        parse_point(c);
      } else {
        fail("noether operation", {"normalize", "extend", "witness"});
      }
    } else {
      fail("check kind", {"filtration", "indclosed", "density", "separation",
                          "stabilize", "directed", "irreducible", "noether"});
    }
    // Common parameters.
    while (cur_.kind == Token::Kind::Ident) {
      if (at_ident("depth")) {
        shift();
        c.depth = static_cast<int>(expect_int("depth"));
      } else if (at_ident("degbound")) {
        shift();
        c.degbound = static_cast<int>(expect_int("degbound"));
      } else if (at_ident("seed")) {
        shift();
        c.seed = expect_int("seed");
      } else if (at_ident("coeffs")) {
        shift();
        c.coeffs = parse_rat("coefficient");
      } else if (at_ident("expect")) {
        shift();
        std::string v = expect_ident("verdict");
        auto verdict = verdict_from_string(v);
        if (!verdict)
          throw ParseError({c.loc, "unknown verdict '" + v + "'",
                            {"CERTIFIED_TRUE", "CERTIFIED_FALSE", "FAILS_UP_TO_DEPTH",
                             "CONDITIONAL", "INCONCLUSIVE"}});
        c.expect = verdict;
      } else {
        fail("check parameter", {"depth", "degbound", "seed", "coeffs", "expect", "';'"});
      }
    }
    expect_punct(";", "check declaration");
    return c;
  }

  void parse_point(CheckDecl& c) {
    if (!at_ident("point")) fail("point", {"point"});
    shift();
    expect_punct("(", "point");
    if (!at_punct(")")) {
      c.point.push_back(parse_rat("coordinate"));
      while (at_punct(",")) {
        shift();
        c.point.push_back(parse_rat("coordinate"));
      }
    }
    expect_punct(")", "point");
  }

  Lexer lex_;
  Token cur_;
  int depth_ = 0;

  friend struct DepthGuard;
};

}  // namespace

SpecFile parse_spec(const std::string& text) {
  Parser p(text);
  return p.parse_file();
}

namespace {

void print_poly(const PolyNode& n, std::ostream& os);

void print_poly_item(const PolyItem& item, std::ostream& os) {
  if (item.is_gens) {
    os << "gens(" << item.binder << " = " << item.lo.str() << ".." << item.hi.str()
       << " : ";
    for (std::size_t i = 0; i < item.body.size(); ++i) {
      if (i) os << ", ";
      print_poly_item(item.body[i], os);
    }
    os << ")";
  } else {
    print_poly(item.expr, os);
  }
}

void print_poly(const PolyNode& n, std::ostream& os) {
  switch (n.kind) {
    case PolyNode::Kind::Rat:
      os << n.value.get_str();
      return;
    case PolyNode::Kind::Ref:
      os << n.name << "[" << n.index.str() << "]";
      return;
    case PolyNode::Kind::Scalar:
      os << n.scalar_sym;
      return;
    case PolyNode::Kind::Add:
      os << "(";
      print_poly(n.kids[0], os);
      os << " + ";
      print_poly(n.kids[1], os);
      os << ")";
      return;
    case PolyNode::Kind::Sub:
      os << "(";
      print_poly(n.kids[0], os);
      os << " - ";
      print_poly(n.kids[1], os);
      os << ")";
      return;
    case PolyNode::Kind::Mul:
      os << "(";
      print_poly(n.kids[0], os);
      os << " * ";
      print_poly(n.kids[1], os);
      os << ")";
      return;
    case PolyNode::Kind::Neg:
      os << "(-";
      print_poly(n.kids[0], os);
      os << ")";
      return;
    case PolyNode::Kind::Pow:
      print_poly(n.kids[0], os);
      os << "^" << n.exponent;
      return;
  }
}

void print_ideal(const IdealNode& n, std::ostream& os) {
  switch (n.kind) {
    case IdealNode::Kind::Ideal:
      os << "ideal(";
      for (std::size_t i = 0; i < n.gens.size(); ++i) {
        if (i) os << ", ";
        print_poly_item(n.gens[i], os);
      }
      os << ")";
      return;
    case IdealNode::Kind::Union:
      os << "union(";
      for (std::size_t i = 0; i < n.parts.size(); ++i) {
        if (i) os << ", ";
        print_ideal(n.parts[i], os);
      }
      os << ")";
      return;
    case IdealNode::Kind::UnionRange:
      os << "union(" << n.binder << " = " << n.lo.str() << ".." << n.hi.str() << " : ";
      print_ideal(n.body[0], os);
      os << ")";
      return;
  }
}

void print_level(const LevelDecl& l, std::ostream& os) {
  os << "  level I[";
  if (l.generic)
    os << "k";
  else
    os << l.index;
  os << "] = ";
  print_ideal(l.expr, os);
  os << ";\n";
}

}  // namespace

std::string pretty_print(const SpecFile& spec) {
  std::ostringstream os;
  for (const auto& [kind, idx] : spec.order) {
    if (kind == 0) {
      const TowerDecl& t = spec.towers[idx];
      os << "tower " << t.name << " {\n";
      os << "  vars " << t.var_family << ";\n";
      for (const auto& r : t.rules) {
        for (const auto& e : r.entries) {
          os << "  rule " << r.name << "[";
          if (e.is_step)
            os << "k+1";
          else
            os << e.base_index;
          os << "] = ";
          print_poly(e.expr, os);
          os << ";\n";
        }
      }
      for (const auto& l : t.levels) print_level(l, os);
      for (const auto& d : t.decomposes) {
        os << "  decompose level ";
        if (d.generic)
          os << "k";
        else
          os << d.index;
        os << ": ";
        for (std::size_t i = 0; i < d.components.size(); ++i) {
          if (i) os << ", ";
          print_ideal(d.components[i].ideal, os);
          if (d.components[i].declared) os << " declared(\"" << d.components[i].note << "\")";
        }
        os << ";\n";
      }
      os << "}\n";
    } else if (kind == 1) {
      const ClosedSetDecl& c = spec.closed_sets[idx];
      os << "closedset " << c.name << " in " << c.tower << " {\n";
      for (const auto& l : c.levels) print_level(l, os);
      os << "}\n";
    } else {
      const CheckDecl& c = spec.checks[idx];
      os << "check ";
      switch (c.kind) {
        case CheckDecl::Kind::Filtration:
          os << "filtration " << c.target;
          break;
        case CheckDecl::Kind::IndClosed:
          os << "indclosed " << c.target;
          break;
        case CheckDecl::Kind::Density:
          os << "density " << c.target << "." << c.rule_name;
          break;
        case CheckDecl::Kind::Separation:
          os << "separation " << c.target << " point (";
          for (std::size_t i = 0; i < c.point.size(); ++i)
            os << (i ? ", " : "") << c.point[i].get_str();
          os << ")";
          break;
        case CheckDecl::Kind::Stabilize:
          os << "stabilize " << c.target << " h(";
          for (std::size_t i = 0; i < c.h_polys.size(); ++i) {
            if (i) os << ", ";
            print_poly_item(c.h_polys[i], os);
          }
          os << ") from " << c.from;
          break;
        case CheckDecl::Kind::Directed:
          os << "directed " << c.target;
          break;
        case CheckDecl::Kind::Irreducible:
          os << "irreducible " << c.target;
          break;
        case CheckDecl::Kind::Noether:
          os << "noether " << c.noether_sub;
          if (c.noether_sub == "normalize") {
            os << " ";
            print_ideal(c.ideals[0], os);
            os << " ambient " << c.ambient;
          } else if (c.noether_sub == "extend") {
            os << " ";
            print_ideal(c.ideals[0], os);
            os << " within ";
            print_ideal(c.ideals[1], os);
            os << " ambient " << c.ambient;
          } else {
            os << " " << c.target << " point (";
            for (std::size_t i = 0; i < c.point.size(); ++i)
              os << (i ? ", " : "") << c.point[i].get_str();
            os << ")";
          }
          break;
      }
      if (c.depth) os << " depth " << *c.depth;
      if (c.degbound) os << " degbound " << *c.degbound;
      if (c.seed) os << " seed " << *c.seed;
      if (c.coeffs) os << " coeffs " << c.coeffs->get_str();
      if (c.expect) os << " expect " << to_string(*c.expect);
      os << ";\n";
    }
  }
  return os.str();
}

}  // namespace dsl
}  // namespace indvar
