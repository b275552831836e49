#include "indvar/dsl/binder.hpp"

#include <algorithm>

#include "indvar/errors.hpp"
#include "indvar/noether.hpp"
#include "indvar/poset.hpp"
#include "indvar/topology.hpp"

namespace indvar {
namespace dsl {

namespace {

using RuleMap = std::map<std::string, std::shared_ptr<GeneratorRule>>;

/// Translate a parse-time polynomial expression. `own_rule` names the rule
/// being defined (its references become self-references); other rule names
/// resolve through `rules`; `family` references become ambient variables.
PolyExpr translate(const PolyNode& n, const std::string& family, const RuleMap& rules,
                   const std::string& own_rule) {
  switch (n.kind) {
    case PolyNode::Kind::Rat:
      return PolyExpr::constant(n.value);
    case PolyNode::Kind::Scalar:
      return PolyExpr::index_scalar(IntExpr::symbol(n.scalar_sym));
    case PolyNode::Kind::Ref: {
      if (n.name == family) return PolyExpr::var(n.index);
      if (!own_rule.empty() && n.name == own_rule) return PolyExpr::self(n.index);
      if (!own_rule.empty())
        throw NameError(n.loc, "rule '" + own_rule + "' may reference only itself and '" +
                                   family + "', not '" + n.name + "'");
      auto it = rules.find(n.name);
      if (it == rules.end())
        throw NameError(n.loc, "unknown rule or variable family '" + n.name + "'");
      return PolyExpr::rule(it->second, n.index);
    }
    case PolyNode::Kind::Add:
      return PolyExpr::add(translate(n.kids[0], family, rules, own_rule),
                           translate(n.kids[1], family, rules, own_rule));
    case PolyNode::Kind::Sub:
      return PolyExpr::sub(translate(n.kids[0], family, rules, own_rule),
                           translate(n.kids[1], family, rules, own_rule));
    case PolyNode::Kind::Mul:
      return PolyExpr::mul(translate(n.kids[0], family, rules, own_rule),
                           translate(n.kids[1], family, rules, own_rule));
    case PolyNode::Kind::Neg:
      return PolyExpr::neg(translate(n.kids[0], family, rules, own_rule));
    case PolyNode::Kind::Pow:
      return PolyExpr::pow(translate(n.kids[0], family, rules, own_rule), n.exponent);
  }
  throw NameError(n.loc, "malformed expression");
}

/// Evaluate a generator list to factored forms under an index environment.
void eval_items(const std::vector<PolyItem>& items, const std::string& family,
                const RuleMap& rules, IntExpr::Env env, std::vector<FactoredForm>* out) {
  for (const auto& item : items) {
    if (item.is_gens) {
      long lo = item.lo.eval(env);
      long hi = item.hi.eval(env);
      for (long j = lo; j <= hi; ++j) {
        IntExpr::Env inner = env;
        inner[item.binder] = j;
        eval_items(item.body, family, rules, inner, out);
      }
      continue;
    }
    PolyExpr e = translate(item.expr, family, rules, "");
    auto ff = e.factored(env, nullptr);
    if (ff) {
      if (!ff->is_zero() && !ff->is_constant()) out->push_back(std::move(*ff));
      else if (ff->is_constant() && ff->scale != 0)
        out->push_back(*ff);  // nonzero constant generator: the unit ideal
    } else {
      Polynomial p = e.expand(env, nullptr);
      if (!p.is_zero()) out->push_back(FactoredForm::of_poly(std::move(p)));
    }
  }
}

/// Flatten an ideal expression into union parts (each a generator list).
void eval_ideal(const IdealNode& node, const std::string& family, const RuleMap& rules,
                IntExpr::Env env, std::vector<std::vector<FactoredForm>>* parts) {
  switch (node.kind) {
    case IdealNode::Kind::Ideal: {
      std::vector<FactoredForm> gens;
      eval_items(node.gens, family, rules, env, &gens);
      parts->push_back(std::move(gens));
      return;
    }
    case IdealNode::Kind::Union:
      for (const auto& p : node.parts) eval_ideal(p, family, rules, env, parts);
      return;
    case IdealNode::Kind::UnionRange: {
      long lo = node.lo.eval(env);
      long hi = node.hi.eval(env);
      for (long j = lo; j <= hi; ++j) {
        IntExpr::Env inner = env;
        inner[node.binder] = j;
        eval_ideal(node.body[0], family, rules, inner, parts);
      }
      return;
    }
  }
}

LevelSpec eval_level(const IdealNode& node, int k, const std::string& family,
                     const RuleMap& rules) {
  IntExpr::Env env{{"k", k}};
  std::vector<std::vector<FactoredForm>> parts;
  eval_ideal(node, family, rules, env, &parts);
  LevelSpec spec;
  spec.ambient = k;
  if (parts.empty()) {
    // An empty union of varieties is the empty set.
    spec.gens.push_back(FactoredForm::constant(1));
  } else if (parts.size() == 1) {
    spec.gens = std::move(parts[0]);
  } else {
    spec.union_parts = std::move(parts);
  }
  return spec;
}

std::vector<Polynomial> eval_ideal_literal(const IdealNode& node, int ambient,
                                           SrcLoc loc) {
  if (node.kind != IdealNode::Kind::Ideal)
    throw NameError(loc, "an explicit ideal(...) is required here");
  std::vector<FactoredForm> gens;
  try {
    eval_items(node.gens, "x", {}, {}, &gens);
  } catch (const RuleError& err) {
    throw NameError(loc, std::string("ideal literal does not evaluate: ") + err.what());
  }
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(g.expand());
  return Ideal(std::move(out), ambient).generators();
}

RuleMap build_rules(const TowerDecl& decl) {
  RuleMap rules;
  for (const auto& r : decl.rules) {
    std::map<int, Polynomial> bases;
    std::optional<PolyExpr> step;
    for (const auto& e : r.entries) {
      PolyExpr expr = translate(e.expr, decl.var_family, rules, r.name);
      if (e.is_step) {
        if (step) throw NameError(e.loc, "rule '" + r.name + "' has two step entries");
        step = std::move(expr);
      } else {
        try {
          bases[e.base_index] = expr.expand({}, nullptr);
        } catch (const RuleError& err) {
          throw NameError(e.loc, "base level of rule '" + r.name +
                                     "' does not evaluate: " + err.what());
        }
      }
    }
    if (bases.empty())
      throw NameError(r.loc, "rule '" + r.name + "' needs an explicit base level");
    rules[r.name] = GeneratorRule::make(r.name, std::move(bases), std::move(step));
  }
  return rules;
}

Tower build_tower(const TowerDecl& decl, const RuleMap& rules) {
  std::map<int, IdealNode> explicit_levels;
  std::optional<IdealNode> generic_level;
  for (const auto& l : decl.levels) {
    if (l.generic) {
      if (generic_level) throw NameError(l.loc, "two generic level schemas");
      generic_level = l.expr;
    } else {
      explicit_levels[l.index] = l.expr;
    }
  }

  std::string family = decl.var_family;
  Tower tower(decl.name, [explicit_levels, generic_level, family, rules](int k) {
    auto it = explicit_levels.find(k);
    if (it != explicit_levels.end()) return eval_level(it->second, k, family, rules);
    if (generic_level) return eval_level(*generic_level, k, family, rules);
    LevelSpec s;
    s.ambient = k;  // no level declaration: the full affine space
    return s;
  });
  for (const auto& [name, rule] : rules) tower.hold(rule);

  if (!decl.decomposes.empty()) {
    std::map<int, DecomposeDecl> explicit_dec;
    std::optional<DecomposeDecl> generic_dec;
    for (const auto& d : decl.decomposes) {
      if (d.generic)
        generic_dec = d;
      else
        explicit_dec[d.index] = d;
    }
    tower.set_decomposition(
        [explicit_dec, generic_dec, family,
         rules](int k) -> std::optional<std::vector<ComponentSpec>> {
          const DecomposeDecl* d = nullptr;
          auto it = explicit_dec.find(k);
          if (it != explicit_dec.end())
            d = &it->second;
          else if (generic_dec)
            d = &*generic_dec;
          if (!d) return std::nullopt;
          std::vector<ComponentSpec> specs;
          for (const auto& c : d->components) {
            if (c.ideal.kind != IdealNode::Kind::Ideal)
              throw NameError(c.loc, "components must be explicit ideal(...) expressions");
            ComponentSpec s;
            IntExpr::Env env{{"k", k}};
            eval_items(c.ideal.gens, family, rules, env, &s.gens);
            s.declared_only = c.declared;
            s.note = c.note;
            specs.push_back(std::move(s));
          }
          return specs;
        });
  }
  return tower;
}

Certificate wrap_normalization(const Normalization& N) {
  Certificate cert = Certificate::make(Verdict::CertifiedTrue, 0);
  std::string coords = "coordinates:";
  for (const auto& c : N.coordinates) coords += " " + c.preview();
  cert.note(coords);
  cert.note("attempts: " + std::to_string(N.attempts));
  for (const auto& e : N.finiteness.evidence) cert.note(e);
  for (const auto& p : N.coordinates) cert.witnesses.push_back(p);
  return cert;
}

}  // namespace

BoundSpec bind_spec(const SpecFile& spec) {
  BoundSpec bound;
  std::map<std::string, RuleMap> tower_rules;
  for (const auto& t : spec.towers) {
    if (bound.towers.count(t.name))
      throw NameError(t.loc, "duplicate tower '" + t.name + "'");
    RuleMap rules = build_rules(t);
    bound.towers.emplace(t.name, build_tower(t, rules));
    tower_rules[t.name] = std::move(rules);
  }

  std::map<std::string, std::string> tower_family;
  for (const auto& t : spec.towers) tower_family[t.name] = t.var_family;

  for (const auto& c : spec.closed_sets) {
    auto tit = bound.towers.find(c.tower);
    if (tit == bound.towers.end())
      throw NameError(c.loc, "unknown tower '" + c.tower + "'");
    if (bound.closed_sets.count(c.name))
      throw NameError(c.loc, "duplicate closed set '" + c.name + "'");
    std::map<int, IdealNode> explicit_levels;
    std::optional<IdealNode> generic_level;
    for (const auto& l : c.levels) {
      if (l.expr.kind != IdealNode::Kind::Ideal)
        throw NameError(l.loc, "closed-set levels must be explicit ideal(...) lists");
      if (l.generic)
        generic_level = l.expr;
      else
        explicit_levels[l.index] = l.expr;
    }
    RuleMap rules = tower_rules[c.tower];
    std::string family = tower_family[c.tower];
    std::string cname = c.name;
    ClosedSetTower y(c.name, tit->second,
                     [explicit_levels, generic_level, family, rules, cname](int k) {
                       const IdealNode* node = nullptr;
                       auto it = explicit_levels.find(k);
                       if (it != explicit_levels.end())
                         node = &it->second;
                       else if (generic_level)
                         node = &*generic_level;
                       if (!node)
                         throw RuleError("closed set '" + cname + "' has no level " +
                                         std::to_string(k));
                       std::vector<FactoredForm> gens;
                       IntExpr::Env env{{"k", k}};
                       eval_items(node->gens, family, rules, env, &gens);
                       return gens;
                     });
    for (const auto& [name, rule] : rules) {
      (void)name;
      // Keep rules alive through the underlying tower handle.
      tit->second.hold(rule);
    }
    bound.closed_sets.emplace(c.name, std::move(y));
  }

  for (const auto& c : spec.checks) {
    BoundCheck bc;
    bc.kind = c.kind;
    bc.depth = c.depth;
    bc.degbound = c.degbound;
    bc.seed = c.seed;
    bc.expect = c.expect;

    auto tower_of = [&](const std::string& name) -> Tower {
      auto it = bound.towers.find(name);
      if (it == bound.towers.end())
        throw NameError(c.loc, "unknown tower '" + name + "'");
      return it->second;
    };
    auto closed_of = [&](const std::string& name) -> ClosedSetTower {
      auto it = bound.closed_sets.find(name);
      if (it == bound.closed_sets.end())
        throw NameError(c.loc, "unknown closed set '" + name + "'");
      return it->second;
    };

    switch (c.kind) {
      case CheckDecl::Kind::Filtration: {
        Tower t = tower_of(c.target);
        bc.kind_name = "filtration";
        bc.label = c.target;
        bc.run = [t](const RunParams& p) { return check_filtration(t, p.depth); };
        break;
      }
      case CheckDecl::Kind::IndClosed: {
        ClosedSetTower y = closed_of(c.target);
        bc.kind_name = "indclosed";
        bc.label = c.target;
        bc.run = [y](const RunParams& p) { return ind_closed_check(y, p.depth); };
        break;
      }
      case CheckDecl::Kind::Density: {
        tower_of(c.target);
        auto& rules = tower_rules[c.target];
        auto rit = rules.find(c.rule_name);
        if (rit == rules.end())
          throw NameError(c.loc, "tower '" + c.target + "' has no rule '" +
                                     c.rule_name + "'");
        std::shared_ptr<GeneratorRule> rule = rit->second;
        bc.kind_name = "density";
        bc.label = c.target + "." + c.rule_name;
        bc.run = [rule](const RunParams& p) {
          return density_certificate_power_chain(*rule, p.depth, p.degbound);
        };
        break;
      }
      case CheckDecl::Kind::Separation: {
        ClosedSetTower y = closed_of(c.target);
        std::vector<mpq_class> point = c.point;
        bc.kind_name = "separation";
        bc.label = c.target;
        bc.run = [y, point](const RunParams& p) {
          SeparationProblem sp{y, point, p.depth, p.degbound};
          return separation_witness(sp);
        };
        break;
      }
      case CheckDecl::Kind::Stabilize: {
        Tower t = tower_of(c.target);
        std::vector<FactoredForm> hf;
        eval_items(c.h_polys, tower_family[c.target], tower_rules[c.target], {}, &hf);
        std::vector<Polynomial> h;
        for (const auto& f : hf) h.push_back(f.expand());
        int from = c.from;
        bc.kind_name = "stabilize";
        bc.label = c.target;
        bc.run = [t, h, from](const RunParams& p) {
          return stabilization_check(t, h, from, p.depth);
        };
        break;
      }
      case CheckDecl::Kind::Directed: {
        Tower t = tower_of(c.target);
        bc.kind_name = "directed";
        bc.label = c.target;
        bc.run = [t](const RunParams& p) {
          ComponentPoset P = component_poset(t, p.depth);
          return is_directed(P, p.depth);
        };
        break;
      }
      case CheckDecl::Kind::Irreducible: {
        Tower t = tower_of(c.target);
        bc.kind_name = "irreducible";
        bc.label = c.target;
        bc.run = [t](const RunParams& p) {
          return irreducibility_verdict(t, p.depth, p.degbound);
        };
        break;
      }
      case CheckDecl::Kind::Noether: {
        bc.kind_name = "noether " + c.noether_sub;
        if (c.noether_sub == "normalize") {
          Ideal I(eval_ideal_literal(c.ideals[0], c.ambient, c.loc), c.ambient);
          bc.label = I.str() + " ambient " + std::to_string(c.ambient);
          bc.run = [I](const RunParams& p) {
            return wrap_normalization(noether_normalize(I, p.seed));
          };
        } else if (c.noether_sub == "extend") {
          Ideal IZ(eval_ideal_literal(c.ideals[0], c.ambient, c.loc), c.ambient);
          Ideal IY(eval_ideal_literal(c.ideals[1], c.ambient, c.loc), c.ambient);
          bc.label = IZ.str() + " within " + IY.str();
          bc.run = [IZ, IY](const RunParams& p) {
            Normalization nz = noether_normalize(IZ, p.seed);
            Normalization ny = extend_normalization(IY, IZ, nz, p.seed);
            Certificate cert = wrap_normalization(ny);
            cert.note("extends a normalization of the subvariety: " +
                      wrap_normalization(nz).evidence[0]);
            return cert;
          };
        } else if (c.noether_sub == "witness") {
          Tower t = tower_of(c.target);
          std::vector<mpq_class> point = c.point;
          std::optional<mpq_class> coeffs = c.coeffs;
          bc.label = c.target;
          bc.run = [t, point, coeffs](const RunParams& p) {
            return main_prop_witness(t, point, p.depth, p.degbound, p.seed, coeffs).bundle;
          };
        } else {
          throw NameError(c.loc, "unknown noether operation '" + c.noether_sub + "'");
        }
        break;
      }
    }
    bound.checks.push_back(std::move(bc));
  }
  return bound;
}

}  // namespace dsl
}  // namespace indvar
