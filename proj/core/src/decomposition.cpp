#include "indvar/decomposition.hpp"

#include <algorithm>
#include <set>

namespace indvar {

namespace {

bool in_radical_of_gens(const FactoredForm& candidate,
                        const std::vector<FactoredForm>& target_gens, int ambient) {
  if (candidate.is_zero()) return true;
  if (factored_in_radical(candidate, target_gens)) return true;
  std::vector<Polynomial> gens;
  for (const auto& g : target_gens) gens.push_back(g.expand());
  Ideal I(std::move(gens), ambient);
  return I.radical_contains(candidate.expand());
}

/// The solving handle of one generator: a variable occurring linearly with
/// constant coefficient in (one factor of) the generator.
struct GraphHandle {
  VarIndex var = 0;
  mpq_class coeff = 0;
  const FactorKey* factor = nullptr;
};

std::optional<GraphHandle> graph_handle(const FactoredForm& gen) {
  for (const auto& [key, e] : gen.factors) {
    if (key.is_rule()) {
      auto lin = key.rule->step_linear_variable(key.level);
      if (lin) return GraphHandle{lin->var, lin->coeff, &key};
      const Polynomial& p = key.rule->at(key.level);
      for (VarIndex v : p.support()) {
        if (p.degree_in(v) != 1) continue;
        Polynomial d = p.partial_derivative(v);
        if (d.is_constant() && !d.is_zero())
          return GraphHandle{v, d.constant_coefficient().rational_value(), &key};
      }
      return std::nullopt;
    }
    const Polynomial& p = *key.poly;
    if (p.is_constant()) continue;
    for (VarIndex v : p.support()) {
      if (p.degree_in(v) != 1) continue;
      Polynomial d = p.partial_derivative(v);
      if (d.is_constant() && !d.is_zero())
        return GraphHandle{v, d.constant_coefficient().rational_value(), &key};
    }
    return std::nullopt;
  }
  return std::nullopt;
}

/// Whether the variable can occur in the generator (conservative).
bool may_involve(const FactoredForm& gen, VarIndex v) {
  for (const auto& [key, e] : gen.factors) {
    if (key.is_rule()) {
      if (key.rule->max_var_bound(key.level) >= v) return true;
    } else if (key.poly->involves(v)) {
      return true;
    }
  }
  return false;
}

Coefficient factor_value_with_zeroed(const FactorKey& key, std::vector<Coefficient> p,
                                     VarIndex zeroed) {
  if (zeroed >= 1 && zeroed <= static_cast<VarIndex>(p.size()))
    p[static_cast<std::size_t>(zeroed - 1)] = Coefficient();
  return key.is_rule() ? key.rule->value_at(key.level, p) : key.poly->evaluate(p);
}

}  // namespace

Ideal Component::expanded(int ambient) const {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(g.expand());
  return Ideal(std::move(polys), ambient);
}

std::string Component::label() const {
  if (gens.empty()) return "V(0)";
  std::string s = "V(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].label();
  }
  return s + ")";
}

Certificate component_irreducible(const std::vector<FactoredForm>& gens, int ambient) {
  (void)ambient;
  Certificate cert = Certificate::make(Verdict::CertifiedTrue, 0);
  std::vector<FactoredForm> live;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      cert.verdict = Verdict::Inconclusive;
      cert.note("a generator is a nonzero constant: the unit ideal is not prime");
      return cert;
    }
    live.push_back(g);
  }
  if (live.empty()) {
    cert.note("zero ideal: the whole affine space, prime");
    return cert;
  }
  std::vector<GraphHandle> handles;
  for (const auto& g : live) {
    if (g.factors.size() != 1) {
      cert.verdict = Verdict::Inconclusive;
      cert.note("generator " + g.label() + " is a proper product; criterion inapplicable");
      return cert;
    }
    auto h = graph_handle(g);
    if (!h) {
      cert.verdict = Verdict::Inconclusive;
      cert.note("no linear variable with constant coefficient in " + g.label());
      return cert;
    }
    handles.push_back(*h);
  }
  std::set<VarIndex> vars;
  for (const auto& h : handles) vars.insert(h.var);
  if (vars.size() != handles.size()) {
    cert.verdict = Verdict::Inconclusive;
    cert.note("graph variables collide across generators");
    return cert;
  }
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = 0; j < live.size(); ++j) {
      if (i == j) continue;
      if (may_involve(live[j], handles[i].var)) {
        cert.verdict = Verdict::Inconclusive;
        cert.note("graph variable " + var_name(handles[i].var) +
                  " may occur in another generator");
        return cert;
      }
    }
  }
  std::string line = "triangular graph system:";
  for (std::size_t i = 0; i < live.size(); ++i)
    line += " " + live[i].label() + " solves " + var_name(handles[i].var) + ";";
  cert.note(line + " the quotient is a polynomial ring, so the ideal is prime");
  return cert;
}

namespace {

Certificate verify_parts(const std::vector<FactoredForm>& level_gens, int ambient,
                         const std::vector<Component>& components) {
  Certificate cert = Certificate::make(Verdict::CertifiedTrue, 0);
  if (components.empty()) {
    cert.verdict = Verdict::CertifiedFalse;
    cert.note("no components claimed");
    return cert;
  }
  bool conditional = false;
  for (std::size_t j = 0; j < components.size(); ++j) {
    const Component& c = components[j];
    if (c.declared_only) {
      conditional = true;
      continue;
    }
    if (!c.irreducibility.is(Verdict::CertifiedTrue)) {
      cert.verdict = Verdict::Inconclusive;
      cert.note("component " + std::to_string(j + 1) +
                " carries no irreducibility certificate");
      return cert;
    }
  }

  // Union contains the level: every level generator vanishes on each piece.
  for (std::size_t j = 0; j < components.size(); ++j) {
    for (const auto& g : level_gens) {
      if (!in_radical_of_gens(g, components[j].gens, ambient)) {
        cert.verdict = Verdict::CertifiedFalse;
        cert.note("component " + std::to_string(j + 1) + " = " + components[j].label() +
                  " is not contained in the level variety (" + g.label() +
                  " does not vanish on it)");
        return cert;
      }
    }
  }

  // Level contains the union: every product of one generator per component
  // lies in the radical of the level ideal. A component with the zero ideal
  // is the whole space, so the union is everything and the check is vacuous.
  bool union_is_everything = false;
  for (const auto& c : components) {
    bool all_zero = true;
    for (const auto& g : c.gens)
      if (!g.is_zero()) all_zero = false;
    if (all_zero) union_is_everything = true;
  }
  if (!union_is_everything) {
    std::vector<FactoredForm> products{FactoredForm::constant(1)};
    for (const auto& c : components) {
      std::vector<FactoredForm> next;
      for (const auto& p : products)
        for (const auto& g : c.gens)
          if (!g.is_zero()) next.push_back(p.times(g));
      if (next.size() > 4096)
        throw std::invalid_argument("decomposition product check too large");
      products = std::move(next);
    }
    for (const auto& prod : products) {
      if (!in_radical_of_gens(prod, level_gens, ambient)) {
        cert.verdict = Verdict::CertifiedFalse;
        cert.note("product " + prod.label() +
                  " does not vanish on the level variety: the union misses part of it");
        return cert;
      }
    }
  }

  if (conditional) {
    cert.verdict = Verdict::Conditional;
    cert.note("union equality certified; some components are DECLARED only");
  } else {
    cert.note("union equality certified and every component is certified irreducible");
  }
  return cert;
}

}  // namespace

Certificate verify_decomposition(const Ideal& I, const std::vector<Ideal>& claimed) {
  std::vector<FactoredForm> level_gens;
  for (const auto& g : I.generators()) level_gens.push_back(FactoredForm::of_poly(g));
  std::vector<Component> comps;
  for (const auto& cl : claimed) {
    Component c;
    for (const auto& g : cl.generators()) c.gens.push_back(FactoredForm::of_poly(g));
    c.irreducibility = component_irreducible(c.gens, I.ambient());
    comps.push_back(std::move(c));
  }
  return verify_parts(level_gens, I.ambient(), comps);
}

std::optional<ComponentDecomposition> decompose_level(const Tower& T, int k) {
  const LevelSpec& spec = T.level_spec(k);
  ComponentDecomposition dec;
  dec.level = k;
  dec.ambient = spec.ambient;

  auto build = [&](const std::vector<ComponentSpec>& specs) {
    for (const auto& s : specs) {
      Component c;
      c.gens = s.gens;
      c.declared_only = s.declared_only;
      c.note = s.note;
      if (s.declared_only) {
        c.irreducibility = Certificate::make(Verdict::Conditional, 0);
        c.irreducibility.note("DECLARED: " + s.note);
      } else {
        c.irreducibility = component_irreducible(s.gens, spec.ambient);
      }
      dec.components.push_back(std::move(c));
    }
  };

  auto declared = T.declared_components(k);
  if (declared) {
    build(*declared);
  } else if (!spec.is_union() && spec.gens.size() == 1 && spec.gens[0].factors.size() > 1) {
    // Automatic split of an explicitly factored principal generator.
    std::vector<ComponentSpec> specs;
    for (const auto& [key, e] : spec.gens[0].factors) {
      ComponentSpec s;
      FactoredForm f;
      f.factors.emplace_back(key, 1);
      s.gens.push_back(std::move(f));
      specs.push_back(std::move(s));
    }
    build(specs);
  } else if (!spec.is_union()) {
    // The whole level as a single component, when certifiable.
    ComponentSpec s;
    s.gens = spec.gens;
    Certificate c = component_irreducible(s.gens, spec.ambient);
    if (!c.is(Verdict::CertifiedTrue)) return std::nullopt;
    build({s});
  } else {
    return std::nullopt;
  }

  for (const auto& c : dec.components)
    if (!c.declared_only && !c.irreducibility.is(Verdict::CertifiedTrue))
      return std::nullopt;

  std::vector<FactoredForm> level_gens;
  if (spec.is_union()) {
    for (const auto& g : T.materialize_level(k).ideal.generators())
      level_gens.push_back(FactoredForm::of_poly(g));
  } else {
    level_gens = spec.gens;
  }
  dec.verification = verify_parts(level_gens, spec.ambient, dec.components);
  if (dec.verification.is(Verdict::CertifiedFalse)) return std::nullopt;
  return dec;
}

std::optional<std::vector<Coefficient>> sample_point(
    const Component& c, int ambient, const std::vector<FactoredForm>& avoid,
    int attempts) {
  // One solving handle per generator (first factor suffices: a point where
  // that factor vanishes kills the whole product).
  std::vector<GraphHandle> handles;
  std::set<VarIndex> solved;
  for (const auto& g : c.gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return std::nullopt;  // empty variety
    auto h = graph_handle(g);
    if (!h || h->var > ambient || solved.count(h->var)) return std::nullopt;
    solved.insert(h->var);
    handles.push_back(*h);
  }
  std::vector<VarIndex> free_vars;
  for (VarIndex v = 1; v <= ambient; ++v)
    if (!solved.count(v)) free_vars.push_back(v);

  static const long kVals[] = {0, 1, -1, 2, -2, 3, -3, 5, 7};
  const long base = static_cast<long>(std::size(kVals));
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Coefficient> p(static_cast<std::size_t>(ambient), Coefficient());
    long code = attempt;
    for (VarIndex v : free_vars) {
      p[static_cast<std::size_t>(v - 1)] = Coefficient::rational(kVals[code % base]);
      code /= base;
    }
    // Solve each handle: the factor has shape A + coeff*x_v with A free of
    // x_v, so x_v = -A(p)/coeff where A(p) is the factor's value at x_v = 0.
    for (std::size_t i = 0; i < handles.size(); ++i) {
      Coefficient a = factor_value_with_zeroed(*handles[i].factor, p, handles[i].var);
      p[static_cast<std::size_t>(handles[i].var - 1)] =
          -(a / Coefficient::rational(handles[i].coeff));
    }
    // A posteriori: on the component?
    bool on = true;
    for (const auto& g : c.gens)
      if (!g.value_at(p).is_zero()) {
        on = false;
        break;
      }
    if (!on) continue;
    if (avoid.empty()) return p;
    for (const auto& a : avoid)
      if (!a.value_at(p).is_zero()) return p;
  }
  return std::nullopt;
}

}  // namespace indvar
