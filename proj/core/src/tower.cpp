#include "indvar/tower.hpp"

#include <algorithm>

#include "indvar/errors.hpp"

namespace indvar {

struct Tower::State {
  std::string name;
  LevelFn fn;
  DecompositionFn decomposition;
  std::vector<std::shared_ptr<const void>> held;
  mutable std::mutex mu;
  mutable std::map<int, LevelSpec> spec_memo;
  mutable std::map<int, TowerLevel> level_memo;
};

Tower::Tower(std::string name, LevelFn fn) : st_(std::make_shared<State>()) {
  st_->name = std::move(name);
  st_->fn = std::move(fn);
}

Tower Tower::affine_space(std::string name) {
  return Tower(std::move(name), [](int k) {
    LevelSpec s;
    s.ambient = k;
    return s;
  });
}

Tower Tower::principal(std::string name, std::shared_ptr<const GeneratorRule> rule) {
  const GeneratorRule* raw = rule.get();
  Tower t(std::move(name), [raw](int k) {
    LevelSpec s;
    s.ambient = k;
    s.gens.push_back(FactoredForm::of_rule(raw, k));
    return s;
  });
  t.hold(rule);
  return t;
}

Tower Tower::constant(std::string name, Ideal ideal, int ambient) {
  return Tower(std::move(name), [ideal, ambient](int) {
    LevelSpec s;
    s.ambient = ambient;
    for (const auto& g : ideal.generators()) s.gens.push_back(FactoredForm::of_poly(g));
    return s;
  });
}

Tower Tower::from_levels(std::string name, std::vector<TowerLevel> levels) {
  return Tower(std::move(name), [levels](int k) {
    if (k < 1 || k > static_cast<int>(levels.size()))
      throw RuleError("explicit tower has no level " + std::to_string(k));
    LevelSpec s;
    s.ambient = levels[static_cast<std::size_t>(k) - 1].ambient;
    for (const auto& g : levels[static_cast<std::size_t>(k) - 1].ideal.generators())
      s.gens.push_back(FactoredForm::of_poly(g));
    return s;
  });
}

const std::string& Tower::name() const { return st_->name; }

const LevelSpec& Tower::level_spec(int k) const {
  if (k < 1) throw RuleError("levels are indexed from 1");
  std::lock_guard<std::mutex> lock(st_->mu);
  auto it = st_->spec_memo.find(k);
  if (it == st_->spec_memo.end()) it = st_->spec_memo.emplace(k, st_->fn(k)).first;
  return it->second;
}

TowerLevel Tower::materialize_level(int k) const {
  {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto it = st_->level_memo.find(k);
    if (it != st_->level_memo.end()) return it->second;
  }
  const LevelSpec& spec = level_spec(k);
  TowerLevel lvl;
  lvl.ambient = spec.ambient;
  if (spec.is_union()) {
    std::optional<Ideal> acc;
    for (const auto& part : spec.union_parts) {
      std::vector<Polynomial> gens;
      for (const auto& f : part) gens.push_back(f.expand());
      Ideal part_ideal(std::move(gens), spec.ambient);
      acc = acc ? groebner::intersect(*acc, part_ideal) : part_ideal;
    }
    lvl.ideal = acc ? *acc : Ideal({}, spec.ambient);
  } else {
    std::vector<Polynomial> gens;
    for (const auto& f : spec.gens) gens.push_back(f.expand());
    lvl.ideal = Ideal(std::move(gens), spec.ambient);
  }
  std::lock_guard<std::mutex> lock(st_->mu);
  return st_->level_memo.emplace(k, lvl).first->second;
}

void Tower::set_decomposition(DecompositionFn fn) {
  st_->decomposition = std::move(fn);
}

std::optional<std::vector<ComponentSpec>> Tower::declared_components(int k) const {
  if (!st_->decomposition) return std::nullopt;
  return st_->decomposition(k);
}

void Tower::hold(std::shared_ptr<const void> owner) {
  st_->held.push_back(std::move(owner));
}

RegularFunctionTower::RegularFunctionTower(std::string name,
                                           std::function<Polynomial(int)> value_rule)
    : name_(std::move(name)), rule_(std::move(value_rule)) {}

Polynomial RegularFunctionTower::at(int k) const { return rule_(k); }

namespace {

/// All factored generators of a level; for union levels the expanded ideal's
/// generators are used (union levels are small by construction).
std::vector<FactoredForm> level_generators(const Tower& T, int k) {
  const LevelSpec& spec = T.level_spec(k);
  if (!spec.is_union()) return spec.gens;
  std::vector<FactoredForm> gens;
  for (const auto& g : T.materialize_level(k).ideal.generators())
    gens.push_back(FactoredForm::of_poly(g));
  return gens;
}

std::optional<FactoredForm> restrict_factored(const FactoredForm& f, int keep) {
  FactoredForm out = FactoredForm::constant(f.scale);
  for (const auto& [key, e] : f.factors) {
    std::optional<FactoredForm> rf;
    if (key.is_rule()) {
      rf = key.rule->restricted(key.level, keep);
    } else {
      rf = FactoredForm::of_poly(key.poly->restrict_to_level(keep));
    }
    if (!rf) return std::nullopt;
    out = out.times(rf->power(e));
    if (out.is_zero()) return out;
  }
  return out;
}

}  // namespace

bool generator_in_level_radical(const FactoredForm& candidate, const Tower& T, int k) {
  if (candidate.is_zero()) return true;
  std::vector<FactoredForm> target = level_generators(T, k);
  if (factored_in_radical(candidate, target)) return true;
  Ideal I = T.materialize_level(k).ideal;
  if (I.is_zero_ideal()) return candidate.expand().is_zero();
  return I.radical_contains(candidate.expand());
}

Certificate check_filtration(const Tower& T, int depth) {
  Certificate cert = Certificate::make(Verdict::CertifiedTrue, depth);
  for (int k = 1; k < depth; ++k) {
    const LevelSpec& lo = T.level_spec(k);
    const LevelSpec& hi = T.level_spec(k + 1);
    if (hi.ambient < lo.ambient) {
      cert.verdict = Verdict::CertifiedFalse;
      cert.note("ambient dimension decreases from level " + std::to_string(k));
      return cert;
    }
    for (const auto& g : level_generators(T, k + 1)) {
      std::optional<FactoredForm> restricted = restrict_factored(g, lo.ambient);
      bool ok;
      if (restricted && factored_in_radical(*restricted, level_generators(T, k))) {
        ok = true;
      } else if (restricted) {
        ok = generator_in_level_radical(*restricted, T, k);
      } else {
        Polynomial r = g.expand().restrict_to_level(lo.ambient);
        ok = generator_in_level_radical(FactoredForm::of_poly(r), T, k);
      }
      if (!ok) {
        cert.verdict = Verdict::CertifiedFalse;
        cert.note("level " + std::to_string(k) + ": generator " + g.label() +
                  " of level " + std::to_string(k + 1) +
                  " does not vanish on X_" + std::to_string(k));
        return cert;
      }
    }
    cert.note("X_" + std::to_string(k) + " in X_" + std::to_string(k + 1) +
              ": every level-" + std::to_string(k + 1) +
              " generator vanishes on X_" + std::to_string(k));
  }
  cert.steps = groebner::steps_consumed();
  return cert;
}

Certificate check_regular_function(const RegularFunctionTower& phi, const Tower& T,
                                   int depth) {
  Certificate cert = Certificate::make(Verdict::CertifiedTrue, depth);
  for (int k = 1; k < depth; ++k) {
    TowerLevel lvl = T.materialize_level(k);
    Polynomial diff = phi.at(k + 1).restrict_to_level(lvl.ambient) - phi.at(k);
    bool ok = diff.is_zero() || lvl.ideal.contains(diff);
    if (!ok) {
      cert.verdict = Verdict::CertifiedFalse;
      cert.note("restrict(phi_" + std::to_string(k + 1) + ") - phi_" +
                std::to_string(k) + " = " + diff.preview() + " not in I_" +
                std::to_string(k));
      return cert;
    }
    cert.note("level " + std::to_string(k) + ": compatible");
  }
  return cert;
}

namespace {

/// X_i of T contained in level j of U, both embedded in A^max.
bool level_contained(const Tower& T, int i, const Tower& U, int j) {
  TowerLevel a = T.materialize_level(i);
  TowerLevel b = U.materialize_level(j);
  std::vector<Polynomial> constraints = b.ideal.generators();
  for (int v = b.ambient + 1; v <= a.ambient; ++v)
    constraints.push_back(Polynomial::variable(v));
  for (const auto& h : constraints) {
    Polynomial r = h.restrict_to_level(a.ambient);
    if (r.is_zero()) continue;
    if (a.ideal.is_zero_ideal()) return false;
    if (!a.ideal.radical_contains(r)) return false;
  }
  return true;
}

/// A deterministic stream of small rational points on X_i, found through the
/// zero ideal or not at all (general point search is the component sampler's
/// job; towers used with interleaves in anger are small).
std::optional<std::vector<Coefficient>> witness_point_on_level(const Tower& T, int i,
                                                               const Tower& U, int j) {
  TowerLevel a = T.materialize_level(i);
  TowerLevel b = U.materialize_level(j);
  static const long kVals[] = {1, 2, -1, 3, -2, 5, 0};
  for (long v : kVals) {
    std::vector<Coefficient> p(static_cast<std::size_t>(a.ambient), Coefficient());
    if (!p.empty()) p[0] = Coefficient::rational(v);
    bool on = true;
    for (const auto& g : a.ideal.generators())
      if (!g.evaluate(p).is_zero()) {
        on = false;
        break;
      }
    if (!on) continue;
    // Off the other level (some embedded constraint nonzero)?
    bool off = false;
    for (const auto& h : b.ideal.generators())
      if (!h.evaluate(p).is_zero()) {
        off = true;
        break;
      }
    for (int v2 = b.ambient + 1; v2 <= a.ambient && !off; ++v2)
      if (!p[static_cast<std::size_t>(v2 - 1)].is_zero()) off = true;
    if (off) return p;
  }
  return std::nullopt;
}

}  // namespace

Certificate interleaves(const Tower& T, const Tower& U, int depth) {
  Certificate cert = Certificate::make(Verdict::CertifiedTrue, depth);
  struct Direction {
    const Tower *from, *to;
    const char* tag;
  };
  for (const Direction& dir : {Direction{&T, &U, "forward"}, Direction{&U, &T, "backward"}}) {
    int last_j = 1;
    for (int i = 1; i <= depth; ++i) {
      int found = 0;
      for (int j = std::max(1, last_j); j <= depth; ++j) {
        if (level_contained(*dir.from, i, *dir.to, j)) {
          found = j;
          break;
        }
      }
      if (found) {
        last_j = found;
        cert.level_map.emplace_back(dir.from == &T ? i : -i, found);
        continue;
      }
      if (i == depth) {
        // The top source level may only embed beyond the horizon; this does
        // not block the verdict.
        cert.note(std::string(dir.tag) + ": level " + std::to_string(depth) +
                  " undecidable within the depth horizon");
        continue;
      }
      // No level within depth contains X_i. A rational point of X_i escaping
      // the top level of the other tower proves the failure at every level.
      auto w = witness_point_on_level(*dir.from, i, *dir.to, depth);
      if (w) {
        cert.verdict = Verdict::CertifiedFalse;
        std::string pt = "(";
        for (std::size_t c = 0; c < w->size(); ++c)
          pt += (c ? "," : "") + (*w)[c].str();
        cert.note(std::string(dir.tag) + ": level " + std::to_string(i) +
                  " admits the point " + pt + ")" +
                  " lying outside every level of the other tower up to depth " +
                  std::to_string(depth));
        return cert;
      }
      cert.verdict = Verdict::Inconclusive;
      cert.note(std::string(dir.tag) + ": containment fails for level " +
                std::to_string(i) + " near the depth horizon");
      return cert;
    }
  }
  cert.note("interleaving maps found in both directions");
  return cert;
}

}  // namespace indvar
