#include "sabar/sa_pipeline.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "sabar/exact_arith.hpp"

namespace sabar {

namespace {

const std::string kLevelVar = "T";

bool mentions_any(const MultiPoly& p, const std::vector<std::string>& vars) {
  for (const auto& v : vars) {
    if (p.has_variable(v)) return true;
  }
  return false;
}

MultiPoly sum_of_squares(const std::vector<std::string>& vars) {
  MultiPoly s;
  for (const auto& v : vars) s += pow(MultiPoly::variable(v), 2);
  return s;
}

template <typename F>
void parallel_for(std::size_t n, F&& body) {
  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n / 1024, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------- elimination

void eliminate_branch(std::vector<MultiPoly> polys, std::vector<std::string> vars, std::vector<MultiPoly>& out) {
  // monomial factors in the eliminated variables split the system
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::map<std::string, std::uint32_t> factor;
    for (const auto& [v, e] : polys[i].monomial_content()) {
      if (e > 0 && std::find(vars.begin(), vars.end(), v) != vars.end()) factor[v] = e;
    }
    if (factor.empty()) continue;
    for (const auto& [v, e] : factor) {
      std::vector<MultiPoly> sub;
      for (const auto& p : polys) sub.push_back(p.substitute(v, Rational(0)));
      std::vector<std::string> rest;
      for (const auto& w : vars) {
        if (w != v) rest.push_back(w);
      }
      eliminate_branch(std::move(sub), std::move(rest), out);
    }
    polys[i] = polys[i].divide_monomial(factor);
    eliminate_branch(std::move(polys), std::move(vars), out);
    return;
  }

  std::vector<MultiPoly> live;
  const MultiPoly* projected = nullptr;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    live.push_back(p.normalized());
  }
  std::sort(live.begin(), live.end());
  live.erase(std::unique(live.begin(), live.end()), live.end());
  for (const auto& p : live) {
    if (mentions_any(p, vars)) continue;
    if (!p.has_variable(kLevelVar)) return;  // nonzero for small infinitesimals: no solutions
    if (!projected || p.degree(kLevelVar) < projected->degree(kLevelVar) ||
        (p.degree(kLevelVar) == projected->degree(kLevelVar) && p.term_count() < projected->term_count())) {
      projected = &p;
    }
  }
  if (projected) {
    out.push_back(*projected);
    return;
  }
  if (live.empty()) throw std::runtime_error("elimination lost every constraint on the level variable");

  // pivot: lowest positive degree, then fewest terms
  std::size_t pivot = 0;
  std::string var;
  int best = -1;
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (const auto& v : vars) {
      const int d = live[i].degree(v);
      if (d <= 0) continue;
      if (best < 0 || d < best || (d == best && live[i].term_count() < live[pivot].term_count())) {
        best = d;
        pivot = i;
        var = v;
      }
    }
  }
  std::vector<std::string> rest;
  for (const auto& w : vars) {
    if (w != var) rest.push_back(w);
  }
  const MultiPoly& pv = live[pivot];
  std::vector<MultiPoly> next;
  const MultiPoly lc = pv.leading_coefficient(var);
  if (best == 1 && lc.is_constant()) {
    // linear with constant leading coefficient: substitute
    const MultiPoly value = (pv - lc * MultiPoly::variable(var)).scaled(Rational(-1) / lc.constant_value());
    for (std::size_t i = 0; i < live.size(); ++i) {
      if (i != pivot) next.push_back(live[i].substitute(var, value));
    }
  } else {
    for (std::size_t i = 0; i < live.size(); ++i) {
      if (i == pivot) continue;
      if (!live[i].has_variable(var)) {
        next.push_back(live[i]);
        continue;
      }
      MultiPoly r = resultant(pv, live[i], var);
      if (!r.is_zero()) next.push_back(std::move(r));
    }
  }
  eliminate_branch(std::move(next), std::move(rest), out);
}

// ----------------------------------------------------------------------- grid

struct GridAtom {
  std::size_t poly;
  Rel rel;
};

struct Grid {
  int k = 0;
  int n = 0;
  Rational rho;
  std::vector<MultiPoly> polys;
  std::vector<std::vector<GridAtom>> dnf;  // ball atom included in every conjunct
  std::vector<std::int8_t> signs;          // vertex * polys.size() + poly
  std::vector<int> level;                  // first sample >= P(v)
  std::size_t vertex_count = 0;
};

Rational ceil_sqrt(const Rational& r) {
  if (r.sign() <= 0) throw ContractError("radius must be positive");
  const Integer c = r.ceil();
  Integer s = sqrt(c);
  if (s * s < c) s += 1;
  return Rational(s);
}

Grid evaluate_grid(const SemialgebraicInput& input, const std::vector<Rational>& samples, int n, bool open_top) {
  if (n < 2) throw ContractError("grid_n must be at least 2");
  Grid g;
  const auto vars = input.variables();
  g.k = static_cast<int>(vars.size());
  if (g.k == 0) throw ContractError("no variables in formula or polynomial");
  g.n = n;
  g.rho = ceil_sqrt(input.radius);

  std::map<MultiPoly, std::size_t> index;
  auto poly_index = [&](const MultiPoly& p) {
    auto [it, fresh] = index.emplace(p, g.polys.size());
    if (fresh) g.polys.push_back(p);
    return it->second;
  };
  const std::size_t ball = poly_index(sum_of_squares(vars) - MultiPoly(input.radius));
  for (const auto& conj : to_dnf(input.formula)) {
    std::vector<GridAtom> c;
    for (const auto& a : conj) {
      if (a.rel != Rel::Le && a.rel != Rel::Ge && a.rel != Rel::Eq) {
        throw ContractError("formula is not closed: atom " + a.str());
      }
      c.push_back({poly_index(a.poly), a.rel});
    }
    c.push_back({ball, Rel::Le});
    g.dnf.push_back(std::move(c));
  }

  std::size_t count = 1;
  for (int a = 0; a < g.k; ++a) count *= static_cast<std::size_t>(n + 1);
  if (count > (1u << 24)) throw ContractError("grid too large");
  g.vertex_count = count;
  const std::size_t np = g.polys.size();
  g.signs.assign(count * np, 0);
  g.level.assign(count, 0);

  std::vector<std::vector<std::size_t>> axes(np);
  for (std::size_t p = 0; p < np; ++p) {
    for (const auto& v : g.polys[p].variables()) {
      axes[p].push_back(static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin()));
    }
  }
  std::vector<std::size_t> p_axes;
  for (const auto& v : input.poly.variables()) {
    p_axes.push_back(static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin()));
  }
  const int top = static_cast<int>(samples.size());
  const Rational step = Rational(2) * g.rho / Rational(n);
  parallel_for(count, [&](std::size_t id) {
    std::vector<Rational> x(static_cast<std::size_t>(g.k));
    std::size_t rem = id;
    for (int a = 0; a < g.k; ++a) {
      x[static_cast<std::size_t>(a)] = -g.rho + step * Rational(static_cast<long>(rem % static_cast<std::size_t>(n + 1)));
      rem /= static_cast<std::size_t>(n + 1);
    }
    std::vector<Rational> vals;
    for (std::size_t p = 0; p < np; ++p) {
      vals.clear();
      for (auto a : axes[p]) vals.push_back(x[a]);
      g.signs[id * np + p] = static_cast<std::int8_t>(g.polys[p].evaluate_aligned(vals).sign());
    }
    vals.clear();
    for (auto a : p_axes) vals.push_back(x[a]);
    const Rational pv = input.poly.evaluate_aligned(vals);
    int lv = static_cast<int>(std::lower_bound(samples.begin(), samples.end(), pv) - samples.begin());
    if (open_top && lv == top) lv = top - 1;
    g.level[id] = lv;
  });
  return g;
}

using Key = std::array<std::uint32_t, 4>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : k) h = (h ^ v) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

Filtration build_filtration(const SemialgebraicInput& input, const std::vector<Rational>& samples, int n, bool open_top) {
  const int steps = static_cast<int>(samples.size());
  if (steps == 0) return Filtration({}, 0);
  const Grid g = evaluate_grid(input, samples, n, open_top);
  if (g.k > 3) throw ContractError("grid triangulation supports at most 3 variables");
  const std::size_t np = g.polys.size();

  // face test on vertex ids
  auto atom_holds = [&](const GridAtom& a, const std::uint32_t* vs, int m) {
    bool le = false, ge = false;
    for (int i = 0; i < m; ++i) {
      const int s = g.signs[vs[i] * np + a.poly];
      if (a.rel == Rel::Le && s > 0) return false;
      if (a.rel == Rel::Ge && s < 0) return false;
      le = le || s <= 0;
      ge = ge || s >= 0;
    }
    return a.rel != Rel::Eq || (le && ge);
  };
  auto qualifies = [&](const std::uint32_t* vs, int m) {
    for (const auto& conj : g.dnf) {
      bool ok = true;
      for (const auto& a : conj) {
        if (!atom_holds(a, vs, m)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  };
  // necessary condition for some face of the simplex to qualify
  auto may_contain = [&](const std::uint32_t* vs, int m) {
    for (const auto& conj : g.dnf) {
      bool ok = true;
      for (const auto& a : conj) {
        bool le = false, ge = false;
        for (int i = 0; i < m; ++i) {
          const int s = g.signs[vs[i] * np + a.poly];
          le = le || s <= 0;
          ge = ge || s >= 0;
        }
        if ((a.rel == Rel::Le && !le) || (a.rel == Rel::Ge && !ge) || (a.rel == Rel::Eq && !(le && ge))) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  };

  std::vector<std::size_t> stride(static_cast<std::size_t>(g.k));
  std::size_t cubes = 1;
  for (int a = 0; a < g.k; ++a) {
    stride[static_cast<std::size_t>(a)] = a == 0 ? 1 : stride[static_cast<std::size_t>(a - 1)] * static_cast<std::size_t>(n + 1);
    cubes *= static_cast<std::size_t>(n);
  }
  std::vector<int> perm(static_cast<std::size_t>(g.k));
  std::vector<std::vector<int>> perms;
  for (int a = 0; a < g.k; ++a) perm[static_cast<std::size_t>(a)] = a;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::unordered_map<Key, int, KeyHash> born;
  const int m = g.k + 1;
  for (std::size_t c = 0; c < cubes; ++c) {
    std::size_t rem = c, base = 0;
    for (int a = 0; a < g.k; ++a) {
      base += (rem % static_cast<std::size_t>(n)) * stride[static_cast<std::size_t>(a)];
      rem /= static_cast<std::size_t>(n);
    }
    for (const auto& pi : perms) {
      std::uint32_t vs[4];
      vs[0] = static_cast<std::uint32_t>(base);
      for (int j = 1; j < m; ++j) vs[j] = vs[j - 1] + static_cast<std::uint32_t>(stride[static_cast<std::size_t>(pi[static_cast<std::size_t>(j - 1)])]);
      if (!may_contain(vs, m)) continue;
      for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::uint32_t face[4];
        int fm = 0, lv = 0;
        for (int j = 0; j < m; ++j) {
          if (mask & (1u << j)) {
            face[fm++] = vs[j];
            lv = std::max(lv, g.level[vs[j]]);
          }
        }
        if (lv >= steps || !qualifies(face, fm)) continue;
        Key key{UINT32_MAX, UINT32_MAX, UINT32_MAX, UINT32_MAX};
        std::copy(face, face + fm, key.begin());
        born.emplace(key, lv);
      }
    }
  }

  // faces of included simplices
  std::unordered_map<Key, int, KeyHash> closed;
  for (const auto& [key, lv] : born) {
    int fm = 0;
    while (fm < 4 && key[static_cast<std::size_t>(fm)] != UINT32_MAX) ++fm;
    for (unsigned mask = 1; mask < (1u << fm); ++mask) {
      Key face{UINT32_MAX, UINT32_MAX, UINT32_MAX, UINT32_MAX};
      int j = 0;
      for (int i = 0; i < fm; ++i) {
        if (mask & (1u << i)) face[static_cast<std::size_t>(j++)] = key[static_cast<std::size_t>(i)];
      }
      auto [it, fresh] = closed.emplace(face, lv);
      if (!fresh) it->second = std::min(it->second, lv);
    }
  }
  std::vector<std::pair<Simplex, int>> entries;
  entries.reserve(closed.size());
  for (const auto& [key, lv] : closed) {
    Simplex s;
    for (auto v : key) {
      if (v != UINT32_MAX) s.push_back(static_cast<int>(v));
    }
    entries.emplace_back(std::move(s), lv);
  }
  return Filtration(std::move(entries), steps);
}

}  // namespace

std::vector<std::string> SemialgebraicInput::variables() const {
  std::set<std::string> vs = formula.variables();
  for (const auto& v : poly.variables()) vs.insert(v);
  for (const auto& v : vs) {
    if (v == kLevelVar || EpsPoly::is_eps_var(v)) throw ContractError("variable name '" + v + "' is reserved");
  }
  return {vs.begin(), vs.end()};
}

PerturbedFamily perturb(const SemialgebraicInput& input) {
  PerturbedFamily fam;
  fam.vars = input.variables();
  fam.members.push_back({sum_of_squares(fam.vars) - MultiPoly(input.radius), 0, 0});
  std::vector<Atom> atoms;
  input.formula.collect_atoms(atoms);
  std::vector<MultiPoly> polys;
  for (const auto& a : atoms) {
    if (a.poly.is_constant()) continue;
    if (std::find(polys.begin(), polys.end(), a.poly) == polys.end()) polys.push_back(a.poly);
  }
  fam.formula_polys = polys.size();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const MultiPoly e = MultiPoly::variable("e" + std::to_string(i));
    fam.members.push_back({polys[i] + e, static_cast<int>(i + 1), 1});
    fam.members.push_back({polys[i] - e, static_cast<int>(i + 1), -1});
  }
  fam.members.push_back({input.poly - MultiPoly::variable(kLevelVar), static_cast<int>(polys.size() + 1), 0});
  return fam;
}

std::vector<MultiPoly> CriticalSystem::equations() const {
  std::vector<MultiPoly> eqs = members;
  eqs.insert(eqs.end(), minors.begin(), minors.end());
  eqs.push_back(level_poly);
  return eqs;
}

std::vector<CriticalSystem> critical_systems(const PerturbedFamily& fam) {
  const std::size_t k = fam.vars.size();
  const std::size_t count = fam.members.size() - 1;
  const FamilyMember& level = fam.members.back();
  std::vector<CriticalSystem> out;
  std::vector<std::size_t> subset;
  std::function<void(std::size_t)> walk = [&](std::size_t from) {
    CriticalSystem sys;
    sys.subset = subset;
    for (auto i : subset) sys.members.push_back(fam.members[i].poly);
    sys.level_poly = level.poly;
    const std::size_t rows = subset.size() + 1;
    if (rows <= k) {
      std::vector<std::vector<MultiPoly>> jac;
      for (auto i : subset) {
        std::vector<MultiPoly> row;
        for (const auto& v : fam.vars) row.push_back(fam.members[i].poly.derivative(v));
        jac.push_back(std::move(row));
      }
      std::vector<MultiPoly> prow;
      for (const auto& v : fam.vars) prow.push_back(level.poly.derivative(v));
      jac.push_back(std::move(prow));
      std::vector<bool> pick(k, false);
      std::fill(pick.begin(), pick.begin() + static_cast<long>(rows), true);
      do {
        std::vector<std::vector<MultiPoly>> sq;
        for (const auto& row : jac) {
          std::vector<MultiPoly> r;
          for (std::size_t c = 0; c < k; ++c) {
            if (pick[c]) r.push_back(row[c]);
          }
          sq.push_back(std::move(r));
        }
        MultiPoly d = bareiss_determinant(std::move(sq));
        if (!d.is_zero()) {
          sys.jac_poly += d * d;
          sys.minors.push_back(std::move(d));
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    // no minors: every point of the intersection is critical
    out.push_back(std::move(sys));
    if (subset.size() == k) return;
    for (std::size_t i = from; i < count; ++i) {
      bool clash = false;
      for (auto j : subset) clash = clash || (fam.members[j].source == fam.members[i].source);
      if (clash) continue;
      subset.push_back(i);
      walk(i + 1);
      subset.pop_back();
    }
  };
  walk(0);
  return out;
}

std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars) {
  std::vector<MultiPoly> out;
  eliminate_branch(system, vars, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EpsPoly> critical_value_polys(const PerturbedFamily& fam) {
  if (fam.vars.size() > max_exact_dimension) {
    throw ContractError("critical values by elimination need at most " + std::to_string(max_exact_dimension) +
                        " variables; pass explicit levels for the grid-only path");
  }
  std::set<MultiPoly> gs;
  for (const auto& sys : critical_systems(fam)) {
    for (auto& g : eliminate(sys.equations(), fam.vars)) gs.insert(std::move(g));
  }
  std::vector<EpsPoly> out;
  for (const auto& g : gs) out.emplace_back(g, kLevelVar);
  return out;
}

std::vector<Rational> interleave_samples(const std::vector<ThomEncoding>& values) {
  if (values.empty()) return {Rational(0)};
  std::vector<Rational> s;
  s.push_back(Rational(Integer(values.front().lo.floor() - 1)));
  for (std::size_t i = 0; i + 1 < values.size(); ++i) s.push_back(rational_between(values[i], values[i + 1]));
  s.push_back(Rational(Integer(values.back().hi.ceil() + 1)));
  return s;
}

CriticalValueList critical_values(const SemialgebraicInput& input) {
  CriticalValueList out;
  out.values = remove_infinitesimals(critical_value_polys(perturb(input)));
  out.samples = interleave_samples(out.values);
  return out;
}

SimplicialComplex sublevel_complex(const SemialgebraicInput& input, const Rational& t, int grid_n) {
  return build_filtration(input, {t}, grid_n, false).complex(0);
}

Filtration sublevel_filtration(const SemialgebraicInput& input, const std::vector<Rational>& samples, int grid_n) {
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i - 1] >= samples[i]) throw std::invalid_argument("samples must increase strictly");
  }
  return build_filtration(input, samples, grid_n, false);
}

namespace {

SemialgebraicBarcodes finish(const SemialgebraicInput& input, int grid_n, CriticalValueList levels) {
  SemialgebraicBarcodes out;
  const std::vector<Rational> upper(levels.samples.begin() + 1, levels.samples.end());
  Filtration f = levels.values.empty() ? Filtration({}, 0) : build_filtration(input, upper, grid_n, true);
  if (!levels.values.empty()) {
    std::vector<FiltrationValue> vals;
    for (const auto& t : levels.values) vals.push_back(FiltrationValue::of(t, Rational(1, 1000)));
    f.set_values(std::move(vals));
  }
  out.simplices = f.entries().size();
  out.barcodes = barcodes(f, std::max(input.level, 0));
  out.levels = std::move(levels);
  return out;
}

}  // namespace

SemialgebraicBarcodes barcode_semialgebraic(const SemialgebraicInput& input, int grid_n,
                                            const std::vector<Rational>& extra_levels) {
  if (grid_n < 2) throw ContractError("grid_n must be at least 2");
  CriticalValueList levels = critical_values(input);
  if (!extra_levels.empty()) {
    std::vector<ThomEncoding> vs = levels.values;
    for (const auto& q : extra_levels) vs.push_back(ThomEncoding::from_rational(q, kLevelVar));
    std::sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) { return compare(a, b) < 0; });
    std::vector<ThomEncoding> merged;
    for (auto& v : vs) {
      if (merged.empty() || compare(merged.back(), v) != 0) merged.push_back(std::move(v));
    }
    levels.values = std::move(merged);
    levels.samples = interleave_samples(levels.values);
  }
  return finish(input, grid_n, std::move(levels));
}

SemialgebraicBarcodes barcode_at_levels(const SemialgebraicInput& input, int grid_n, std::vector<Rational> levels) {
  if (grid_n < 2) throw ContractError("grid_n must be at least 2");
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  SemialgebraicBarcodes out;
  for (const auto& q : levels) out.levels.values.push_back(ThomEncoding::from_rational(q, kLevelVar));
  out.levels.samples = levels;
  Filtration f = build_filtration(input, levels, grid_n, false);
  if (!levels.empty()) {
    std::vector<FiltrationValue> vals;
    for (const auto& q : levels) vals.push_back(FiltrationValue::of(q));
    f.set_values(std::move(vals));
  }
  out.simplices = f.entries().size();
  out.barcodes = barcodes(f, std::max(input.level, 0));
  return out;
}

Filtration rips_filtration(const std::vector<Point>& points, int max_dim) {
  if (max_dim < 0 || max_dim > 3) throw ContractError("max_dim must be between 0 and 3");
  const std::size_t n = points.size();
  for (const auto& p : points) {
    if (p.size() != points.front().size()) throw ContractError("points have different dimensions");
  }
  std::vector<std::vector<Rational>> d2(n, std::vector<Rational>(n));
  std::set<Rational> distinct{Rational(0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s;
      for (std::size_t a = 0; a < points[i].size(); ++a) s += pow(points[i][a] - points[j][a], 2);
      if (s.is_zero()) throw ContractError("repeated point");
      d2[i][j] = d2[j][i] = s;
      distinct.insert(s);
    }
  }
  const std::vector<Rational> levels(distinct.begin(), distinct.end());
  auto index_of = [&](const Rational& q) {
    return static_cast<int>(std::lower_bound(levels.begin(), levels.end(), q) - levels.begin());
  };
  std::vector<std::pair<Simplex, int>> entries;
  Simplex cur;
  std::function<void(std::size_t, const Rational&)> grow = [&](std::size_t from, const Rational& diam) {
    entries.emplace_back(cur, index_of(diam));
    if (static_cast<int>(cur.size()) == max_dim + 1) return;
    for (std::size_t v = from; v < n; ++v) {
      Rational d = diam;
      for (int u : cur) d = std::max(d, d2[static_cast<std::size_t>(u)][v]);
      cur.push_back(static_cast<int>(v));
      grow(v + 1, d);
      cur.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    cur = {static_cast<int>(v)};
    grow(v + 1, Rational(0));
  }
  Filtration f(std::move(entries), n == 0 ? 0 : static_cast<int>(levels.size()));
  if (n > 0) {
    std::vector<FiltrationValue> vals;
    for (const auto& q : levels) vals.push_back(FiltrationValue::of(q));
    f.set_values(std::move(vals));
  }
  return f;
}

unsigned worker_count() {
  if (const char* env = std::getenv("SABAR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) throw ContractError("SABAR_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace sabar
