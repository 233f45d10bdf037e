#include "sabar/infinitesimals.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "sabar/exact_arith.hpp"

namespace sabar {

namespace {

bool monomial_less(const EpsMonomial& a, const EpsMonomial& b) {
  auto total = [](const EpsMonomial& m) {
    std::uint64_t t = 0;
    for (const auto& [v, e] : m) t += e;
    return t;
  };
  if (total(a) != total(b)) return total(a) < total(b);
  return a < b;
}

}  // namespace

std::string eps_monomial_str(const EpsMonomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : m) {
    if (!out.empty()) out += "*";
    out += v;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

EpsPoly::EpsPoly(MultiPoly body, std::string main_var) : body_(std::move(body)), main_(std::move(main_var)) {
  if (body_.is_zero()) throw std::invalid_argument("EpsPoly must be nonzero");
  if (is_eps_var(main_)) throw std::invalid_argument("main variable may not be an infinitesimal");
  for (const auto& v : body_.variables()) {
    if (v != main_ && !is_eps_var(v)) {
      throw std::invalid_argument("variable '" + v + "' is neither " + main_ + " nor an infinitesimal e<i>");
    }
  }
  if (!body_.has_variable(main_)) throw std::invalid_argument("EpsPoly '" + body_.str() + "' does not involve " + main_);
}

EpsPoly EpsPoly::parse(std::string_view text, std::string main_var) {
  return EpsPoly(MultiPoly::parse(text), std::move(main_var));
}

bool EpsPoly::is_eps_var(const std::string& name) {
  if (name.size() < 2 || name[0] != 'e') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

int EpsPoly::eps_index(const std::string& name) { return std::stoi(name.substr(1)); }

std::vector<std::string> EpsPoly::eps_vars() const {
  std::vector<std::string> out;
  for (const auto& v : body_.variables()) {
    if (is_eps_var(v)) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return eps_index(a) < eps_index(b); });
  return out;
}

UniPoly EpsPoly::substitute_eta(const Rational& eta, const std::map<std::string, unsigned>& weights) const {
  std::map<std::string, Rational> values;
  for (const auto& v : eps_vars()) {
    auto it = weights.find(v);
    values[v] = pow(eta, it != weights.end() ? it->second : static_cast<unsigned>(eps_index(v) + 1));
  }
  return body_.substitute(values).to_uni(main_);
}

std::map<std::string, unsigned> eta_weights(const std::vector<EpsPoly>& gs) {
  int top = -1;
  for (const auto& g : gs) {
    for (const auto& v : g.eps_vars()) top = std::max(top, EpsPoly::eps_index(v));
  }
  std::vector<EpsMonomial> monos;
  for (const auto& g : gs) {
    for (const auto& [m, p] : decompose(g).parts) monos.push_back(m);
  }
  std::map<std::string, unsigned> w;
  std::vector<unsigned> by_index;
  for (int i = 0; i <= top; ++i) {
    // one more than the heaviest monomial in e0..e(i-1)
    unsigned heaviest = 0;
    for (const auto& m : monos) {
      unsigned weight = 0;
      for (const auto& [v, e] : m) {
        const int j = EpsPoly::eps_index(v);
        if (j < i) weight += by_index[static_cast<std::size_t>(j)] * e;
      }
      heaviest = std::max(heaviest, weight);
    }
    by_index.push_back(std::max(heaviest + 1, i == 0 ? 1u : by_index.back() + 1));
    w["e" + std::to_string(i)] = by_index.back();
  }
  return w;
}

MultiPoly CoefficientDecomposition::reassemble() const {
  MultiPoly out;
  for (const auto& [m, g] : parts) {
    std::vector<std::pair<std::string, std::uint32_t>> powers(m.begin(), m.end());
    out += MultiPoly::monomial(Rational(1), powers) * g.with_var(main_var).to_multi();
  }
  return out;
}

CoefficientDecomposition decompose(const EpsPoly& g) {
  const auto& vars = g.body().variables();
  std::map<EpsMonomial, std::vector<Rational>> grouped;
  for (const auto& [exps, coeff] : g.body().terms()) {
    EpsMonomial m;
    std::uint32_t tdeg = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (exps[i] == 0) continue;
      if (vars[i] == g.main_var()) {
        tdeg = exps[i];
      } else {
        m[vars[i]] = exps[i];
      }
    }
    auto& c = grouped[m];
    if (c.size() <= tdeg) c.resize(tdeg + 1);
    c[tdeg] += coeff;
  }
  CoefficientDecomposition out{g.main_var(), {}};
  for (auto& [m, c] : grouped) out.parts.emplace_back(m, UniPoly(std::move(c), g.main_var()));
  std::sort(out.parts.begin(), out.parts.end(), [](const auto& a, const auto& b) { return monomial_less(a.first, b.first); });
  return out;
}

std::vector<ThomEncoding> remove_infinitesimals(const std::vector<EpsPoly>& gs) {
  std::vector<UniPoly> h;
  for (const auto& g : gs) {
    for (auto& [m, p] : decompose(g).parts) {
      if (p.degree() > 0) h.push_back(p.with_var("T"));
    }
  }
  return order_roots(h);
}

bool lemma_check(const std::vector<EpsPoly>& gs, const std::vector<ThomEncoding>& s, const Rational& eta) {
  if (eta.sign() <= 0) throw std::invalid_argument("eta must be positive");
  const auto weights = eta_weights(gs);
  std::vector<UniPoly> real;
  for (const auto& g : gs) {
    UniPoly p = g.substitute_eta(eta, weights);
    if (p.is_zero()) return false;
    if (p.degree() > 0) real.push_back(std::move(p));
  }
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    ThomEncoding a = s[i], b = s[i + 1];
    // Refine until both intervals are small against the gap between them.
    for (;;) {
      const Rational gap = b.lo - a.hi;
      if (gap.sign() > 0 && a.hi - a.lo <= gap / Rational(8) && b.hi - b.lo <= gap / Rational(8)) break;
      if (!a.exact() && (b.exact() || a.hi - a.lo >= b.hi - b.lo)) {
        a = a.refined();
      } else {
        b = b.refined();
      }
    }
    const Rational quarter = (b.lo - a.hi) / Rational(4);
    const Rational lo = a.hi + quarter, hi = b.lo - quarter;
    for (const auto& p : real) {
      if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) return false;
      if (sturm_count(p, Bound::at(lo), Bound::at(hi)) != 0) return false;
    }
  }
  return true;
}

}  // namespace sabar
