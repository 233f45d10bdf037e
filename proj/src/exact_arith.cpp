#include "sabar/exact_arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace sabar {

namespace {

// Pseudo-remainder of a by b with integer-friendly steps. Returns the remainder
// together with the sign of the accumulated multiplier lc(b)^steps.
std::pair<UniPoly, int> pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  const std::string var = a.var();
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Rational& lb = bc.back();
  int steps = 0;
  while (!r.empty() && r.size() - 1 >= db) {
    const Rational lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lb;
    for (std::size_t i = 0; i < bc.size(); ++i) r[i + shift] -= lr * bc[i];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    ++steps;
  }
  const int mult_sign = (lb.sign() < 0 && (steps % 2 == 1)) ? -1 : 1;
  return {primitive_part(UniPoly(std::move(r), var)), mult_sign};
}

}  // namespace

std::vector<UniPoly> derivatives(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no Der tuple");
  std::vector<UniPoly> out{f};
  while (out.back().degree() > 0) out.push_back(out.back().derivative());
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  if (r.size() < bc.size()) return {UniPoly({}, a.var()), a};
  std::vector<Rational> q(r.size() - bc.size() + 1);
  const Rational inv = Rational(1) / bc.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational coef = r[k + bc.size() - 1] * inv;
    q[k] = coef;
    if (coef.is_zero()) continue;
    for (std::size_t i = 0; i < bc.size(); ++i) r[k + i] -= coef * bc[i];
  }
  r.resize(bc.size() - 1);
  return {UniPoly(std::move(q), a.var()), UniPoly(std::move(r), a.var())};
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact univariate division");
  return q;
}

UniPoly primitive_part(const UniPoly& f) {
  if (f.is_zero()) return f;
  return UniPoly(f.to_multi().primitive().to_uni(f.var()).coeffs(), f.var());
}

UniPoly normalize(const UniPoly& f) {
  UniPoly p = primitive_part(f);
  if (!p.is_zero() && p.leading().sign() < 0) p = -p;
  return p;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = normalize(a);
  UniPoly y = normalize(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UniPoly r = pseudo_remainder(x, y).first;
    x = std::move(y);
    y = std::move(r);
  }
  return normalize(x);
}

UniPoly square_free(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("square_free of zero polynomial");
  if (f.degree() <= 0) return normalize(f);
  return normalize(exact_quotient(f, gcd(f, f.derivative())));
}

std::vector<UniPoly> sturm_sequence(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("Sturm sequence of zero polynomial");
  std::vector<UniPoly> seq{primitive_part(f)};
  UniPoly d = primitive_part(f.derivative());
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    const UniPoly& a = seq[seq.size() - 2];
    const UniPoly& b = seq.back();
    auto [r, mult_sign] = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // -rem(a, b) up to a positive factor.
    seq.push_back(mult_sign > 0 ? -r : r);
  }
  return seq;
}

int sign_variations(const std::vector<UniPoly>& seq, const Bound& at) {
  int variations = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = 0;
    switch (at.kind) {
      case Bound::Kind::Finite:
        s = p.sign_at(at.value);
        break;
      case Bound::Kind::PlusInfinity:
        s = p.leading().sign();
        break;
      case Bound::Kind::MinusInfinity:
        s = p.leading().sign() * ((p.degree() % 2 == 0) ? 1 : -1);
        break;
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int sturm_count(const std::vector<UniPoly>& seq, const Bound& a, const Bound& b) {
  const UniPoly& f = seq.front();
  if ((a.finite() && f.sign_at(a.value) == 0) || (b.finite() && f.sign_at(b.value) == 0)) {
    throw std::invalid_argument("endpoint is a root");
  }
  return sign_variations(seq, a) - sign_variations(seq, b);
}

int sturm_count(const UniPoly& f, const Bound& a, const Bound& b) {
  if (f.is_zero()) throw std::invalid_argument("Sturm count of zero polynomial");
  return sturm_count(sturm_sequence(f), a, b);
}

Rational root_bound(const UniPoly& f) {
  if (f.degree() <= 0) return Rational(1);
  const Rational lead = f.leading().abs();
  Rational m;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, f.coeff(i).abs() / lead);
  // Cauchy bound 1 + max |a_i / a_n|, rounded up to an integer.
  return Rational(Integer((m + Rational(1)).ceil() + 1));
}

std::pair<Rational, Rational> eval_range(const UniPoly& f, const Rational& lo, const Rational& hi) {
  Rational alo, ahi;
  for (int i = f.degree(); i >= 0; --i) {
    const Rational p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
    alo = std::min({p1, p2, p3, p4});
    ahi = std::max({p1, p2, p3, p4});
    alo += f.coeff(i);
    ahi += f.coeff(i);
  }
  return {alo, ahi};
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(1);
  int sign = 1;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      // Prefer the sparsest nonzero pivot below.
      std::size_t best = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (!m[i][k].is_zero() && (best == n || m[i][k].term_count() < m[best][k].term_count())) best = i;
      }
      if (best == n) return MultiPoly();
      std::swap(m[k], m[best]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? v.scaled(Rational(1) / prev.constant_value()) : v.exact_divide(prev);
      }
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant with zero polynomial");
  const int m = f.degree(var);
  const int n = g.degree(var);
  if (m <= 0 && n <= 0) throw std::invalid_argument("variable '" + var + "' not present in either input");
  if (m == 0) return pow(f, static_cast<unsigned>(n));
  if (n == 0) return pow(g, static_cast<unsigned>(m));
  const auto fc = f.coefficients(var);
  const auto gc = g.coefficients(var);
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size));
  // Rows of f first, coefficients from the highest degree.
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = fc[static_cast<std::size_t>(m - i)];
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = gc[static_cast<std::size_t>(n - i)];
  }
  return bareiss_determinant(std::move(s));
}

}  // namespace sabar
