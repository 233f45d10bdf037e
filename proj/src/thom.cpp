#include "sabar/thom.hpp"

#include <algorithm>
#include <stdexcept>

namespace sabar {

namespace {

struct Isolator {
  const UniPoly& f;
  std::vector<UniPoly> seq;
  std::vector<std::pair<Rational, Rational>> out;

  int variations(const Rational& x) const { return sign_variations(seq, Bound::at(x)); }

  // Roots of f strictly inside (a, b); a and b are not roots.
  void run(const Rational& a, const Rational& b, int va, int vb) {
    const int n = va - vb;
    if (n <= 0) return;
    if (n == 1) {
      out.emplace_back(a, b);
      return;
    }
    const Rational m = (a + b) / Rational(2);
    if (f.sign_at(m) != 0) {
      const int vm = variations(m);
      run(a, m, va, vm);
      run(m, b, vm, vb);
      return;
    }
    // m is an exact rational root; carve out a root-free neighbourhood around it.
    Rational delta = (b - a) / Rational(4);
    for (;;) {
      const Rational l = m - delta, r = m + delta;
      if (f.sign_at(l) != 0 && f.sign_at(r) != 0 && variations(l) - variations(r) == 1) break;
      delta /= Rational(2);
    }
    const Rational l = m - delta, r = m + delta;
    run(a, l, va, variations(l));
    out.emplace_back(m, m);
    run(r, b, variations(r), vb);
  }
};

ThomEncoding make_encoding(const UniPoly& sf, const Rational& lo, const Rational& hi,
                           const std::vector<UniPoly>& ders) {
  ThomEncoding t{sf, {}, lo, hi};
  t.der_signs = signs_at_root(t, ders);
  return t;
}

// True if the square-free divisor g of both defining polynomials vanishes at the
// common part of the two isolating intervals.
bool shares_root(const ThomEncoding& a, const ThomEncoding& b) {
  if (a.exact()) return b.poly.sign_at(a.lo) == 0 && (b.exact() ? a.lo == b.lo : (b.lo < a.lo && a.lo < b.hi));
  if (b.exact()) return shares_root(b, a);
  const Rational lo = std::max(a.lo, b.lo);
  const Rational hi = std::min(a.hi, b.hi);
  if (!(lo < hi)) return false;
  const UniPoly g = gcd(a.poly, b.poly);
  if (g.degree() <= 0) return false;
  return g.sign_at(lo) * g.sign_at(hi) < 0;
}

}  // namespace

ThomEncoding ThomEncoding::refined() const {
  if (exact()) return *this;
  ThomEncoding t = *this;
  const Rational m = (lo + hi) / Rational(2);
  const int sm = poly.sign_at(m);
  if (sm == 0) {
    t.lo = m;
    t.hi = m;
  } else if (poly.sign_at(lo) != sm) {
    t.hi = m;
  } else {
    t.lo = m;
  }
  return t;
}

ThomEncoding ThomEncoding::from_rational(const Rational& q, const std::string& var) {
  return ThomEncoding{UniPoly({-q, Rational(1)}, var), {0, 1}, q, q};
}

std::vector<ThomEncoding> encode_roots(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("encode_roots of zero polynomial");
  if (f.degree() <= 0) return {};
  const UniPoly sf = square_free(f);
  Isolator iso{sf, sturm_sequence(sf), {}};
  const Rational bound = root_bound(sf);
  iso.run(-bound, bound, iso.variations(-bound), iso.variations(bound));
  const auto ders = derivatives(sf);
  std::vector<ThomEncoding> out;
  out.reserve(iso.out.size());
  for (const auto& [lo, hi] : iso.out) out.push_back(make_encoding(sf, lo, hi, ders));
  return out;
}

std::strong_ordering compare(const ThomEncoding& a0, const ThomEncoding& b0) {
  ThomEncoding a = a0, b = b0;
  bool equality_checked = false;
  for (int iter = 0;; ++iter) {
    if (a.hi < b.lo || (a.hi == b.lo && !(a.exact() && b.exact()))) return std::strong_ordering::less;
    if (b.hi < a.lo || (b.hi == a.lo && !(a.exact() && b.exact()))) return std::strong_ordering::greater;
    if (a.exact() && b.exact()) return std::strong_ordering::equal;
    // Cheap bisection first; the gcd test is only needed for close roots.
    if (!equality_checked && iter >= 4) {
      if (shares_root(a, b)) return std::strong_ordering::equal;
      equality_checked = true;
    }
    if (a.hi - a.lo >= b.hi - b.lo) {
      a = a.refined();
    } else {
      b = b.refined();
    }
    if (equality_checked && (a.exact() || b.exact()) && shares_root(a, b)) return std::strong_ordering::equal;
  }
}

std::vector<ThomEncoding> order_roots(const std::vector<UniPoly>& polys) {
  std::vector<UniPoly> distinct;
  for (const auto& p : polys) {
    if (p.is_zero() || p.degree() <= 0) continue;
    UniPoly sf = square_free(p);
    if (std::find(distinct.begin(), distinct.end(), sf) == distinct.end()) distinct.push_back(std::move(sf));
  }
  std::vector<ThomEncoding> all;
  for (const auto& p : distinct) {
    auto roots = encode_roots(p);
    all.insert(all.end(), roots.begin(), roots.end());
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const ThomEncoding& x, const ThomEncoding& y) { return compare(x, y) < 0; });
  std::vector<ThomEncoding> out;
  for (auto& t : all) {
    if (!out.empty() && compare(out.back(), t) == 0) {
      // Keep the lower-degree defining polynomial for the shared root.
      if (t.poly.degree() < out.back().poly.degree()) out.back() = std::move(t);
      continue;
    }
    out.push_back(std::move(t));
  }
  return out;
}

int sign_at_root(const ThomEncoding& t0, const UniPoly& q) {
  if (q.is_zero()) return 0;
  if (t0.exact()) return q.sign_at(t0.lo);
  const UniPoly g = gcd(t0.poly, q);
  if (g.degree() > 0 && g.sign_at(t0.lo) * g.sign_at(t0.hi) < 0) return 0;
  ThomEncoding t = t0;
  for (;;) {
    if (t.exact()) return q.sign_at(t.lo);
    const auto [lo, hi] = eval_range(q, t.lo, t.hi);
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    t = t.refined();
  }
}

std::vector<int> signs_at_root(const ThomEncoding& t, const std::vector<UniPoly>& qs) {
  std::vector<int> out;
  out.reserve(qs.size());
  for (const auto& q : qs) out.push_back(sign_at_root(t, q));
  return out;
}

std::pair<Rational, Rational> rational_approx(const ThomEncoding& t0, const Rational& width) {
  if (width.sign() <= 0) throw std::invalid_argument("approximation width must be positive");
  ThomEncoding t = t0;
  while (!t.exact() && t.hi - t.lo > width) t = t.refined();
  return {t.lo, t.hi};
}

int compare_to_rational(const ThomEncoding& t0, const Rational& q) {
  ThomEncoding t = t0;
  for (;;) {
    if (t.exact()) return (t.lo <=> q) < 0 ? -1 : (t.lo == q ? 0 : 1);
    if (q <= t.lo) return 1;
    if (q >= t.hi) return -1;
    if (t.poly.sign_at(q) == 0) return 0;
    t = t.refined();
  }
}

Rational rational_between(const ThomEncoding& a0, const ThomEncoding& b0) {
  if (compare(a0, b0) >= 0) throw std::invalid_argument("rational_between needs a < b");
  ThomEncoding a = a0, b = b0;
  for (;;) {
    if (a.hi < b.lo) {
      const Rational gap = b.lo - a.hi;
      const Rational quarter = gap / Rational(4);
      const bool a_ok = a.exact() || a.hi - a.lo <= quarter;
      const bool b_ok = b.exact() || b.hi - b.lo <= quarter;
      if (a_ok && b_ok) return simplest_between(a.hi + quarter, b.lo - quarter);
    }
    if (!a.exact() && (b.exact() || a.hi - a.lo >= b.hi - b.lo)) {
      a = a.refined();
    } else {
      b = b.refined();
    }
  }
}

std::string display(const ThomEncoding& t) {
  if (t.exact()) return t.lo.str();
  const auto [lo, hi] = rational_approx(t, Rational(Integer(1), Integer("1000000000000")));
  const Rational q = simplest_between(lo, hi);
  if (t.poly.eval(q).is_zero()) return q.str();
  return "~" + ((lo + hi) / Rational(2)).decimal(6);
}

}  // namespace sabar
