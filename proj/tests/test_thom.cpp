#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sabar/thom.hpp"

using namespace sabar;

namespace {

UniPoly P(const char* s) { return UniPoly::parse(s); }
Rational Q(const char* s) { return Rational::parse(s); }

bool inside(const std::pair<Rational, Rational>& iv, const Rational& lo, const Rational& hi) {
  return lo < iv.first && iv.second < hi;
}

// A planted root: either a rational r or s*sqrt(c) with c not a square.
struct Planted {
  Rational rational;
  int sign = 0;
  Rational c;
  std::pair<Rational, Rational> approx;
};

}  // namespace

TEST_CASE("encode_roots examples") {
  auto r = encode_roots(P("X^2 - 2"));
  REQUIRE(r.size() == 2);
  CHECK(r[0].der_signs == std::vector<int>{0, -1, 1});
  CHECK(r[1].der_signs == std::vector<int>{0, 1, 1});
  CHECK(encode_roots(P("X^2 + 1")).empty());
  r = encode_roots(P("X^3 - X"));
  REQUIRE(r.size() == 3);
  CHECK(compare_to_rational(r[0], Rational(-1)) == 0);
  CHECK(compare_to_rational(r[1], Rational(0)) == 0);
  CHECK(compare_to_rational(r[2], Rational(1)) == 0);
  CHECK(encode_roots(P("7")).empty());
}

TEST_CASE("compare examples") {
  const auto s2 = encode_roots(P("X^2 - 2"));
  const auto s3 = encode_roots(P("X^2 - 3"));
  CHECK(compare(s2[1], s3[1]) < 0);
  CHECK(compare(s3[1], s2[1]) > 0);
  // independent check of the same fact
  const auto a = oracle::bisect_root(P("X^2 - 2"), Rational(1), Rational(2), Q("1/20"));
  const auto b = oracle::bisect_root(P("X^2 - 3"), Rational(1), Rational(2), Q("1/20"));
  CHECK(a.second < b.first);

  const auto one = encode_roots(P("X - 1"));
  const auto pm1 = encode_roots(P("X^2 - 1"));
  CHECK(compare(one[0], pm1[1]) == 0);
  CHECK(compare(s2[0], encode_roots(P("X"))[0]) < 0);
  CHECK(compare(s2[1], s2[1]) == 0);
  CHECK(compare(ThomEncoding::from_rational(Q("7/5")), s2[1]) < 0);
}

TEST_CASE("order_roots examples") {
  const auto r = order_roots({P("X^2 - 2"), P("X^2 - 3")});
  REQUIRE(r.size() == 4);
  const Rational w = Q("1/1000");
  const std::vector<std::pair<const char*, int>> expect = {{"X^2 - 3", -1}, {"X^2 - 2", -1}, {"X^2 - 2", 1}, {"X^2 - 3", 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    const UniPoly f = P(expect[i].first);
    const auto o = expect[i].second > 0 ? oracle::bisect_root(f, Rational(0), Rational(2), w)
                                        : oracle::bisect_root(f, Rational(-2), Rational(0), w);
    const auto iv = rational_approx(r[i], w);
    CHECK(iv.first <= o.second);
    CHECK(o.first <= iv.second);
  }
  const auto d = order_roots({P("X^2 - 1"), P("X - 1")});
  REQUIRE(d.size() == 2);
  CHECK(compare_to_rational(d[0], Rational(-1)) == 0);
  CHECK(compare_to_rational(d[1], Rational(1)) == 0);
  CHECK(d[1].poly == P("X - 1"));
  CHECK(order_roots({P("7")}).empty());
}

TEST_CASE("signs_at_root examples") {
  const auto t = encode_roots(P("X^2 - 2"))[1];
  CHECK(signs_at_root(t, {P("X")}) == std::vector<int>{1});
  CHECK(signs_at_root(t, {P("X^2 - 2")}) == std::vector<int>{0});
  CHECK(signs_at_root(t, {P("X - 2"), P("X - 1")}) == std::vector<int>{-1, 1});
  CHECK(sign_at_root(t, P("2*X^4 - 8")) == 0);
  CHECK(sign_at_root(t, P("X^3 - 2*X - 1")) == -1);
}

TEST_CASE("rational_approx examples") {
  const auto s2 = encode_roots(P("X^2 - 2"))[1];
  auto iv = rational_approx(s2, Q("1/100"));
  CHECK(iv.second - iv.first <= Q("1/100"));
  CHECK(inside(iv, Q("1.40"), Q("1.43")));
  const auto o = oracle::bisect_root(P("X^2 - 2"), Rational(1), Rational(2), Q("1/100000"));
  CHECK(iv.first <= o.first);
  CHECK(o.second <= iv.second);

  const auto one = encode_roots(P("X - 1"))[0];
  iv = rational_approx(one, Q("1/3"));
  CHECK(iv.first <= Rational(1));
  CHECK(Rational(1) <= iv.second);

  const auto m3 = encode_roots(P("X^2 - 3"))[0];
  iv = rational_approx(m3, Q("1/10"));
  CHECK(inside(iv, Q("-1.8"), Q("-1.7")));
  CHECK_THROWS(rational_approx(m3, Rational(0)));
}

TEST_CASE("rational_between separates") {
  const auto r = order_roots({P("X^2 - 2"), P("X^2 - 3"), P("100*X - 141"), P("X^5 - X - 1")});
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const Rational q = rational_between(r[i], r[i + 1]);
    CHECK(compare_to_rational(r[i], q) < 0);
    CHECK(compare_to_rational(r[i + 1], q) > 0);
  }
  CHECK_THROWS(rational_between(r[1], r[0]));
}

TEST_CASE("Thom determinacy") {
  std::mt19937 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const UniPoly f = oracle::random_poly(rng, 2 + trial % 7, 10);
    const auto roots = encode_roots(f);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(roots[i].der_signs.front() == 0);
      CHECK(roots[i].der_signs.size() == static_cast<std::size_t>(roots[i].poly.degree() + 1));
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        CHECK(roots[i].der_signs != roots[j].der_signs);
        ++checked;
      }
      CHECK(signs_at_root(roots[i], {roots[i].poly}) == std::vector<int>{0});
      CHECK(sign_at_root(roots[i], f) == 0);
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("compare is a total order") {
  std::mt19937 rng(77);
  std::vector<ThomEncoding> pool;
  for (int trial = 0; trial < 14; ++trial) {
    for (auto& t : encode_roots(oracle::random_poly(rng, 1 + trial % 4, 4))) pool.push_back(t);
  }
  for (auto& t : encode_roots(P("X^2 - X"))) pool.push_back(t);
  REQUIRE(pool.size() > 10);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const auto& c = pool[pick(rng)];
    CHECK(compare(a, b) == (0 <=> compare(b, a)));
    if (compare(a, b) <= 0 && compare(b, c) <= 0) CHECK(compare(a, c) <= 0);
    CHECK(compare(a, a) == 0);
  }
}

TEST_CASE("order_roots agrees with fine approximations") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> nfac(1, 4), kind(0, 2), num(-9, 9), den(1, 3), cq(2, 30);
  const Rational width = Rational(1) / pow(Rational(2), 40);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<UniPoly> family;
    std::vector<Planted> planted;
    int members = 1 + trial % 3;
    for (int m = 0; m < members; ++m) {
      UniPoly f = UniPoly::constant(Rational(1 + trial % 3));
      int deg = 0;
      for (int k = nfac(rng); k > 0 && deg < 7; --k) {
        if (kind(rng) == 0) {
          const Rational c(cq(rng));
          f = f * UniPoly({-c, Rational(0), Rational(1)});
          deg += 2;
          const Integer root = sqrt(c.num());
          if (Rational(Integer(root * root)) == c) {
            planted.push_back({Rational(root), 0, {}, {}});
            planted.push_back({-Rational(root), 0, {}, {}});
          } else {
            for (int s : {-1, 1}) {
              Planted p{{}, s, c, {}};
              const auto hi = oracle::bisect_root(UniPoly({-c, Rational(0), Rational(1)}), Rational(0), c + Rational(1), width);
              p.approx = s > 0 ? hi : std::make_pair(-hi.second, -hi.first);
              planted.push_back(p);
            }
          }
        } else {
          const Rational r(Integer(num(rng)), Integer(den(rng)));
          f = f * UniPoly({-r, Rational(1)});
          deg += 1;
          planted.push_back({r, 0, {}, {}});
        }
      }
      family.push_back(f);
    }
    for (auto& p : planted) {
      if (p.sign == 0) p.approx = {p.rational, p.rational};
    }
    // exact identity of planted values
    auto same = [](const Planted& a, const Planted& b) {
      if (a.sign == 0 && b.sign == 0) return a.rational == b.rational;
      return a.sign == b.sign && a.c == b.c && a.sign != 0;
    };
    std::vector<Planted> distinct;
    for (const auto& p : planted) {
      if (std::none_of(distinct.begin(), distinct.end(), [&](const Planted& d) { return same(d, p); })) distinct.push_back(p);
    }
    std::sort(distinct.begin(), distinct.end(), [](const Planted& a, const Planted& b) {
      return a.approx.first + a.approx.second < b.approx.first + b.approx.second;
    });
    const auto ordered = order_roots(family);
    REQUIRE(ordered.size() == distinct.size());
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      const auto iv = rational_approx(ordered[i], width);
      CHECK(iv.first <= distinct[i].approx.second);
      CHECK(distinct[i].approx.first <= iv.second);
      if (i + 1 < ordered.size()) CHECK(compare(ordered[i], ordered[i + 1]) < 0);
    }
  }
}
