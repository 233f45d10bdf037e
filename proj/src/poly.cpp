#include "sabar/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sabar {

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void add_term(MultiPoly::TermMap& terms, const MultiPoly::Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string monomial_text(const std::vector<std::string>& vars, const MultiPoly::Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Recursive-descent parser for the polynomial grammar.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  MultiPoly parse_all() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = acc.scaled(Rational(1) / d.constant_value());
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 1000) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return MultiPoly(Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      return MultiPoly::variable(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

MultiPoly::MultiPoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  canonicalize();
}

MultiPoly MultiPoly::variable(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    throw std::invalid_argument("invalid variable name '" + name + "'");
  }
  TermMap t;
  t.emplace(Exponent{1}, Rational(1));
  return MultiPoly({name}, std::move(t));
}

MultiPoly MultiPoly::monomial(const Rational& coeff,
                              const std::vector<std::pair<std::string, std::uint32_t>>& powers) {
  MultiPoly out(coeff);
  for (const auto& [v, e] : powers) out *= pow(variable(v), e);
  return out;
}

MultiPoly MultiPoly::from_coefficients(const std::string& var, const std::vector<MultiPoly>& coeffs) {
  MultiPoly out;
  const MultiPoly x = variable(var);
  MultiPoly xp(1);
  for (const auto& c : coeffs) {
    if (!c.is_zero()) out += c * xp;
    xp *= x;
  }
  return out;
}

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse_all(); }

void MultiPoly::canonicalize() {
  const std::size_t n = vars_.size();
  std::vector<bool> used(n, false);
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) used[i] = used[i] || it->first[i] > 0;
    ++it;
  }
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> vars;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) {
      vars.push_back(vars_[i]);
      keep.push_back(i);
    }
  }
  TermMap terms;
  for (const auto& [e, c] : terms_) {
    Exponent ne(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
    terms.emplace(std::move(ne), c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(terms);
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& vars) const {
  // Returns an uncanonicalized copy whose exponents are aligned to `vars` (a superset).
  if (vars == vars_) return *this;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    where[i] = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin());
  }
  MultiPoly out;
  out.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    Exponent ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool MultiPoly::has_variable(const std::string& var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

int MultiPoly::degree(const std::string& var) const {
  if (is_zero()) return -1;
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
  if (is_zero()) return -1;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return static_cast<int>(d);
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return MultiPoly();
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponent ne = e;
    ne[idx] -= 1;
    add_term(out, ne, c * Rational(static_cast<long>(e[idx])));
  }
  return MultiPoly(vars_, std::move(out));
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values;
  values.reserve(vars_.size());
  for (const auto& v : vars_) {
    const auto it = point.find(v);
    if (it == point.end()) throw std::invalid_argument("no value bound for variable '" + v + "'");
    values.push_back(it->second);
  }
  return evaluate_aligned(values);
}

Rational MultiPoly::evaluate_aligned(const std::vector<Rational>& values) const {
  if (values.size() != vars_.size()) throw std::invalid_argument("evaluation point has wrong arity");
  std::vector<std::vector<Rational>> powers(vars_.size());
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Rational(1));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * values[i]);
      t *= pw[e[i]];
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::string& var, const Rational& value) const {
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return *this;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  TermMap out;
  std::vector<Rational> pw{Rational(1)};
  for (const auto& [e, c] : terms_) {
    while (pw.size() <= e[idx]) pw.push_back(pw.back() * value);
    Exponent ne = e;
    ne[idx] = 0;
    add_term(out, ne, c * pw[e[idx]]);
  }
  return MultiPoly(vars_, std::move(out));
}

MultiPoly MultiPoly::substitute(const std::map<std::string, Rational>& values) const {
  MultiPoly out = *this;
  for (const auto& [v, q] : values) out = out.substitute(v, q);
  return out;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
  const auto coeffs = coefficients(var);
  MultiPoly out;
  MultiPoly vp(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) out += coeffs[i] * vp;
    if (i + 1 < coeffs.size()) vp *= value;
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coefficients(const std::string& var) const {
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) {
    if (is_zero()) return {};
    return {*this};
  }
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  const int deg = degree(var);
  std::vector<TermMap> parts(static_cast<std::size_t>(deg) + 1);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    ne[idx] = 0;
    parts[e[idx]].emplace(std::move(ne), c);
  }
  std::vector<MultiPoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(MultiPoly(vars_, std::move(p)));
  return out;
}

MultiPoly MultiPoly::leading_coefficient(const std::string& var) const {
  auto cs = coefficients(var);
  return cs.empty() ? MultiPoly() : cs.back();
}

Rational MultiPoly::content() const {
  if (is_zero()) return Rational(1);
  Integer g = 0;
  Integer l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  if (g < 0) g = -g;
  return Rational(g, l);
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / content());
}

MultiPoly MultiPoly::normalized() const {
  MultiPoly p = primitive();
  if (!p.is_zero() && p.terms_.rbegin()->second.sign() < 0) p = -p;
  return p;
}

std::map<std::string, std::uint32_t> MultiPoly::monomial_content() const {
  std::map<std::string, std::uint32_t> out;
  if (is_zero()) return out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    std::uint32_t m = UINT32_MAX;
    for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
    if (m > 0) out[vars_[i]] = m;
  }
  return out;
}

MultiPoly MultiPoly::divide_monomial(const std::map<std::string, std::uint32_t>& powers) const {
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto it = powers.find(vars_[i]);
      if (it == powers.end()) continue;
      if (ne[i] < it->second) throw std::domain_error("monomial does not divide polynomial");
      ne[i] -= it->second;
    }
    out.emplace(std::move(ne), c);
  }
  return MultiPoly(vars_, std::move(out));
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return MultiPoly();
  if (divisor.is_constant()) return scaled(Rational(1) / divisor.constant_value());
  const auto vars = merge_vars(vars_, divisor.vars_);
  MultiPoly rem = with_variables(vars);
  const MultiPoly d = divisor.with_variables(vars);
  const auto& [lead_e, lead_c] = *d.terms_.rbegin();
  const Rational inv_lead = Rational(1) / lead_c;
  TermMap quotient;
  while (!rem.terms_.empty()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    Exponent qe(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (re[i] < lead_e[i]) throw std::domain_error("inexact polynomial division");
      qe[i] = re[i] - lead_e[i];
    }
    const Rational qc = rc * inv_lead;
    for (const auto& [de, dc] : d.terms_) {
      Exponent e(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) e[i] = de[i] + qe[i];
      add_term(rem.terms_, e, -(dc * qc));
    }
    quotient.emplace(std::move(qe), qc);
  }
  return MultiPoly(vars, std::move(quotient));
}

UniPoly MultiPoly::to_uni(const std::string& fallback_var) const {
  if (vars_.size() > 1) throw std::invalid_argument("polynomial '" + str() + "' is not univariate");
  if (vars_.empty()) return UniPoly::constant(constant_value(), fallback_var);
  std::vector<Rational> c(static_cast<std::size_t>(degree(vars_[0])) + 1);
  for (const auto& [e, q] : terms_) c[e[0]] = q;
  return UniPoly(std::move(c), vars_[0]);
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string mono = monomial_text(vars_, e);
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (vars_ == o.vars_) {
    for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
  } else {
    const auto vars = merge_vars(vars_, o.vars_);
    MultiPoly a = with_variables(vars);
    const MultiPoly b = o.with_variables(vars);
    for (const auto& [e, c] : b.terms_) add_term(a.terms_, e, c);
    *this = std::move(a);
  }
  canonicalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& k) const {
  if (k.is_zero()) return MultiPoly();
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c *= k;
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  if (b.is_constant()) return a.scaled(b.constant_value());
  if (a.is_constant()) return b.scaled(a.constant_value());
  const auto vars = merge_vars(a.vars_, b.vars_);
  const MultiPoly x = a.with_variables(vars);
  const MultiPoly y = b.with_variables(vars);
  MultiPoly::TermMap out;
  MultiPoly::Exponent e(vars.size());
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb);
    }
  }
  return MultiPoly(vars, std::move(out));
}

MultiPoly pow(const MultiPoly& base, unsigned exp) {
  MultiPoly result(1);
  MultiPoly b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var) : var_(std::move(var)), c_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(const Rational& c, std::string var) { return UniPoly({c}, std::move(var)); }

UniPoly UniPoly::x(std::string var) { return UniPoly({Rational(0), Rational(1)}, std::move(var)); }

UniPoly UniPoly::parse(std::string_view text, const std::string& fallback_var) {
  return MultiPoly::parse(text).to_uni(fallback_var);
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly({}, var_);
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::with_var(std::string var) const {
  UniPoly out = *this;
  out.var_ = std::move(var);
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out), a.var_);
}

UniPoly UniPoly::operator-() const { return scaled(Rational(-1)); }

UniPoly UniPoly::scaled(const Rational& k) const {
  std::vector<Rational> out = c_;
  for (auto& c : out) c *= k;
  return UniPoly(std::move(out), var_);
}

MultiPoly UniPoly::to_multi() const {
  std::vector<MultiPoly> cs;
  cs.reserve(c_.size());
  for (const auto& c : c_) cs.emplace_back(c);
  return MultiPoly::from_coefficients(var_, cs);
}

std::string UniPoly::str() const { return to_multi().str(); }

}  // namespace sabar
