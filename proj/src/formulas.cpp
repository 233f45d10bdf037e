#include "sabar/formulas.hpp"

#include <algorithm>
#include <cctype>

namespace sabar {

namespace {

Rel negated(Rel r) {
  switch (r) {
    case Rel::Lt: return Rel::Ge;
    case Rel::Le: return Rel::Gt;
    case Rel::Eq: return Rel::Ne;
    case Rel::Ge: return Rel::Lt;
    case Rel::Gt: return Rel::Le;
    case Rel::Ne: return Rel::Eq;
  }
  return Rel::Eq;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("formula parse error: " + what); }

// Position of the parenthesis matching the one at `open`.
std::size_t matching(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  fail("unbalanced parentheses");
}

struct RelAt {
  std::size_t pos = std::string_view::npos;
  std::size_t len = 0;
  Rel rel = Rel::Eq;
};

// Relational operator at parenthesis depth 0, if any.
RelAt find_rel(std::string_view s) {
  int depth = 0;
  RelAt found;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth != 0) continue;
    const char n = i + 1 < s.size() ? s[i + 1] : '\0';
    RelAt r;
    if (c == '<') r = {i, n == '=' ? 2u : 1u, n == '=' ? Rel::Le : Rel::Lt};
    else if (c == '>') r = {i, n == '=' ? 2u : 1u, n == '=' ? Rel::Ge : Rel::Gt};
    else if (c == '!' && n == '=') r = {i, 2, Rel::Ne};
    else if (c == '=') r = {i, n == '=' ? 2u : 1u, Rel::Eq};
    else continue;
    if (found.pos != std::string_view::npos) fail("more than one relation in atom '" + std::string(s) + "'");
    found = r;
    i += r.len - 1;
  }
  return found;
}

bool has_connective(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '&' || c == '|')) return true;
  }
  return false;
}

QfFormula parse_atom(std::string_view s) {
  s = trim(s);
  if (s == "true") return QfFormula::truth();
  if (s == "false") return QfFormula::disj({});
  const RelAt r = find_rel(s);
  if (r.pos == std::string_view::npos) fail("atom without relation '" + std::string(s) + "'");
  const MultiPoly lhs = MultiPoly::parse(s.substr(0, r.pos));
  const MultiPoly rhs = MultiPoly::parse(s.substr(r.pos + r.len));
  return QfFormula::atom(lhs - rhs, r.rel);
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  QfFormula parse_all() {
    QfFormula f = parse_or();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "' at offset " + std::to_string(pos_));
    return f;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QfFormula parse_or() {
    std::vector<QfFormula> parts{parse_and()};
    while (eat('|')) parts.push_back(parse_and());
    return parts.size() == 1 ? std::move(parts[0]) : QfFormula::disj(std::move(parts));
  }

  QfFormula parse_and() {
    std::vector<QfFormula> parts{parse_unary()};
    while (eat('&')) parts.push_back(parse_unary());
    return parts.size() == 1 ? std::move(parts[0]) : QfFormula::conj(std::move(parts));
  }

  QfFormula parse_unary() {
    skip();
    if (pos_ + 1 < s_.size() && s_[pos_] == '!' && s_[pos_ + 1] != '=') {
      ++pos_;
      return QfFormula::negate(parse_unary());
    }
    return parse_primary();
  }

  QfFormula parse_primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == '(') {
      const std::size_t close = matching(s_, pos_);
      const std::string_view inner = s_.substr(pos_ + 1, close - pos_ - 1);
      const std::string_view t = trim(inner);
      const bool negation = t.size() > 1 && t[0] == '!' && t[1] != '=';
      if (!negation && !has_connective(inner) && find_rel(inner).pos != std::string_view::npos) {
        pos_ = close + 1;
        return parse_atom(inner);
      }
      // Parenthesised polynomial on the left of a relation, e.g. (x+1)^2 <= 4.
      const std::size_t after = close + 1;
      std::size_t stop = after;
      int depth = 0;
      while (stop < s_.size()) {
        const char c = s_[stop];
        if (c == '(') ++depth;
        if (c == ')' && depth-- == 0) break;
        if (depth == 0 && (c == '&' || c == '|')) break;
        ++stop;
      }
      if (!negation && find_rel(s_.substr(after, stop - after)).pos != std::string_view::npos) {
        const auto span = s_.substr(pos_, stop - pos_);
        pos_ = stop;
        return parse_atom(span);
      }
      Parser sub(inner);
      QfFormula f = sub.parse_all();
      pos_ = close + 1;
      return f;
    }
    std::size_t stop = pos_;
    int depth = 0;
    while (stop < s_.size()) {
      const char c = s_[stop];
      if (c == '(') ++depth;
      if (c == ')' && depth-- == 0) break;
      if (depth == 0 && (c == '&' || c == '|')) break;
      ++stop;
    }
    const auto span = s_.substr(pos_, stop - pos_);
    pos_ = stop;
    return parse_atom(span);
  }
};

std::vector<std::vector<Atom>> dnf(const QfFormula& f, bool neg, std::size_t budget) {
  using Kind = QfFormula::Kind;
  switch (f.kind()) {
    case Kind::Atom: {
      const Rel r = neg ? negated(f.as_atom().rel) : f.as_atom().rel;
      if (r == Rel::Ne) return {{Atom{f.as_atom().poly, Rel::Lt}}, {Atom{f.as_atom().poly, Rel::Gt}}};
      return {{Atom{f.as_atom().poly, r}}};
    }
    case Kind::Not:
      return dnf(f.children()[0], !neg, budget);
    case Kind::And:
    case Kind::Or: {
      const bool product = (f.kind() == Kind::And) != neg;
      std::vector<std::vector<Atom>> acc;
      if (product) acc.push_back({});
      for (const auto& c : f.children()) {
        auto part = dnf(c, neg, budget);
        if (!product) {
          acc.insert(acc.end(), part.begin(), part.end());
        } else {
          std::vector<std::vector<Atom>> next;
          for (const auto& a : acc) {
            for (const auto& b : part) {
              auto merged = a;
              merged.insert(merged.end(), b.begin(), b.end());
              next.push_back(std::move(merged));
            }
          }
          acc = std::move(next);
        }
        std::size_t total = 0;
        for (const auto& conj : acc) total += conj.size();
        if (total > budget) {
          throw ContractError("formula exceeds the budget of " + std::to_string(budget) + " atoms after DNF conversion");
        }
      }
      return acc;
    }
  }
  return {};
}

std::string univariate_var(const QfFormula& f) {
  const auto vars = f.variables();
  if (vars.size() > 1) throw std::invalid_argument("formula '" + f.str() + "' is not univariate");
  return vars.empty() ? std::string("X") : *vars.begin();
}

// Sample strictly below every root / above every root.
Rational below(const ThomEncoding& t) { return Rational(t.lo.floor()) - Rational(1); }
Rational above(const ThomEncoding& t) { return Rational(t.hi.ceil()) + Rational(1); }

std::string endpoint_str(const Endpoint& e) {
  if (e.kind == Endpoint::Kind::MinusInfinity) return "-inf";
  if (e.kind == Endpoint::Kind::PlusInfinity) return "+inf";
  return display(*e.value);
}

}  // namespace

std::string rel_str(Rel r) {
  switch (r) {
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Eq: return "=";
    case Rel::Ge: return ">=";
    case Rel::Gt: return ">";
    case Rel::Ne: return "!=";
  }
  return "?";
}

bool rel_holds(Rel r, int s) {
  switch (r) {
    case Rel::Lt: return s < 0;
    case Rel::Le: return s <= 0;
    case Rel::Eq: return s == 0;
    case Rel::Ge: return s >= 0;
    case Rel::Gt: return s > 0;
    case Rel::Ne: return s != 0;
  }
  return false;
}

bool is_strict(Rel r) { return r == Rel::Lt || r == Rel::Gt || r == Rel::Ne; }

std::string Atom::str() const { return "(" + poly.str() + " " + rel_str(rel) + " 0)"; }

QfFormula QfFormula::atom(MultiPoly poly, Rel rel) {
  if (poly.is_zero()) throw std::invalid_argument("atom polynomial is zero");
  QfFormula f;
  f.kind_ = Kind::Atom;
  f.atom_ = Atom{std::move(poly), rel};
  return f;
}

QfFormula QfFormula::conj(std::vector<QfFormula> children) {
  if (children.size() == 1) return std::move(children[0]);
  QfFormula f;
  f.kind_ = Kind::And;
  f.children_ = std::move(children);
  return f;
}

QfFormula QfFormula::disj(std::vector<QfFormula> children) {
  if (children.size() == 1) return std::move(children[0]);
  QfFormula f;
  f.kind_ = Kind::Or;
  f.children_ = std::move(children);
  return f;
}

QfFormula QfFormula::negate(QfFormula child) {
  QfFormula f;
  f.kind_ = Kind::Not;
  f.children_.push_back(std::move(child));
  return f;
}

QfFormula QfFormula::parse(std::string_view text) {
  if (trim(text).empty()) fail("empty formula");
  return Parser(text).parse_all();
}

std::set<std::string> QfFormula::variables() const {
  std::vector<Atom> atoms;
  collect_atoms(atoms);
  std::set<std::string> out;
  for (const auto& a : atoms) out.insert(a.poly.variables().begin(), a.poly.variables().end());
  return out;
}

void QfFormula::collect_atoms(std::vector<Atom>& out) const {
  if (kind_ == Kind::Atom) {
    out.push_back(atom_);
    return;
  }
  for (const auto& c : children_) c.collect_atoms(out);
}

std::size_t QfFormula::atom_count() const {
  std::vector<Atom> atoms;
  collect_atoms(atoms);
  return atoms.size();
}

std::string QfFormula::str() const {
  switch (kind_) {
    case Kind::Atom:
      return atom_.str();
    case Kind::Not:
      return "!" + children_[0].str();
    case Kind::And:
    case Kind::Or: {
      if (children_.empty()) return kind_ == Kind::And ? "true" : "false";
      std::string out = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i > 0) out += kind_ == Kind::And ? " & " : " | ";
        out += children_[i].str();
      }
      return out + ")";
    }
  }
  return "";
}

bool eval_with(const QfFormula& f, const std::function<int(const MultiPoly&)>& sign_of) {
  switch (f.kind()) {
    case QfFormula::Kind::Atom:
      return rel_holds(f.as_atom().rel, sign_of(f.as_atom().poly));
    case QfFormula::Kind::Not:
      return !eval_with(f.children()[0], sign_of);
    case QfFormula::Kind::And:
      return std::all_of(f.children().begin(), f.children().end(), [&](const QfFormula& c) { return eval_with(c, sign_of); });
    case QfFormula::Kind::Or:
      return std::any_of(f.children().begin(), f.children().end(), [&](const QfFormula& c) { return eval_with(c, sign_of); });
  }
  return false;
}

bool eval(const QfFormula& f, const std::map<std::string, Rational>& point) {
  return eval_with(f, [&](const MultiPoly& p) { return p.evaluate(point).sign(); });
}

std::vector<std::vector<Atom>> to_dnf(const QfFormula& f, std::size_t atom_budget) {
  return dnf(f, false, atom_budget);
}

QfFormula ClosedFormula::to_formula() const {
  std::vector<QfFormula> ors;
  for (const auto& c : dnf) {
    std::vector<QfFormula> ands;
    for (const auto& a : c) ands.push_back(QfFormula::atom(a));
    ors.push_back(QfFormula::conj(std::move(ands)));
  }
  return QfFormula::disj(std::move(ors));
}

bool same_point(const Endpoint& a, const Endpoint& b) {
  if (a.kind != b.kind) return false;
  if (!a.finite()) return true;
  return compare(*a.value, *b.value) == 0;
}

bool operator==(const Piece& a, const Piece& b) {
  return same_point(a.lo, b.lo) && same_point(a.hi, b.hi) && a.lo_closed == b.lo_closed && a.hi_closed == b.hi_closed;
}

bool operator==(const UnivariateRealization& a, const UnivariateRealization& b) { return a.pieces == b.pieces; }

std::string Piece::str() const {
  if (is_point()) return "{" + endpoint_str(lo) + "}";
  return std::string(lo_closed ? "[" : "(") + endpoint_str(lo) + ", " + endpoint_str(hi) + (hi_closed ? "]" : ")");
}

bool UnivariateRealization::closed() const {
  return std::all_of(pieces.begin(), pieces.end(), [](const Piece& p) { return p.closed(); });
}

std::string UnivariateRealization::str() const {
  if (pieces.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) out += " u ";
    out += pieces[i].str();
  }
  return out;
}

bool UnivariateRealization::contains(const Rational& x) const {
  for (const auto& p : pieces) {
    if (p.lo.finite()) {
      const int c = compare_to_rational(*p.lo.value, x);
      if (c > 0 || (c == 0 && !p.lo_closed)) continue;
    }
    if (p.hi.finite()) {
      const int c = compare_to_rational(*p.hi.value, x);
      if (c < 0 || (c == 0 && !p.hi_closed)) continue;
    }
    return true;
  }
  return false;
}

UnivariateRealization realize_univariate(const QfFormula& f) {
  const std::string var = univariate_var(f);
  std::vector<Atom> atoms;
  f.collect_atoms(atoms);
  std::vector<UniPoly> polys;
  for (const auto& a : atoms) polys.push_back(a.poly.to_uni(var));
  const auto roots = order_roots(polys);
  const std::size_t n = roots.size();

  auto at_rational = [&](const Rational& q) {
    return eval_with(f, [&](const MultiPoly& p) { return p.to_uni(var).sign_at(q); });
  };
  auto at_root = [&](const ThomEncoding& t) {
    return eval_with(f, [&](const MultiPoly& p) { return sign_at_root(t, p.to_uni(var)); });
  };

  // Cell 2i is the open interval before root i, cell 2i+1 is root i.
  std::vector<bool> truth(2 * n + 1);
  if (n == 0) {
    truth[0] = at_rational(Rational(0));
  } else {
    truth[0] = at_rational(below(roots.front()));
    truth[2 * n] = at_rational(above(roots.back()));
    for (std::size_t i = 0; i < n; ++i) {
      truth[2 * i + 1] = at_root(roots[i]);
      if (i + 1 < n) truth[2 * i + 2] = at_rational(rational_between(roots[i], roots[i + 1]));
    }
  }

  UnivariateRealization out;
  for (std::size_t a = 0; a < truth.size();) {
    if (!truth[a]) {
      ++a;
      continue;
    }
    std::size_t b = a;
    while (b + 1 < truth.size() && truth[b + 1]) ++b;
    Piece p;
    if (a % 2 == 1) {
      p.lo = Endpoint::at(roots[(a - 1) / 2]);
      p.lo_closed = true;
    } else {
      p.lo = a == 0 ? Endpoint::minus_infinity() : Endpoint::at(roots[a / 2 - 1]);
    }
    if (b % 2 == 1) {
      p.hi = Endpoint::at(roots[(b - 1) / 2]);
      p.hi_closed = true;
    } else {
      p.hi = b == 2 * n ? Endpoint::plus_infinity() : Endpoint::at(roots[b / 2]);
    }
    out.pieces.push_back(std::move(p));
    a = b + 1;
  }
  return out;
}

std::set<std::vector<int>> realizable_sign_conditions(const std::vector<UniPoly>& family) {
  const auto roots = order_roots(family);
  std::set<std::vector<int>> out;
  auto at_rational = [&](const Rational& q) {
    std::vector<int> s;
    for (const auto& f : family) s.push_back(f.sign_at(q));
    out.insert(std::move(s));
  };
  if (roots.empty()) {
    at_rational(Rational(0));
    return out;
  }
  at_rational(below(roots.front()));
  at_rational(above(roots.back()));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out.insert(signs_at_root(roots[i], family));
    if (i + 1 < roots.size()) at_rational(rational_between(roots[i], roots[i + 1]));
  }
  return out;
}

ClosedFormula make_closed(const QfFormula& theta, std::size_t atom_budget) {
  if (!realize_univariate(theta).closed()) throw ContractError("realization not closed");
  const std::string var = univariate_var(theta);
  ClosedFormula out;
  auto add = [&](std::vector<Atom> conj) {
    if (std::find(out.dnf.begin(), out.dnf.end(), conj) == out.dnf.end()) out.dnf.push_back(std::move(conj));
  };
  for (const auto& conj : to_dnf(theta, atom_budget)) {
    if (std::none_of(conj.begin(), conj.end(), [](const Atom& a) { return is_strict(a.rel); })) {
      add(conj);
      continue;
    }
    // Sign conditions over the union of the derivative families of every atom.
    std::vector<UniPoly> family;
    std::vector<std::size_t> index_of_atom;
    for (const auto& a : conj) {
      const auto ders = derivatives(a.poly.to_uni(var));
      for (std::size_t k = 0; k < ders.size(); ++k) {
        auto it = std::find(family.begin(), family.end(), ders[k]);
        if (k == 0) index_of_atom.push_back(static_cast<std::size_t>(it - family.begin()));
        if (it == family.end()) family.push_back(ders[k]);
      }
    }
    for (const auto& sigma : realizable_sign_conditions(family)) {
      bool keep = true;
      for (std::size_t j = 0; j < conj.size() && keep; ++j) keep = rel_holds(conj[j].rel, sigma[index_of_atom[j]]);
      if (!keep) continue;
      std::vector<Atom> relaxed;
      for (std::size_t m = 0; m < family.size(); ++m) {
        if (family[m].degree() <= 0) continue;
        const Rel r = sigma[m] == 0 ? Rel::Eq : (sigma[m] > 0 ? Rel::Ge : Rel::Le);
        relaxed.push_back(Atom{family[m].to_multi(), r});
      }
      add(std::move(relaxed));
    }
  }
  return out;
}

}  // namespace sabar
