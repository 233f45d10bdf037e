#include "sabar/persistence.hpp"

#include <algorithm>
#include <stdexcept>

namespace sabar {

namespace {

Simplex canonical(Simplex s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("simplex with repeated vertex");
  if (s.empty()) throw std::invalid_argument("empty simplex");
  if (s.front() < 0) throw std::invalid_argument("negative vertex id");
  return s;
}

Simplex drop(const Simplex& s, std::size_t k) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != k) f.push_back(s[i]);
  }
  return f;
}

std::size_t index_in(const std::vector<Simplex>& sorted, const Simplex& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s, simplex_less);
  if (it == sorted.end() || *it != s) throw std::logic_error("simplex missing from basis");
  return static_cast<std::size_t>(it - sorted.begin());
}

using SparseColumn = std::vector<std::pair<std::size_t, Rational>>;

// a -= f * b, both sorted by row.
void axpy(SparseColumn& a, const Rational& f, const SparseColumn& b) {
  SparseColumn out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

void check_range(int last, int i, int j) {
  if (i < -1 || j > last + 1 || i > j) {
    throw std::out_of_range("filtration index pair (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
  }
}

}  // namespace

bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

SimplicialComplex SimplicialComplex::closure_of(std::vector<Simplex> simplices) {
  std::vector<Simplex> all;
  for (auto& s0 : simplices) {
    const Simplex s = canonical(std::move(s0));
    if (s.size() > 16) throw std::invalid_argument("simplex dimension too large");
    const unsigned n = static_cast<unsigned>(s.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex f;
      for (unsigned k = 0; k < n; ++k) {
        if (mask & (1u << k)) f.push_back(s[k]);
      }
      all.push_back(std::move(f));
    }
  }
  std::sort(all.begin(), all.end(), simplex_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  SimplicialComplex k;
  k.simplices_ = std::move(all);
  return k;
}

SimplicialComplex SimplicialComplex::from_closed(std::vector<Simplex> simplices) {
  for (auto& s : simplices) s = canonical(std::move(s));
  std::sort(simplices.begin(), simplices.end(), simplex_less);
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  SimplicialComplex k;
  k.simplices_ = std::move(simplices);
  for (const auto& s : k.simplices_) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!k.contains(drop(s, i))) throw std::invalid_argument("complex is not closed under faces");
    }
  }
  return k;
}

std::vector<Simplex> SimplicialComplex::simplices(int p) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    if (static_cast<int>(s.size()) == p + 1) out.push_back(s);
  }
  return out;
}

int SimplicialComplex::dimension() const { return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1; }

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), s, simplex_less);
}

QMatrix boundary_matrix(const SimplicialComplex& k, int p) {
  if (p < 0) throw std::invalid_argument("negative dimension");
  const auto cols = k.simplices(p);
  if (p == 0) return QMatrix(0, cols.size());
  const auto rows = k.simplices(p - 1);
  QMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t f = 0; f < cols[c].size(); ++f) {
      m.at(index_in(rows, drop(cols[c], f)), c) = Rational(f % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

std::size_t betti(const SimplicialComplex& k, int p) {
  if (p < 0) throw std::invalid_argument("negative dimension");
  std::vector<std::pair<Simplex, int>> entries;
  entries.reserve(k.size());
  for (const auto& s : k.simplices()) entries.emplace_back(s, 0);
  return PersistenceTable(Filtration(std::move(entries), 1)).persistent_betti(p, 0, 0);
}

FiltrationValue FiltrationValue::at_index(long i) {
  FiltrationValue v;
  v.kind = Kind::Index;
  v.index = i;
  return v;
}

FiltrationValue FiltrationValue::of(const Rational& q) {
  FiltrationValue v;
  v.kind = Kind::Exact;
  v.exact = q;
  v.approx = {q, q};
  return v;
}

FiltrationValue FiltrationValue::of(const ThomEncoding& t, const Rational& width) {
  FiltrationValue v;
  v.kind = Kind::Algebraic;
  v.algebraic = t;
  v.approx = rational_approx(t, width);
  return v;
}

FiltrationValue FiltrationValue::minus_infinity() {
  FiltrationValue v;
  v.kind = Kind::MinusInfinity;
  return v;
}

FiltrationValue FiltrationValue::plus_infinity() {
  FiltrationValue v;
  v.kind = Kind::PlusInfinity;
  return v;
}

std::string FiltrationValue::str() const {
  switch (kind) {
    case Kind::Index: return std::to_string(index);
    case Kind::Exact: return exact.str();
    case Kind::Algebraic: return display(*algebraic);
    case Kind::MinusInfinity: return "-inf";
    case Kind::PlusInfinity: return "inf";
  }
  return "";
}

std::strong_ordering compare(const FiltrationValue& a, const FiltrationValue& b) {
  using K = FiltrationValue::Kind;
  auto rank_of = [](K k) { return k == K::MinusInfinity ? 0 : (k == K::PlusInfinity ? 2 : 1); };
  if (rank_of(a.kind) != rank_of(b.kind)) return rank_of(a.kind) <=> rank_of(b.kind);
  if (rank_of(a.kind) != 1) return std::strong_ordering::equal;
  auto as_rational = [](const FiltrationValue& v) { return v.kind == K::Index ? Rational(v.index) : v.exact; };
  if (a.kind == K::Algebraic && b.kind == K::Algebraic) return compare(*a.algebraic, *b.algebraic);
  if (a.kind == K::Algebraic) {
    const int c = compare_to_rational(*a.algebraic, as_rational(b));
    return c <=> 0;
  }
  if (b.kind == K::Algebraic) {
    const int c = compare_to_rational(*b.algebraic, as_rational(a));
    return 0 <=> c;
  }
  return as_rational(a) <=> as_rational(b);
}

bool operator==(const FiltrationValue& a, const FiltrationValue& b) { return compare(a, b) == 0; }

Filtration::Filtration(std::vector<std::pair<Simplex, int>> entries, int steps) : steps_(steps) {
  if (steps < 0) throw std::invalid_argument("negative number of steps");
  std::map<Simplex, int> birth;
  for (auto& [s, b] : entries) {
    s = canonical(std::move(s));
    if (b < 0 || b >= steps) throw std::invalid_argument("birth index " + std::to_string(b) + " out of range");
    if (!birth.emplace(s, b).second) throw std::invalid_argument("duplicate simplex in filtration");
  }
  for (const auto& [s, b] : birth) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto it = birth.find(drop(s, i));
      if (it == birth.end()) throw std::invalid_argument("filtration is missing a face");
      if (it->second > b) throw std::invalid_argument("face born after its coface");
    }
  }
  entries_.assign(birth.begin(), birth.end());
  std::sort(entries_.begin(), entries_.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second < y.second;
    return simplex_less(x.first, y.first);
  });
}

Filtration Filtration::from_complexes(const std::vector<SimplicialComplex>& ks) {
  std::vector<std::pair<Simplex, int>> entries;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i > 0) {
      for (const auto& s : ks[i - 1].simplices()) {
        if (!ks[i].contains(s)) throw std::invalid_argument("complexes are not nested");
      }
    }
    for (const auto& s : ks[i].simplices()) {
      if (i == 0 || !ks[i - 1].contains(s)) entries.emplace_back(s, static_cast<int>(i));
    }
  }
  return Filtration(std::move(entries), static_cast<int>(ks.size()));
}

SimplicialComplex Filtration::complex(int i) const {
  check_range(last(), i, i);
  std::vector<Simplex> s;
  for (const auto& [simplex, b] : entries_) {
    if (b <= i) s.push_back(simplex);
  }
  return SimplicialComplex::from_closed(std::move(s));
}

void Filtration::set_values(std::vector<FiltrationValue> values) {
  if (static_cast<int>(values.size()) != steps_) throw std::invalid_argument("one value per complex required");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (compare(values[i - 1], values[i]) >= 0) throw std::invalid_argument("filtration values must increase strictly");
  }
  values_ = std::move(values);
}

FiltrationValue Filtration::value(int i) const {
  if (values_ && i >= 0 && i < steps_) return (*values_)[static_cast<std::size_t>(i)];
  return FiltrationValue::at_index(i);
}

std::size_t persistent_betti(const Filtration& f, int p, int i, int j) {
  check_range(f.last(), i, j);
  if (p < 0) throw std::invalid_argument("negative dimension");
  if (i < 0) return 0;
  const SimplicialComplex ki = f.complex(i), kj = f.complex(j);
  const auto basis_i = ki.simplices(p), basis_j = kj.simplices(p);
  if (basis_i.empty()) return 0;
  std::vector<QVector> vs;
  for (const auto& z : nullspace(boundary_matrix(ki, p))) {
    QVector v(basis_j.size());
    for (std::size_t k = 0; k < z.size(); ++k) v[index_in(basis_j, basis_i[k])] = z[k];
    vs.push_back(std::move(v));
  }
  std::vector<QVector> bs;
  const QMatrix d = boundary_matrix(kj, p + 1);
  for (std::size_t c = 0; c < d.cols(); ++c) bs.push_back(d.column(c));
  const std::size_t with_b = span_dim(bs, basis_j.size());
  vs.insert(vs.end(), bs.begin(), bs.end());
  return span_dim(vs, basis_j.size()) - with_b;
}

PersistenceTable::PersistenceTable(const Filtration& f) : last_(f.last()) {
  const auto& entries = f.entries();
  const std::size_t n = entries.size();
  std::map<Simplex, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) {
    index.emplace(entries[k].first, k);
    max_dim_ = std::max(max_dim_, static_cast<int>(entries[k].first.size()) - 1);
  }
  pairs_.assign(static_cast<std::size_t>(std::max(max_dim_ + 1, 0)), {});
  std::vector<long> pivot_of(n, -1);
  std::vector<bool> negative(n, false), cleared(n, false);
  std::vector<SparseColumn> reduced(n);
  for (int d = max_dim_; d >= 1; --d) {
    for (std::size_t j = 0; j < n; ++j) {
      const Simplex& s = entries[j].first;
      if (static_cast<int>(s.size()) != d + 1 || cleared[j]) continue;
      SparseColumn col;
      for (std::size_t k = 0; k < s.size(); ++k) col.emplace_back(index.at(drop(s, k)), Rational(k % 2 == 0 ? 1 : -1));
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      while (!col.empty()) {
        const long other = pivot_of[col.back().first];
        if (other < 0) break;
        const SparseColumn& o = reduced[static_cast<std::size_t>(other)];
        axpy(col, col.back().second / o.back().second, o);
      }
      if (col.empty()) continue;
      const std::size_t low = col.back().first;
      pivot_of[low] = static_cast<long>(j);
      cleared[low] = true;
      negative[j] = true;
      ++pairs_[static_cast<std::size_t>(d - 1)][{entries[low].second, entries[j].second}];
      reduced[j] = std::move(col);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (negative[k] || pivot_of[k] >= 0) continue;
    ++pairs_[entries[k].first.size() - 1][{entries[k].second, -1}];
  }
}

const std::map<std::pair<int, int>, std::size_t>& PersistenceTable::pairs(int p) const {
  static const std::map<std::pair<int, int>, std::size_t> none;
  if (p < 0 || p > max_dim_) return none;
  return pairs_[static_cast<std::size_t>(p)];
}

std::size_t PersistenceTable::persistent_betti(int p, int i, int j) const {
  check_range(last_, i, j);
  std::size_t count = 0;
  for (const auto& [bd, c] : pairs(p)) {
    if (bd.first <= i && (bd.second < 0 || bd.second > j)) count += c;
  }
  return count;
}

long multiplicity(const PersistenceTable& t, int p, int i, int j) {
  const int n = t.last();
  if (i < 0 || j > n + 1 || i > j) throw std::out_of_range("multiplicity index pair out of range");
  auto b = [&](int s, int u) { return s < 0 ? 0L : static_cast<long>(t.persistent_betti(p, s, u)); };
  if (j == n + 1) return b(i, n + 1) - b(i - 1, n + 1);
  if (i == j) return 0;
  return (b(i, j - 1) - b(i, j)) - (b(i - 1, j - 1) - b(i - 1, j));
}

long multiplicity(const Filtration& f, int p, int i, int j) { return multiplicity(PersistenceTable(f), p, i, j); }

SubquotientReport subquotient_oracle(const Filtration& f, int p, int i, int j) {
  const int n = f.last();
  if (i < 0 || j > n + 1 || i > j) throw std::out_of_range("subquotient index pair out of range");
  if (p < 0) throw std::invalid_argument("negative dimension");
  const auto basis = f.complex(n).simplices(p);
  const std::size_t dim = basis.size();

  auto embed = [&](const std::vector<Simplex>& local, const QVector& v) {
    QVector out(dim);
    for (std::size_t k = 0; k < v.size(); ++k) out[index_in(basis, local[k])] = v[k];
    return out;
  };
  auto cycles = [&](int k) {
    std::vector<QVector> out;
    if (k < 0) return out;
    const auto ks = f.complex(k);
    const auto local = ks.simplices(p);
    if (local.empty()) return out;
    for (const auto& z : nullspace(boundary_matrix(ks, p))) out.push_back(embed(local, z));
    return out;
  };
  auto boundaries = [&](int k) {
    std::vector<QVector> out;
    if (k < 0) return out;
    const auto ks = f.complex(k);
    const auto local = ks.simplices(p);
    const QMatrix d = boundary_matrix(ks, p + 1);
    for (std::size_t c = 0; c < d.cols(); ++c) out.push_back(embed(local, d.column(c)));
    return out;
  };

  // Representatives z_1..z_h of a basis of H_p(K_i).
  const auto zi = cycles(i);
  const auto bi = boundaries(i);
  std::vector<QVector> reps;
  for (auto idx : complement_indices(bi, zi, dim)) reps.push_back(zi[idx]);
  const std::size_t h = reps.size();

  // dim of {c : sum c_k z_k in Z(K_{i-1}) + B(K_k)}
  const auto z_prev = cycles(i - 1);
  auto preimage_dim = [&](int k) {
    std::vector<QVector> v = z_prev;
    const auto bk = boundaries(k);
    v.insert(v.end(), bk.begin(), bk.end());
    const std::size_t dv = span_dim(v, dim);
    v.insert(v.end(), reps.begin(), reps.end());
    return h + dv - span_dim(v, dim);
  };

  SubquotientReport r;
  if (j == n + 1) {
    r.dim_M = h;
    r.dim_N = preimage_dim(n + 1);
  } else {
    r.dim_M = preimage_dim(j);
    r.dim_N = j == i ? r.dim_M : preimage_dim(j - 1);
  }
  r.dim_P = r.dim_M - r.dim_N;
  return r;
}

Barcode barcode(const Filtration& f, const PersistenceTable& t, int p) {
  Barcode out;
  out.p = p;
  const int n = f.last();
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) {
      const long mu = multiplicity(t, p, i, j);
      if (mu < 0) throw std::logic_error("negative multiplicity");
      if (mu == 0) continue;
      Bar bar;
      bar.birth_index = i;
      bar.birth = f.value(i);
      bar.mult = mu;
      if (j <= n) {
        bar.death_index = j;
        bar.death = f.value(j);
      }
      out.bars.push_back(std::move(bar));
    }
  }
  return out;
}

Barcode barcode(const Filtration& f, int p) { return barcode(f, PersistenceTable(f), p); }

std::vector<Barcode> barcodes(const Filtration& f, int max_p) {
  const PersistenceTable t(f);
  std::vector<Barcode> out;
  for (int p = 0; p <= max_p; ++p) out.push_back(barcode(f, t, p));
  return out;
}

}  // namespace sabar
