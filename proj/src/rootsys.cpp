#include "lzpath/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "lzpath/error.hpp"
#include "lzpath/weyl.hpp"

namespace lzp {

// ---------------------------------------------------------------- Weight

bool Weight::is_zero() const {
  return delta == 0 && std::all_of(pairings.begin(), pairings.end(), [](const Rational& q) { return q == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t j = 0; j < pairings.size(); ++j) pairings[j] += o.pairings[j];
  delta += o.delta;
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t j = 0; j < pairings.size(); ++j) pairings[j] -= o.pairings[j];
  delta -= o.delta;
  return *this;
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& p : pairings) p *= c;
  delta *= c;
  return *this;
}

bool operator==(const Weight& a, const Weight& b) { return a.delta == b.delta && a.pairings == b.pairings; }

bool operator<(const Weight& a, const Weight& b) {
  for (std::size_t j = 0; j < a.pairings.size(); ++j) {
    if (a.pairings[j] < b.pairings[j]) return true;
    if (b.pairings[j] < a.pairings[j]) return false;
  }
  return a.delta < b.delta;
}

Rational Weight::max_abs() const {
  Rational m = abs(delta);
  for (const auto& p : pairings) m = std::max<Rational>(m, abs(p));
  return m;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < w.pairings.size(); ++j) os << (j ? "," : "") << to_string(w.pairings[j]);
  os << ';' << to_string(w.delta) << ')';
  return os.str();
}

std::size_t hash_value(const Weight& w) {
  std::size_t h = hash_value(w.delta);
  for (const auto& p : w.pairings) h = h * 1000003u ^ hash_value(p);
  return h;
}

bool positively_collinear(const Weight& mu, const Weight& nu) {
  // find the ratio on the first non-zero coordinate of nu
  std::optional<Rational> c;
  auto visit = [&](const Rational& m, const Rational& n) {
    if (n == 0) return m == 0;
    if (!c) {
      c = m / n;
      return *c > 0;
    }
    return m == *c * n;
  };
  for (std::size_t j = 0; j < nu.pairings.size(); ++j)
    if (!visit(mu.pairings[j], nu.pairings[j])) return false;
  if (!visit(mu.delta, nu.delta)) return false;
  return c.has_value();
}

// ---------------------------------------------------------------- linear algebra

namespace {

using Matrix = std::vector<std::vector<Rational>>;

/// Basis of the null space of m (rows x cols).
std::vector<std::vector<Rational>> nullspace(Matrix m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c] == 0) continue;
      Rational f = m[k][c];
      for (std::size_t j = 0; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(Matrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == c || m[k][c] == 0) continue;
      Rational f = m[k][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[k][j] -= f * m[c][j];
    }
  }
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(m[i].begin() + n, m[i].end());
  return out;
}

/// Primitive integer vector with positive entries, or nullopt if some entry is not strictly positive.
std::optional<std::vector<long>> primitive_positive(std::vector<Rational> v) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class z = x.get_num() * (l / x.get_den());
    ints.push_back(z);
    g = gcd(g, z);
  }
  if (g == 0) return std::nullopt;
  if (ints[0] < 0) g = -g;
  std::vector<long> out;
  for (auto& z : ints) {
    z /= g;
    if (z <= 0) return std::nullopt;
    out.push_back(z.get_si());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- CartanMatrix

CartanMatrix::CartanMatrix(std::vector<std::vector<long>> entries) : entries_(std::move(entries)) {
  for (const auto& row : entries_)
    if (row.size() != entries_.size()) throw Error(Errc::BadInput, "Cartan matrix is not square");
}

void CartanMatrix::check_gcm() const {
  const std::size_t n = size();
  if (n == 0) throw Error(Errc::NotGCM, "empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i][i] != 2)
      throw Error(Errc::NotGCM, "diagonal entry a_" + std::to_string(i) + std::to_string(i) + " != 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_[i][j] > 0)
        throw Error(Errc::NotGCM, "positive off-diagonal entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if ((entries_[i][j] == 0) != (entries_[j][i] == 0))
        throw Error(Errc::NotGCM, "a_ij = 0 but a_ji != 0 at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

// ---------------------------------------------------------------- AffineData

AffineData AffineData::validate(CartanMatrix cartan, Index special_vertex) {
  cartan.check_gcm();
  const std::size_t n = cartan.size();
  if (special_vertex < 0 || static_cast<std::size_t>(special_vertex) >= n)
    throw Error(Errc::BadInput, "special vertex out of range");
  if (n < 2) throw Error(Errc::NotAffine, "rank-one matrix has no kernel");

  Matrix a(n, std::vector<Rational>(n)), at(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = cartan(i, j);
      at[j][i] = cartan(i, j);
    }

  // δ(α_j^∨) = Σ_i a_i a_ji = 0: marks span ker A; comarks span ker A^T.
  auto ker = nullspace(a);
  auto coker = nullspace(at);
  if (ker.size() != 1 || coker.size() != 1)
    throw Error(Errc::NotAffine, "kernel has dimension " + std::to_string(ker.size()) + ", expected 1");
  auto marks = primitive_positive(ker[0]);
  auto comarks = primitive_positive(coker[0]);
  if (!marks || !comarks) throw Error(Errc::NotAffine, "kernel vector is not strictly positive");

  AffineData d;
  d.cartan_ = std::move(cartan);
  d.special_ = special_vertex;
  d.marks_ = *marks;
  d.comarks_ = *comarks;
  for (std::size_t i = 0; i < n; ++i) d.sym_.push_back(Rational(mpz_class(d.comarks_[i]), mpz_class(d.marks_[i])));
  for (auto& q : d.sym_) q.canonicalize();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d.sym_[i] * d.cartan_(i, j) != d.sym_[j] * d.cartan_(j, i))
        throw Error(Errc::NotSymmetrizable, "d_i a_ij != d_j a_ji at (" + std::to_string(i) + "," + std::to_string(j) + ")");

  const Index s = special_vertex;
  for (std::size_t j = 0; j < n; ++j) {
    Weight alpha(n);
    for (std::size_t i = 0; i < n; ++i) alpha.pairings[i] = d.cartan_(i, j);
    // α_j(d) = δ_js and δ(d) = a_s
    if (static_cast<Index>(j) == s) alpha.delta = Rational(mpz_class(1), mpz_class(d.marks_[s]));
    d.simple_roots_.push_back(std::move(alpha));
  }
  d.delta_ = Weight(n);
  for (std::size_t j = 0; j < n; ++j) d.delta_ += Rational(d.marks_[j]) * d.simple_roots_[j];

  auto cls = d.classical_indices();
  Matrix sub(cls.size(), std::vector<Rational>(cls.size()));
  for (std::size_t p = 0; p < cls.size(); ++p)
    for (std::size_t q = 0; q < cls.size(); ++q) sub[p][q] = d.cartan_(cls[p], cls[q]);
  auto inv = inverse(sub);
  if (!inv) throw Error(Errc::NotAffine, "Cartan submatrix on I \\ {special} is singular");
  d.inv_classical_ = std::move(*inv);

  d.varpi_.assign(n, Weight(n));
  for (std::size_t p = 0; p < cls.size(); ++p) {
    std::vector<Rational> coords(n);
    for (std::size_t q = 0; q < cls.size(); ++q) coords[cls[q]] = d.inv_classical_[q][p];
    d.varpi_[cls[p]] = d.from_root_coordinates(coords);
  }
  return d;
}

IndexSet AffineData::all_indices() const {
  IndexSet out(size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

IndexSet AffineData::classical_indices() const {
  IndexSet out;
  for (Index j = 0; j < static_cast<Index>(size()); ++j)
    if (j != special_) out.push_back(j);
  return out;
}

Weight AffineData::fundamental(Index j) const {
  Weight w(size());
  w.pairings.at(j) = 1;
  return w;
}

const Weight& AffineData::fundamental_level_zero(Index i) const {
  if (i == special_ || i < 0 || static_cast<std::size_t>(i) >= size())
    throw Error(Errc::OutOfRange, "level-zero fundamental weight requires i in I \\ {special}");
  return varpi_[i];
}

Rational AffineData::level(const Weight& w) const {
  Rational l;
  for (std::size_t j = 0; j < size(); ++j) l += comarks_[j] * w.pairings[j];
  return l;
}

RootCoordinates AffineData::root_coordinates(const Weight& w) const {
  const std::size_t n = size();
  RootCoordinates rc;
  rc.lambda_coeff = level(w) / comarks_[special_];
  rc.alpha.assign(n, Rational(0));
  // δ-coefficient of Σ c_j α_j is c_s / a_s
  rc.alpha[special_] = marks_[special_] * w.delta;
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = w.pairings[i] - cartan_(i, special_) * rc.alpha[special_];
    if (static_cast<Index>(i) == special_) rhs[i] -= rc.lambda_coeff;
  }
  auto cls = classical_indices();
  for (std::size_t p = 0; p < cls.size(); ++p) {
    Rational v;
    for (std::size_t q = 0; q < cls.size(); ++q) v += inv_classical_[p][q] * rhs[cls[q]];
    rc.alpha[cls[p]] = v;
  }
  // remaining equation (row s) holds by the level identity; assert it
  Rational row;
  for (std::size_t j = 0; j < n; ++j) row += cartan_(special_, j) * rc.alpha[j];
  if (row != w.pairings[special_] - rc.lambda_coeff) throw Error(Errc::UnsupportedWeight, "weight outside span{α_j} ⊕ ℚΛ_s: " + to_string(w));
  return rc;
}

Weight AffineData::from_root_coordinates(std::span<const Rational> alpha) const {
  Weight w(size());
  for (std::size_t j = 0; j < size(); ++j)
    if (alpha[j] != 0) w += alpha[j] * simple_roots_[j];
  return w;
}

Rational AffineData::bilinear(const Weight& a, const Weight& b) const {
  auto ca = root_coordinates(a);
  auto cb = root_coordinates(b);
  // (a,b) = k_a (Λ_s,b) + Σ_j c^a_j (α_j,b);  (α_j,b) = d_j b(α_j^∨),  (Λ_s,b) = d_s c^b_s
  Rational v = ca.lambda_coeff * sym_[special_] * cb.alpha[special_];
  for (std::size_t j = 0; j < size(); ++j) v += ca.alpha[j] * sym_[j] * b.pairings[j];
  return v;
}

ClassicalWeight AffineData::classical_projection(const Weight& w) const {
  if (level(w) != 0) throw Error(Errc::NotInH0Star, "weight has non-zero level: " + to_string(w));
  return ClassicalWeight{w.pairings};
}

Rational AffineData::classical_bilinear(const ClassicalWeight& a, const ClassicalWeight& b) const {
  return bilinear(Weight(a.pairings, 0), Weight(b.pairings, 0));
}

Rational AffineData::classical_norm(const Weight& w) const {
  auto c = classical_projection(w);
  return classical_bilinear(c, c);
}

std::vector<std::vector<Rational>> AffineData::gram() const {
  std::vector<std::vector<Rational>> g(size(), std::vector<Rational>(size()));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) g[i][j] = sym_[i] * cartan_(i, j);
  return g;
}

// ---------------------------------------------------------------- real roots

Rational RealRoot::pair(const Weight& lambda) const {
  Rational v;
  for (std::size_t j = 0; j < coroot.size(); ++j)
    if (coroot[j] != 0) v += coroot[j] * lambda.pairings[j];
  return v;
}

std::vector<RealRoot> real_roots_window(const AffineData& data, const Rational& bound, std::optional<IndexSet> colors) {
  const IndexSet cols = colors ? *colors : data.all_indices();
  std::map<Weight, RealRoot> found;
  std::deque<Weight> queue;
  for (Index j : cols) {
    const Weight& a = data.simple_root(j);
    if (a.max_abs() > bound || found.count(a)) continue;
    RealRoot r;
    r.root = a;
    r.simple = j;
    found.emplace(a, std::move(r));
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    const RealRoot parent = found.at(cur);
    for (Index j : cols) {
      Weight next = reflect(data, cur, j);
      if (next.max_abs() > bound || found.count(next)) continue;
      RealRoot r;
      r.root = next;
      r.simple = parent.simple;
      r.word.push_back(j);
      r.word.insert(r.word.end(), parent.word.begin(), parent.word.end());
      found.emplace(next, std::move(r));
      queue.push_back(std::move(next));
    }
  }
  std::vector<RealRoot> out;
  out.reserve(found.size());
  for (auto& [w, r] : found) {
    auto rc = data.root_coordinates(w);
    r.coords = rc.alpha;
    r.norm = data.bilinear(w, w);
    r.coroot.resize(data.size());
    for (std::size_t j = 0; j < data.size(); ++j) r.coroot[j] = 2 * r.coords[j] * data.symmetrizers()[j] / r.norm;
    r.positive = std::all_of(r.coords.begin(), r.coords.end(), [](const Rational& q) { return q >= 0; });
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RealRoot> positive_roots(std::span<const RealRoot> roots) {
  std::vector<RealRoot> out;
  for (const auto& r : roots)
    if (r.positive) out.push_back(r);
  return out;
}

}  // namespace lzp
