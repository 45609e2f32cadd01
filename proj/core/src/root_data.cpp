#include "steinberg/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/rational.hpp>

#include "steinberg/errors.hpp"

namespace steinberg {

namespace {

using Rational = boost::rational<std::int64_t>;

std::int64_t mix(std::size_t h, std::int64_t v) noexcept {
  return static_cast<std::int64_t>(h ^ (static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL +
                                        (h << 6) + (h >> 2)));
}

void validate_type(Series s, int rank) {
  std::ostringstream msg;
  msg << "invalid root system type " << series_letter(s) << rank;
  if (rank < 1) throw ConfigError(msg.str());
  if (rank > static_cast<int>(kMaxRank)) {
    throw ConfigError(msg.str() + ": rank is capped at " + std::to_string(kMaxRank));
  }
  bool ok = false;
  switch (s) {
    case Series::A: ok = rank >= 1; break;
    case Series::B: ok = rank >= 2; break;
    case Series::C: ok = rank >= 2; break;
    case Series::D: ok = rank >= 4; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
    case Series::F: ok = rank == 4; break;
    case Series::G: ok = rank == 2; break;
  }
  if (!ok) throw ConfigError(msg.str());
}

}  // namespace

char series_letter(Series s) {
  return static_cast<char>('A' + static_cast<int>(s));
}

Series parse_series(const std::string& s) {
  if (s.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Series>(c - 'A');
  }
  throw ConfigError("unknown root system series '" + s + "'");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Weight IntMatrix::apply(const Weight& v) const noexcept {
  Weight out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < n_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) noexcept {
  IntMatrix out(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      const std::int64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < a.n_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

std::size_t IntMatrix::hash() const noexcept {
  std::size_t h = n_;
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) h = static_cast<std::size_t>(mix(h, (*this)(r, c)));
  return h;
}

IntMatrix cartan_matrix(Series series, int rank) {
  validate_type(series, rank);
  const auto n = static_cast<std::size_t>(rank);
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  // Bourbaki chain 1 - 2 - ... - n, adjusted per series below.
  auto link = [&](std::size_t i, std::size_t j) {
    a(i, j) = -1;
    a(j, i) = -1;
  };
  switch (series) {
    case Series::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::B:
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case Series::C:
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case Series::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Series::E:
      // 1 - 3 - 4 - 5 - 6 - ..., with 2 attached to 4.
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(2, 1) = -2;  // <alpha_2, alpha_3^vee>: alpha_2 long, alpha_3 short
      break;
    case Series::G:
      // alpha_1 short, alpha_2 long.
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
  }
  return a;
}

RootSystem RootSystem::build(Series series, int rank) {
  RootSystem rs;
  rs.series_ = series;
  rs.cartan_ = cartan_matrix(series, rank);
  const std::size_t n = rs.rank();
  const IntMatrix& a = rs.cartan_;

  // Symmetrizer: a(i,j) d_i = a(j,i) d_j, propagated along the Dynkin diagram.
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a(i, j) == 0 || d[j].numerator() != 0) continue;
      d[j] = d[i] * Rational(a(i, j), a(j, i));
      stack.push_back(j);
    }
  }
  std::int64_t den = 1;
  for (const auto& x : d) den = std::lcm(den, x.denominator());
  std::int64_t g = 0;
  for (const auto& x : d) g = std::gcd(g, (x * den).numerator());
  for (const auto& x : d) rs.sym_.push_back((x * den).numerator() / g);

  // Exact inverse of the Cartan matrix by Gauss-Jordan over Q.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col].numerator() == 0) ++piv;
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].numerator() == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  rs.inv_den_ = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.inv_den_ = std::lcm(rs.inv_den_, m[i][n + j].denominator());
  rs.inv_num_ = IntMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rs.inv_num_(i, j) = (m[i][n + j] * rs.inv_den_).numerator();

  // Roots by closing the simple roots under simple reflections, in
  // simple-root coordinates: s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
  std::set<Weight> roots;
  std::vector<Weight> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Weight e(n);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& beta : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t pair = 0;
        for (std::size_t j = 0; j < n; ++j) pair += a(i, j) * beta[j];
        if (pair == 0) continue;
        Weight img = beta;
        img[i] -= pair;
        if (roots.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  for (const Weight& beta : roots) {
    const auto c = beta.coords();
    if (std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x >= 0; }))
      rs.pos_roots_.push_back(beta);
  }
  auto height = [](const Weight& w) {
    const auto c = w.coords();
    return std::accumulate(c.begin(), c.end(), std::int64_t{0});
  };
  std::sort(rs.pos_roots_.begin(), rs.pos_roots_.end(), [&](const Weight& x, const Weight& y) {
    const auto hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });

  for (const Weight& beta : rs.pos_roots_) {
    Weight fund(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) fund[i] += a(i, j) * beta[j];
    rs.pos_roots_fund_.push_back(fund);

    // (beta, beta)/2 = sum_ij beta_i beta_j a(i,j) d_i / 2.
    std::int64_t twice_half = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) twice_half += beta[i] * beta[j] * a(i, j) * rs.sym_[i];
    const std::int64_t half = twice_half / 2;
    Weight coroot(n);
    for (std::size_t j = 0; j < n; ++j) coroot[j] = beta[j] * rs.sym_[j] / half;
    rs.pos_coroots_.push_back(coroot);
  }
  return rs;
}

std::string RootSystem::name() const {
  return std::string(1, series_letter(series_)) + std::to_string(rank());
}

Weight RootSystem::rho() const {
  Weight r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = 1;
  return r;
}

Weight RootSystem::simple_root(std::size_t i) const {
  Weight r(rank());
  for (std::size_t k = 0; k < rank(); ++k) r[k] = cartan_(k, i);
  return r;
}

std::int64_t RootSystem::pairing_simple(const Weight& lambda, std::size_t i) const {
  if (i >= rank()) throw DomainError("simple coroot index out of range");
  return lambda[i];
}

std::int64_t RootSystem::pairing_root(const Weight& lambda, std::size_t k) const {
  if (k >= pos_coroots_.size()) throw DomainError("positive root index out of range");
  const Weight& c = pos_coroots_[k];
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += c[j] * lambda[j];
  return s;
}

Weight RootSystem::root_coords_scaled(const Weight& lambda) const {
  return inv_num_.apply(lambda);
}

bool RootSystem::in_root_lattice(const Weight& lambda) const {
  const Weight c = root_coords_scaled(lambda);
  for (std::size_t i = 0; i < rank(); ++i)
    if (c[i] % inv_den_ != 0) return false;
  return true;
}

std::int64_t RootSystem::form(const Weight& lambda, const Weight& mu) const {
  const Weight c = root_coords_scaled(lambda);
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += c[j] * sym_[j] * mu[j];
  return s;
}

Weight RootSystem::reflect(const Weight& lambda, std::size_t i) const {
  Weight out = lambda;
  const std::int64_t k = lambda[i];
  if (k == 0) return out;
  for (std::size_t r = 0; r < rank(); ++r) out[r] -= k * cartan_(r, i);
  return out;
}

IntMatrix RootSystem::reflection_matrix(std::size_t i) const {
  IntMatrix s = IntMatrix::identity(rank());
  for (std::size_t r = 0; r < rank(); ++r) s(r, i) -= cartan_(r, i);
  return s;
}

void RootSystem::check_rank(const Weight& lambda) const {
  if (lambda.rank() != rank()) {
    throw DomainError("weight " + lambda.to_string() + " has rank " +
                      std::to_string(lambda.rank()) + ", expected " + std::to_string(rank()));
  }
}

bool is_dominant(const Weight& lambda) {
  const auto c = lambda.coords();
  return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x >= 0; });
}

bool is_restricted(const Weight& lambda, std::int64_t p) {
  const auto c = lambda.coords();
  return std::all_of(c.begin(), c.end(), [p](std::int64_t x) { return x >= 0 && x < p; });
}

Weight dot_multiply(std::int64_t n, const Weight& lambda) {
  Weight out = lambda;
  for (std::size_t i = 0; i < lambda.rank(); ++i) out[i] = n * lambda[i] + (n - 1);
  return out;
}

SteinbergSplit steinberg_split(const Weight& lambda, std::int64_t p) {
  if (p < 2) throw DomainError("steinberg_split needs p >= 2");
  if (!is_dominant(lambda)) throw DomainError("steinberg_split: " + lambda.to_string() + " is not dominant");
  SteinbergSplit out{Weight(lambda.rank()), Weight(lambda.rank())};
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    out.restricted[i] = lambda[i] % p;
    out.quotient[i] = lambda[i] / p;
  }
  return out;
}

void check_lattice_config(const RootSystem& rs, LatticeMode mode, std::int64_t p) {
  if (p < 2) throw ConfigError("p must be at least 2");
  if (mode != LatticeMode::adjoint) return;
  if (!rs.in_root_lattice((p - 1) * rs.rho())) {
    throw ConfigError("adjoint " + rs.name() + " with p = " + std::to_string(p) +
                      ": (p-1)rho is not in the root lattice");
  }
}

// Weight ---------------------------------------------------------------------

Weight::Weight(std::size_t rank) : rank_(static_cast<std::uint8_t>(rank)) {
  if (rank > kMaxRank) throw ConfigError("rank exceeds " + std::to_string(kMaxRank));
}

Weight::Weight(std::initializer_list<std::int64_t> coords) : Weight(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight Weight::from_span(std::span<const std::int64_t> coords) {
  Weight w(coords.size());
  std::copy(coords.begin(), coords.end(), w.c_.begin());
  return w;
}

Weight& Weight::operator+=(const Weight& o) noexcept {
  for (std::size_t i = 0; i < rank_; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) noexcept {
  for (std::size_t i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(std::int64_t k) noexcept {
  for (std::size_t i = 0; i < rank_; ++i) c_[i] *= k;
  return *this;
}

bool Weight::is_zero() const noexcept {
  for (std::size_t i = 0; i < rank_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::string Weight::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = w.rank();
  for (std::int64_t x : w.coords()) h = static_cast<std::size_t>(mix(h, x));
  return h;
}

}  // namespace steinberg
