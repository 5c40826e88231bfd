#include "mckay/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "mckay/error.hpp"

namespace mckay {

namespace {

struct Field {
  unsigned m = 1;
  unsigned phi = 1;
  std::vector<Rational> poly;
  // Nonzero terms of Phi_m below the leading (monic) term.
  std::vector<std::pair<unsigned, Rational>> tail;
};

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Long division; both inputs trimmed, divisor nonzero.
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
  Poly quot;
  if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, 0);
  const Rational& lead = den.back();
  while (!num.empty() && num.size() >= den.size()) {
    const std::size_t shift = num.size() - den.size();
    Rational c = num.back() / lead;
    quot[shift] = c;
    for (std::size_t t = 0; t < den.size(); ++t) num[shift + t] -= c * den[t];
    num.pop_back();
    trim(num);
  }
  return {std::move(quot), std::move(num)};
}

class FieldCache {
 public:
  const Field& get(unsigned m) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto it = fields_.find(m);
    if (it != fields_.end()) return *it->second;
    auto field = build(m);
    const Field& ref = *field;
    fields_.emplace(m, std::move(field));
    return ref;
  }

 private:
  std::unique_ptr<Field> build(unsigned m) {
    auto f = std::make_unique<Field>();
    f->m = m;
    // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    Poly num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    Poly den{1};
    for (unsigned d = 1; d < m; ++d) {
      if (m % d == 0) den = poly_mul(den, get(d).poly);
    }
    auto [quot, rem] = poly_divmod(std::move(num), den);
    if (!rem.empty()) throw ConsistencyError("cyclotomic division left a remainder");
    f->poly = std::move(quot);
    f->phi = static_cast<unsigned>(f->poly.size() - 1);
    for (unsigned t = 0; t < f->phi; ++t) {
      if (sgn(f->poly[t]) != 0) f->tail.emplace_back(t, f->poly[t]);
    }
    return f;
  }

  std::recursive_mutex mutex_;
  std::map<unsigned, std::unique_ptr<Field>> fields_;
};

FieldCache& cache() {
  static FieldCache instance;
  return instance;
}

const Field& field(unsigned m) {
  thread_local const Field* last = nullptr;
  if (last != nullptr && last->m == m) return *last;
  last = &cache().get(m);
  return *last;
}

// Reduces p modulo Phi_m in place and resizes to phi(m).
void reduce(Poly& p, const Field& f) {
  for (std::size_t k = p.size(); k-- > f.phi;) {
    if (sgn(p[k]) == 0) continue;
    const std::size_t base = k - f.phi;
    for (const auto& [t, c] : f.tail) p[base + t] -= p[k] * c;
    p[k] = 0;
  }
  p.resize(f.phi);
}

void check_same(const CycNum& a, const CycNum& b) {
  if (a.conductor() != b.conductor()) {
    throw ArithmeticError("conductor mismatch: " + std::to_string(a.conductor()) +
                          " vs " + std::to_string(b.conductor()));
  }
}

// Product of two coordinate vectors of the same field, reduced.
void multiply_into(Poly& out, std::span<const Rational> a, std::span<const Rational> b,
                   const Field& f) {
  thread_local std::vector<unsigned> nz_a;
  thread_local std::vector<unsigned> nz_b;
  nz_a.clear();
  nz_b.clear();
  for (unsigned i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) nz_a.push_back(i);
  for (unsigned i = 0; i < b.size(); ++i)
    if (sgn(b[i]) != 0) nz_b.push_back(i);
  out.assign(2 * f.phi - 1, 0);
  for (unsigned i : nz_a)
    for (unsigned j : nz_b) out[i + j] += a[i] * b[j];
  reduce(out, f);
}

// Rational Gaussian solve of E x = rhs, E given column-major as `cols`.
std::optional<Poly> solve_rational(std::vector<Poly> cols, Poly rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t n = cols.size();
  std::vector<Poly> aug(rows, Poly(n + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = cols[c][r];
    aug[r][n] = rhs[r];
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && sgn(aug[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[row]);
    Rational inv = 1 / aug[row][c];
    for (std::size_t k = c; k <= n; ++k) aug[row][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || sgn(aug[r][c]) == 0) continue;
      Rational factor = aug[r][c];
      for (std::size_t k = c; k <= n; ++k) aug[r][k] -= factor * aug[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (sgn(aug[r][n]) != 0) return std::nullopt;
  if (pivots.size() != n) throw ConsistencyError("subfield embedding is not injective");
  Poly x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

std::size_t hash_value(const Rational& q) {
  const auto limb = [](mpz_srcptr z) -> std::size_t {
    std::size_t h = static_cast<std::size_t>(z->_mp_size);
    if (z->_mp_size != 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z, 0)) * 0x9e3779b97f4a7c15ull;
    return h;
  };
  return limb(q.get_num_mpz_t()) * 31 + limb(q.get_den_mpz_t());
}

unsigned euler_phi(unsigned m) {
  if (m == 0) throw ArithmeticError("euler_phi(0) is undefined");
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Rational> cyclo_poly(unsigned m) {
  if (m == 0) throw ArithmeticError("cyclotomic polynomial of order 0");
  return field(m).poly;
}

CycNum::CycNum(unsigned conductor) : conductor_(conductor) {
  if (conductor == 0) throw ArithmeticError("conductor must be positive");
  coeffs_.assign(field(conductor).phi, 0);
}

CycNum::CycNum(unsigned conductor, const Rational& value) : CycNum(conductor) {
  coeffs_[0] = value;
}

CycNum::CycNum(unsigned conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor == 0) throw ArithmeticError("conductor must be positive");
  if (coeffs_.size() != field(conductor).phi) {
    throw DimensionError("Q(zeta_" + std::to_string(conductor) + ") needs " +
                         std::to_string(field(conductor).phi) + " coordinates, got " +
                         std::to_string(coeffs_.size()));
  }
}

CycNum CycNum::from_polynomial(unsigned conductor, std::vector<Rational> poly) {
  const Field& f = field(conductor);
  if (poly.size() < f.phi) poly.resize(f.phi, 0);
  reduce(poly, f);
  return CycNum(conductor, std::move(poly));
}

CycNum CycNum::zeta(unsigned conductor, long k) {
  if (conductor == 0) throw ArithmeticError("conductor must be positive");
  const long m = static_cast<long>(conductor);
  const auto e = static_cast<std::size_t>(((k % m) + m) % m);
  std::vector<Rational> poly(e + 1, 0);
  poly[e] = 1;
  return from_polynomial(conductor, std::move(poly));
}

bool CycNum::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool CycNum::is_rational() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

bool CycNum::is_one() const noexcept { return is_rational() && coeffs_[0] == 1; }

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& q : out.coeffs_) q = -q;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  check_same(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(rhs.coeffs_[i]) != 0) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
  check_same(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(rhs.coeffs_[i]) != 0) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const Rational& rhs) {
  for (auto& q : coeffs_)
    if (sgn(q) != 0) q *= rhs;
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
  check_same(*this, rhs);
  if (rhs.is_rational()) return *this *= rhs.coeffs_[0];
  if (is_rational()) {
    Rational scale = coeffs_[0];
    coeffs_ = rhs.coeffs_;
    return *this *= scale;
  }
  thread_local Poly scratch;
  multiply_into(scratch, coeffs_, rhs.coeffs_, field(conductor_));
  std::swap(coeffs_, scratch);
  return *this;
}

void CycNum::fused(const CycNum& a, const CycNum& b, bool subtract) {
  check_same(*this, a);
  check_same(a, b);
  const auto apply = [this, subtract](std::size_t i, const Rational& term) {
    if (subtract) {
      coeffs_[i] -= term;
    } else {
      coeffs_[i] += term;
    }
  };
  const auto scaled = [&](const Rational& s, const CycNum& v) {
    if (sgn(s) == 0) return;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (sgn(v.coeffs_[i]) != 0) apply(i, s * v.coeffs_[i]);
  };
  if (a.is_rational()) return scaled(a.coeffs_[0], b);
  if (b.is_rational()) return scaled(b.coeffs_[0], a);
  thread_local Poly scratch;
  multiply_into(scratch, a.coeffs_, b.coeffs_, field(conductor_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(scratch[i]) != 0) apply(i, scratch[i]);
}

std::size_t CycNum::hash() const noexcept {
  std::size_t h = conductor_;
  for (const auto& q : coeffs_) h = h * 1000003u ^ hash_value(q);
  return h;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }

CycNum cyc_inv(const CycNum& a) {
  if (a.is_zero()) throw ArithmeticError("division by zero in Q(zeta_" +
                                         std::to_string(a.conductor()) + ")");
  const unsigned m = a.conductor();
  if (a.is_rational()) return CycNum(m, Rational(1 / a.constant()));

  // Extended Euclid in Q[x]: track s with s * a == r (mod Phi_m).
  Poly r0 = field(m).poly;
  Poly r1(a.coeffs().begin(), a.coeffs().end());
  trim(r1);
  Poly s0;
  Poly s1{1};
  while (r1.size() > 1) {
    auto [q, rem] = poly_divmod(r0, r1);
    Poly next = s0;
    Poly qs = poly_mul(q, s1);
    if (next.size() < qs.size()) next.resize(qs.size(), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) next[i] -= qs[i];
    trim(next);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  if (r1.empty()) throw ConsistencyError("element shares a factor with the cyclotomic polynomial");
  Rational scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  return CycNum::from_polynomial(m, std::move(s1));
}

CycNum cyc_embed(const CycNum& a, unsigned target) {
  const unsigned m = a.conductor();
  if (target == 0 || target % m != 0) {
    throw ArithmeticError("cannot embed Q(zeta_" + std::to_string(m) + ") into Q(zeta_" +
                          std::to_string(target) + ")");
  }
  if (target == m) return a;
  if (a.is_rational()) return CycNum(target, a.constant());
  const unsigned step = target / m;
  const auto coeffs = a.coeffs();
  Poly poly((coeffs.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) poly[i * step] = coeffs[i];
  return CycNum::from_polynomial(target, std::move(poly));
}

std::optional<CycNum> cyc_restrict(const CycNum& a, unsigned d) {
  const unsigned m = a.conductor();
  if (d == 0 || m % d != 0) {
    throw ArithmeticError("Q(zeta_" + std::to_string(d) + ") is not a subfield of Q(zeta_" +
                          std::to_string(m) + ")");
  }
  if (d == m) return a;
  if (a.is_rational()) return CycNum(d, a.constant());
  const unsigned step = m / d;
  const unsigned phi_d = euler_phi(d);
  const unsigned phi_m = euler_phi(m);
  const auto coeffs = a.coeffs();
  if ((phi_d - 1) * step < phi_m) {
    // Basis powers embed as monomials: read off coordinates directly.
    std::vector<Rational> out(phi_d);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (sgn(coeffs[i]) == 0) continue;
      if (i % step != 0) return std::nullopt;
      out[i / step] = coeffs[i];
    }
    return CycNum(d, std::move(out));
  }
  std::vector<Poly> cols;
  cols.reserve(phi_d);
  for (unsigned i = 0; i < phi_d; ++i) {
    const CycNum image = cyc_embed(CycNum::zeta(d, i), m);
    cols.emplace_back(image.coeffs().begin(), image.coeffs().end());
  }
  auto x = solve_rational(std::move(cols), Poly(coeffs.begin(), coeffs.end()));
  if (!x) return std::nullopt;
  return CycNum(d, std::move(*x));
}

CycNum cyc_pow(const CycNum& a, long k) {
  CycNum base = k < 0 ? cyc_inv(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  CycNum result(a.conductor(), 1);
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

unsigned minimal_conductor(std::span<const CycNum> values) {
  unsigned common = 1;
  for (const auto& v : values) common = std::lcm(common, v.conductor());
  for (unsigned d = 1; d < common; ++d) {
    if (common % d != 0) continue;
    const bool fits = std::all_of(values.begin(), values.end(), [&](const CycNum& v) {
      return cyc_restrict(cyc_embed(v, common), d).has_value();
    });
    if (fits) return d;
  }
  return common;
}

}  // namespace mckay
