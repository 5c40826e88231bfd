#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mckay {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonical form).
using Rational = mpq_class;

std::string to_string(const Rational& q);
std::size_t hash_value(const Rational& q);

/// Euler's totient.
unsigned euler_phi(unsigned m);

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
/// Memoized; safe to call concurrently.
std::vector<Rational> cyclo_poly(unsigned m);

/// An element of Q(zeta_m), stored as its coordinates in the power basis
/// 1, zeta, ..., zeta^(phi(m)-1) modulo Phi_m. Coordinates are canonical,
/// so equality and hashing are coordinatewise.
class CycNum {
 public:
  /// Zero in Q(zeta_1) = Q.
  CycNum() : CycNum(1u) {}
  /// Zero in Q(zeta_m).
  explicit CycNum(unsigned conductor);
  CycNum(unsigned conductor, const Rational& value);
  CycNum(unsigned conductor, long value) : CycNum(conductor, Rational(value)) {}
  /// Takes coordinates directly; `coeffs.size()` must equal phi(conductor).
  CycNum(unsigned conductor, std::vector<Rational> coeffs);

  /// Reduces an arbitrary-degree polynomial in zeta_m modulo Phi_m.
  static CycNum from_polynomial(unsigned conductor, std::vector<Rational> poly);
  /// zeta_m^k for any integer k (taken mod m).
  static CycNum zeta(unsigned conductor, long k = 1);

  unsigned conductor() const noexcept { return conductor_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  /// The constant coordinate. Meaningful as "the value" only if is_rational().
  const Rational& constant() const noexcept { return coeffs_[0]; }

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator*=(const Rational& rhs);

  /// this += a * b and this -= a * b, without materializing the product.
  void add_mul(const CycNum& a, const CycNum& b) { fused(a, b, false); }
  void sub_mul(const CycNum& a, const CycNum& b) { fused(a, b, true); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

  std::size_t hash() const noexcept;

  /// Human-readable form using the token grammar of group-spec files,
  /// e.g. "1/2 + 3*z^2 - z^5". Parses back to the same value.
  std::string to_string() const;

 private:
  void fused(const CycNum& a, const CycNum& b, bool subtract);

  unsigned conductor_;
  std::vector<Rational> coeffs_;
};

CycNum cyc_mul(const CycNum& a, const CycNum& b);
/// Multiplicative inverse; throws ArithmeticError on zero.
CycNum cyc_inv(const CycNum& a);
/// Image under zeta_m -> zeta_target^(target/m). `target` must be a multiple
/// of the conductor of `a`.
CycNum cyc_embed(const CycNum& a, unsigned target);
/// Inverse of cyc_embed: the preimage in Q(zeta_d) if `a` lies in that
/// subfield, else nullopt. `d` must divide the conductor of `a`.
std::optional<CycNum> cyc_restrict(const CycNum& a, unsigned d);
/// a^k for integer k (negative powers invert).
CycNum cyc_pow(const CycNum& a, long k);

/// Smallest divisor d of the common conductor such that every value lies in
/// Q(zeta_d). Returns 1 for an empty list.
unsigned minimal_conductor(std::span<const CycNum> values);

struct CycNumHash {
  std::size_t operator()(const CycNum& a) const noexcept { return a.hash(); }
};

}  // namespace mckay
