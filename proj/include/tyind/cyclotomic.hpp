#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tyind/numtheory.hpp"
#include "tyind/polynomial.hpp"

namespace tyind {

// An exact element of the cyclotomic field Q(zeta_L). Coefficients are the
// power basis zeta^0 .. zeta^{phi(L)-1} after reduction modulo the L-th
// cyclotomic polynomial, so structural equality at a fixed conductor decides
// field equality. Mixed-conductor arithmetic embeds both operands into
// Q(zeta_lcm) first. Values are immutable.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rat(0)) {}
  explicit Cyclotomic(const Rat& r);
  explicit Cyclotomic(int64_t n) : Cyclotomic(Rat(n)) {}

  // zeta_order ^ exp, reduced into the power basis.
  static Cyclotomic root_of_unity(int64_t order, int64_t exp);

  int64_t conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws DomainError unless is_rational()

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic operator*(const Rat& r) const;
  Cyclotomic inv() const;  // throws DomainError on zero
  Cyclotomic pow(int64_t e) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Embeds into Q(zeta_target); current conductor must divide target.
  Cyclotomic embedded(int64_t target) const;

  // Rewrites over the minimal conductor.
  Cyclotomic reduced() const;

  // Complex conjugate (the Galois map zeta -> zeta^{-1}).
  Cyclotomic conj() const;

  // Debug/canonical rendering: "c0+c1*z8+..." with ascending powers.
  std::string str() const;

  std::complex<double> to_complex() const;

 private:
  Cyclotomic(int64_t conductor, std::vector<Rat> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}
  static Cyclotomic from_raw(int64_t conductor, const std::vector<Rat>& raw);
  friend Cyclotomic galois_apply(const Cyclotomic& x, int64_t s);

  int64_t conductor_;
  std::vector<Rat> coeffs_;
};

inline Cyclotomic operator*(const Rat& r, const Cyclotomic& x) { return x * r; }

// The field automorphism zeta_L -> zeta_L^s; requires gcd(s, L) = 1.
Cyclotomic galois_apply(const Cyclotomic& x, int64_t s);

// An exact positive square root of m >= 1, realized through quadratic Gauss
// sums (odd primes), zeta_8 + zeta_8^-1 (two), and multiplicativity.
const Cyclotomic& embed_sqrt(int64_t m);

// Least n with x^n = 1, or nullopt when x is not a root of unity. The search
// bound lcm(2, L) is exact for Q(zeta_L).
std::optional<int64_t> root_of_unity_order(const Cyclotomic& x);

// Writes a root of unity as (order n, exponent j) with x = zeta_n^j,
// 0 <= j < n, gcd(j, n) = 1 for n > 1. Throws DomainError if x is not one.
std::pair<int64_t, int64_t> as_root_of_unity(const Cyclotomic& x);

// Monic minimal polynomial over Q: the product of (t - sigma(x)) over the
// distinct Galois conjugates.
RatPoly minimal_polynomial(const Cyclotomic& x);

bool is_algebraic_integer(const Cyclotomic& x);

std::complex<double> to_complex(const Cyclotomic& x);

// num * base^{-half_power/2}: keeps square roots of integers symbolic so
// conductors stay small until a comparison forces an embedding. half_power
// may be negative (a positive power of sqrt(base)).
class ScaledValue {
 public:
  ScaledValue() : num_(Rat(0)), base_(1), half_power_(0) {}
  ScaledValue(Cyclotomic num, int64_t base, int64_t half_power);
  explicit ScaledValue(Cyclotomic num) : ScaledValue(std::move(num), 1, 0) {}
  explicit ScaledValue(const Rat& r) : ScaledValue(Cyclotomic(r)) {}

  const Cyclotomic& num() const { return num_; }
  int64_t base() const { return base_; }
  int64_t half_power() const { return half_power_; }

  bool is_zero() const { return num_.is_zero(); }

  // The same value with base ^ {-hp/2} folded in via embed_sqrt.
  Cyclotomic as_cyclotomic() const;

  // Equal as complex numbers (exact; embeds square roots only when the
  // half-power parities differ).
  bool equals(const ScaledValue& o) const;
  bool operator==(const ScaledValue& o) const { return equals(o); }

  ScaledValue operator-() const { return {-num_, base_, half_power_}; }
  ScaledValue operator+(const ScaledValue& o) const;
  ScaledValue operator-(const ScaledValue& o) const { return *this + (-o); }
  ScaledValue operator*(const ScaledValue& o) const;
  ScaledValue operator*(const Cyclotomic& c) const { return {num_ * c, base_, half_power_}; }
  ScaledValue operator*(const Rat& r) const { return {num_ * r, base_, half_power_}; }
  ScaledValue pow(int64_t e) const;  // e >= 0

  // Equivalent value with squarefree base and half_power in {0, 1}.
  ScaledValue normalized() const;

  std::complex<double> to_complex() const;

  // Canonical rendering "<cyclotomic>" or "<cyclotomic>|sqrt(B)^-1".
  std::string str() const;

 private:
  Cyclotomic num_;
  int64_t base_;
  int64_t half_power_;
};

}  // namespace tyind
