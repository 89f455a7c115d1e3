#pragma once

#include <vector>

#include "tyind/fourier.hpp"

namespace tyind {

// A function rho: A -> mu_infty with coboundary rho(a) rho(a+b)^{-1} rho(b)
// equal to chi(a, b); values are stored as exponents of zeta_{2N} so the
// hot routes stay in integer arithmetic. Construction verifies the
// coboundary identity on every pair.
class QuadraticLift {
 public:
  QuadraticLift(Bicharacter chi, std::vector<int64_t> exponents);

  const Bicharacter& chi() const { return chi_; }
  const AbelianGroup& group() const { return chi_.group(); }
  int64_t modulus() const { return 2 * chi_.modulus(); }  // values live in mu_{2N}

  int64_t exponent_at_index(size_t i) const { return exps_[i]; }
  int64_t exponent_at(const Element& a) const { return exps_[group().index_of(a)]; }
  Cyclotomic value(const Element& a) const;
  Cyclotomic value_at_index(size_t i) const;
  GroupFunction fn() const;

  bool operator==(const QuadraticLift& o) const {
    return chi_ == o.chi_ && exps_ == o.exps_;
  }

 private:
  Bicharacter chi_;
  std::vector<int64_t> exps_;
};

// The deterministic lift rho(a) = prod_i theta_i^{a_i^2} * prod_{i<j}
// chi(e_i, e_j)^{-a_i a_j} with theta_i^2 = chi(e_i, e_i)^{-1}; theta_i is
// chi(e_i,e_i)^{-(n_i+1)/2} for odd n_i and the smallest-exponent
// zeta_{2 n_i} root otherwise.
QuadraticLift standard_lift(const Bicharacter& chi);

// Exactly |A| lifts: the A-dual orbit of the standard lift, in character
// enumeration order.
std::vector<QuadraticLift> all_lifts(const Bicharacter& chi);

// The iterated coboundary identity rho(a_1)...rho(a_k) =
// rho(a_1+...+a_k) prod_{i<j} chi(a_i, a_j); a test hook, always true.
bool product_formula_check(const QuadraticLift& rho, const std::vector<Element>& tuple);

// Verifies rho(r + b) = rho(r) rho(b) for r in Rad(chi); returns whether the
// restriction of rho to the radical is the trivial character.
bool radical_restriction_trivial(const QuadraticLift& rho);

// True iff some a in A[k] has rho(a)^k != 1 for the standard lift; the
// answer is lift independent.
bool lift_power_on_torsion(const Bicharacter& chi, int64_t k);

}  // namespace tyind
