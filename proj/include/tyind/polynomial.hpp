#pragma once

#include <string>
#include <vector>

#include "tyind/numtheory.hpp"

namespace tyind {

// Dense rational polynomial; c[i] is the coefficient of t^i. The zero
// polynomial is the empty vector.
struct RatPoly {
  std::vector<Rat> c;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim();
  bool is_zero() const { return c.empty(); }
  int64_t degree() const { return static_cast<int64_t>(c.size()) - 1; }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  bool integer_coeffs() const;

  bool operator==(const RatPoly& o) const { return c == o.c; }

  std::string str(const std::string& var = "t") const;
};

RatPoly poly_add(const RatPoly& a, const RatPoly& b);
RatPoly poly_sub(const RatPoly& a, const RatPoly& b);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);

// Euclidean division a = q*b + r with deg r < deg b; b != 0.
void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);

// Exact division; throws InternalError if the remainder is nonzero.
RatPoly poly_div_exact(const RatPoly& a, const RatPoly& b);

}  // namespace tyind
