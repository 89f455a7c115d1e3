#include "tyind/polynomial.hpp"

#include <sstream>

namespace tyind {

void RatPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

bool RatPoly::integer_coeffs() const {
  for (const Rat& x : c)
    if (x.get_den() != 1) return false;
  return true;
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int64_t i = degree(); i >= 0; --i) {
    const Rat& a = c[i];
    if (a == 0) continue;
    Rat mag = a < 0 ? Rat(-a) : a;
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1 && i > 0);
    if (!unit) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return RatPoly(std::move(c));
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return RatPoly(std::move(c));
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  }
  return RatPoly(std::move(c));
}

void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  if (b.is_zero()) throw DomainError("poly_divmod: division by zero polynomial");
  r = a;
  q = RatPoly();
  if (a.degree() < b.degree()) return;
  q.c.assign(a.degree() - b.degree() + 1, Rat(0));
  const Rat& lead = b.c.back();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int64_t shift = r.degree() - b.degree();
    Rat f = r.c.back() / lead;
    q.c[shift] = f;
    for (size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= f * b.c[i];
    r.trim();
  }
  q.trim();
}

RatPoly poly_div_exact(const RatPoly& a, const RatPoly& b) {
  RatPoly q, r;
  poly_divmod(a, b, q, r);
  if (!r.is_zero()) throw InternalError("poly_div_exact: nonzero remainder");
  return q;
}

}  // namespace tyind
