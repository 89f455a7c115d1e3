#include "tyind/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace tyind {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

int64_t mod_norm(int64_t a, int64_t m) {
  if (m <= 0) throw DomainError("mod_norm: modulus must be positive");
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t mod_pow(int64_t base, int64_t exp, int64_t m) {
  if (exp < 0) throw DomainError("mod_pow: negative exponent");
  Int b = mod_norm(base, m), r = 1, mm = m;
  while (exp > 0) {
    if (exp & 1) r = (r * b) % mm;
    b = (b * b) % mm;
    exp >>= 1;
  }
  return r.get_si();
}

int64_t mod_inv(int64_t a, int64_t m) {
  a = mod_norm(a, m);
  int64_t g = m, x = 0, x1 = 1, a1 = a;
  while (a1 != 0) {
    int64_t q = g / a1;
    std::swap(g -= q * a1, a1);
    std::swap(x -= q * x1, x1);
  }
  if (g != 1) throw DomainError("mod_inv: argument not coprime to modulus");
  return mod_norm(x, m);
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  if (n <= 0) throw DomainError("factorize: argument must be positive");
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    size_t sz = out.size();
    int64_t pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t euler_phi(int64_t n) {
  int64_t phi = 1;
  for (auto [p, e] : factorize(n)) {
    int64_t pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

std::pair<int64_t, int64_t> squarefree_decompose(int64_t n) {
  int64_t s = 1, m0 = 1;
  for (auto [p, e] : factorize(n)) {
    for (int i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2) m0 *= p;
  }
  return {s, m0};
}

bool is_square(int64_t n, int64_t* root) {
  if (n < 0) return false;
  auto [s, m0] = n == 0 ? std::pair<int64_t, int64_t>{0, 1} : squarefree_decompose(n);
  if (m0 != 1) return false;
  if (root) *root = s;
  return true;
}

Rat rat_pow(const Rat& x, int64_t e) {
  if (e == 0) return Rat(1);
  bool neg = e < 0;
  if (neg && x == 0) throw DomainError("rat_pow: zero to negative power");
  Rat b = neg ? Rat(1) / x : x, r(1);
  for (int64_t k = neg ? -e : e; k > 0; k >>= 1) {
    if (k & 1) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace tyind
