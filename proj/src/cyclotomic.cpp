#include "tyind/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace tyind {

namespace {

// Per-conductor data: Phi_L and the expansions of zeta^j (phi(L) <= j < 2L)
// in the power basis, so products, embeddings and Galois images reduce by
// table lookup instead of repeated polynomial division.
struct FieldData {
  int64_t L = 1;
  int64_t phi = 1;
  RatPoly cyclo;
  std::vector<std::vector<Rat>> high_pow;  // high_pow[j - phi] = zeta^j
};

RatPoly cyclotomic_polynomial(int64_t L, std::map<int64_t, RatPoly>& cache) {
  auto it = cache.find(L);
  if (it != cache.end()) return it->second;
  RatPoly result;
  if (L == 1) {
    result = RatPoly({Rat(-1), Rat(1)});
  } else {
    std::vector<Rat> xl(L + 1, Rat(0));
    xl[0] = -1;
    xl[L] = 1;
    result = RatPoly(std::move(xl));
    for (int64_t d : divisors(L)) {
      if (d == L) continue;
      result = poly_div_exact(result, cyclotomic_polynomial(d, cache));
    }
  }
  cache[L] = result;
  return result;
}

const FieldData& field(int64_t L) {
  static std::mutex mu;
  static std::map<int64_t, std::unique_ptr<FieldData>> cache;
  static std::map<int64_t, RatPoly> poly_cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(L);
  if (it != cache.end()) return *it->second;

  auto fd = std::make_unique<FieldData>();
  fd->L = L;
  fd->phi = euler_phi(L);
  fd->cyclo = cyclotomic_polynomial(L, poly_cache);

  const int64_t phi = fd->phi;
  const int64_t maxpow = 2 * L;  // covers products, embeddings, Galois images
  fd->high_pow.reserve(maxpow - phi);
  // zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1}), Phi_L monic.
  std::vector<Rat> row(phi, Rat(0));
  for (int64_t i = 0; i < phi; ++i) row[i] = -fd->cyclo.c[i];
  fd->high_pow.push_back(row);
  for (int64_t j = phi + 1; j < maxpow; ++j) {
    const std::vector<Rat>& prev = fd->high_pow.back();
    std::vector<Rat> next(phi, Rat(0));
    const Rat& overflow = prev[phi - 1];
    for (int64_t i = 0; i + 1 < phi; ++i) next[i + 1] = prev[i];
    if (overflow != 0) {
      const std::vector<Rat>& fold = fd->high_pow.front();
      for (int64_t i = 0; i < phi; ++i) next[i] += overflow * fold[i];
    }
    fd->high_pow.push_back(std::move(next));
  }
  const FieldData& ref = *fd;
  cache.emplace(L, std::move(fd));
  return ref;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rat& r) : conductor_(1), coeffs_{r} {
  coeffs_[0].canonicalize();
}

Cyclotomic Cyclotomic::from_raw(int64_t conductor, const std::vector<Rat>& raw) {
  const FieldData& fd = field(conductor);
  std::vector<Rat> out(fd.phi, Rat(0));
  for (size_t j = 0; j < raw.size(); ++j) {
    if (raw[j] == 0) continue;
    if (static_cast<int64_t>(j) < fd.phi) {
      out[j] += raw[j];
    } else {
      const std::vector<Rat>& row = fd.high_pow.at(j - fd.phi);
      for (int64_t i = 0; i < fd.phi; ++i) out[i] += raw[j] * row[i];
    }
  }
  for (Rat& c : out) c.canonicalize();
  return Cyclotomic(conductor, std::move(out));
}

Cyclotomic Cyclotomic::root_of_unity(int64_t order, int64_t exp) {
  if (order < 1) throw DomainError("root_of_unity: order must be positive");
  exp = mod_norm(exp, order);
  std::vector<Rat> raw(exp + 1, Rat(0));
  raw[exp] = 1;
  return from_raw(order, raw);
}

bool Cyclotomic::is_zero() const {
  for (const Rat& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_value() const {
  if (!is_rational()) throw DomainError("rational_value: element is irrational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rat> out(coeffs_);
  for (Rat& c : out) c = -c;
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_) {
    int64_t m = lcm64(conductor_, o.conductor_);
    return embedded(m) + o.embedded(m);
  }
  std::vector<Rat> out(coeffs_);
  for (size_t i = 0; i < out.size(); ++i) out[i] += o.coeffs_[i];
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_) {
    int64_t m = lcm64(conductor_, o.conductor_);
    return embedded(m) * o.embedded(m);
  }
  const size_t n = coeffs_.size();
  std::vector<Rat> raw(2 * n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (o.coeffs_[j] == 0) continue;
      raw[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return from_raw(conductor_, raw);
}

Cyclotomic Cyclotomic::operator*(const Rat& r) const {
  std::vector<Rat> out(coeffs_);
  for (Rat& c : out) {
    c *= r;
    c.canonicalize();
  }
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw DomainError("inv: division by zero");
  // Extended Euclid in Q[t] modulo Phi_L; the gcd is a nonzero constant.
  RatPoly r0{std::vector<Rat>(coeffs_)};
  RatPoly r1 = field(conductor_).cyclo;
  RatPoly s0({Rat(1)}), s1;
  while (!r1.is_zero()) {
    RatPoly q, rem;
    poly_divmod(r0, r1, q, rem);
    RatPoly snew = poly_sub(s0, poly_mul(q, s1));
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = snew;
  }
  if (r0.degree() != 0) throw InternalError("inv: gcd with Phi_L not constant");
  Rat scale = Rat(1) / r0.c[0];
  std::vector<Rat> raw(s0.c);
  for (Rat& c : raw) c *= scale;
  return from_raw(conductor_, raw);
}

Cyclotomic Cyclotomic::pow(int64_t e) const {
  if (e < 0) return inv().pow(-e);
  Cyclotomic result(Rat(1));
  Cyclotomic b = *this;
  for (int64_t k = e; k > 0; k >>= 1) {
    if (k & 1) result *= b;
    if (k > 1) b *= b;
  }
  return result;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  int64_t m = lcm64(conductor_, o.conductor_);
  return embedded(m).coeffs_ == o.embedded(m).coeffs_;
}

Cyclotomic Cyclotomic::embedded(int64_t target) const {
  if (target == conductor_) return *this;
  if (target % conductor_ != 0)
    throw DomainError("embedded: target conductor not a multiple of current");
  int64_t k = target / conductor_;
  std::vector<Rat> raw(k * (coeffs_.size() - 1) + 1, Rat(0));
  for (size_t j = 0; j < coeffs_.size(); ++j) raw[j * k] = coeffs_[j];
  return from_raw(target, raw);
}

namespace {

// True iff x is fixed by every automorphism zeta -> zeta^s with s = 1 mod M,
// i.e. x lies in Q(zeta_M).
bool in_subfield(const Cyclotomic& x, int64_t M) {
  int64_t L = x.conductor();
  for (int64_t s = 1 + M; s < L; s += M) {
    if (gcd64(s, L) != 1) continue;
    if (galois_apply(x, s) != x) return false;
  }
  return true;
}

// Solves for the coordinates of x in the embedded basis of Q(zeta_M);
// membership must already be known.
Cyclotomic rewrite_in(const Cyclotomic& x, int64_t M) {
  int64_t L = x.conductor();
  int64_t rows = euler_phi(L), cols = euler_phi(M);
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1, Rat(0)));
  for (int64_t k = 0; k < cols; ++k) {
    Cyclotomic basis = Cyclotomic::root_of_unity(M, k).embedded(L);
    for (int64_t i = 0; i < rows; ++i) a[i][k] = basis.coeffs()[i];
  }
  for (int64_t i = 0; i < rows; ++i) a[i][cols] = x.coeffs()[i];

  int64_t rank = 0;
  std::vector<int64_t> pivot_col;
  for (int64_t col = 0; col < cols && rank < rows; ++col) {
    int64_t piv = -1;
    for (int64_t i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    Rat inv = Rat(1) / a[rank][col];
    for (int64_t j = col; j <= cols; ++j) a[rank][j] *= inv;
    for (int64_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int64_t j = col; j <= cols; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int64_t i = rank; i < rows; ++i)
    if (a[i][cols] != 0) throw InternalError("rewrite_in: inconsistent subfield system");
  std::vector<Rat> coords(cols, Rat(0));
  for (int64_t i = 0; i < rank; ++i) coords[pivot_col[i]] = a[i][cols];
  for (Rat& c : coords) c.canonicalize();
  Cyclotomic out(coords[0]);
  for (int64_t k = 1; k < cols; ++k) {
    if (coords[k] == 0) continue;
    out += Cyclotomic::root_of_unity(M, k) * coords[k];
  }
  return out;
}

}  // namespace

Cyclotomic Cyclotomic::reduced() const {
  Cyclotomic cur = *this;
  bool changed = true;
  while (changed && cur.conductor_ > 1) {
    changed = false;
    for (auto [p, e] : factorize(cur.conductor_)) {
      int64_t M = cur.conductor_ / p;
      if (in_subfield(cur, M)) {
        cur = rewrite_in(cur, M);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ <= 2) return *this;
  return galois_apply(*this, conductor_ - 1);
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    const Rat& c = coeffs_[j];
    if (c == 0) continue;
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (j == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << conductor_;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                   static_cast<double>(conductor_);
    acc += coeffs_[j].get_d() * std::polar(1.0, angle);
  }
  return acc;
}

Cyclotomic galois_apply(const Cyclotomic& x, int64_t s) {
  int64_t L = x.conductor();
  s = mod_norm(s, L);
  if (gcd64(s, L) != 1) throw DomainError("galois_apply: s not coprime to conductor");
  if (L == 1 || s == 1) return x;
  std::vector<Rat> raw(L, Rat(0));
  const std::vector<Rat>& c = x.coeffs();
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    raw[(static_cast<int64_t>(j) * s) % L] += c[j];
  }
  return Cyclotomic::from_raw(L, raw);
}

const Cyclotomic& embed_sqrt(int64_t m) {
  if (m < 1) throw DomainError("embed_sqrt: argument must be positive");
  static std::mutex mu;
  static std::map<int64_t, std::unique_ptr<Cyclotomic>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return *it->second;

  auto [s, m0] = squarefree_decompose(m);
  Cyclotomic result{Rat(s)};
  for (auto [p, e] : factorize(m0)) {
    (void)e;
    if (p == 2) {
      result *= Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
    } else {
      // Quadratic Gauss sum: sum_i zeta_p^{i^2} = eps_p * sqrt(p).
      std::vector<int64_t> counts(p, 0);
      for (int64_t i = 0; i < p; ++i) counts[(i * i) % p]++;
      Cyclotomic g(Rat(0));
      for (int64_t j = 0; j < p; ++j)
        if (counts[j]) g += Cyclotomic::root_of_unity(p, j) * Rat(counts[j]);
      if (p % 4 == 3) g *= -Cyclotomic::root_of_unity(4, 1);  // divide by eps_p = i
      result *= g;
    }
  }
  // The construction is positive already; the float check only selects sign.
  if (result.to_complex().real() < 0) result = -result;
  if (result * result != Cyclotomic(Rat(m)))
    throw InternalError("embed_sqrt: square check failed");
  auto owned = std::make_unique<Cyclotomic>(std::move(result));
  const Cyclotomic& ref = *owned;
  cache.emplace(m, std::move(owned));
  return ref;
}

std::optional<int64_t> root_of_unity_order(const Cyclotomic& x) {
  if (x.is_zero()) return std::nullopt;
  Cyclotomic y = x.conductor() > 24 ? x.reduced() : x;
  if (y.is_rational()) {
    Rat v = y.rational_value();
    if (v == 1) return 1;
    if (v == -1) return 2;
    return std::nullopt;
  }
  if (y * y.conj() != Cyclotomic(Rat(1))) return std::nullopt;
  // |sigma(y)| = 1 for every embedding, so y is a root of unity (Kronecker)
  // and its order divides lcm(2, L).
  const Cyclotomic one{Rat(1)};
  for (int64_t d : divisors(lcm64(2, y.conductor()))) {
    if (y.pow(d) == one) return d;
  }
  throw InternalError("root_of_unity_order: modulus one but no order found");
}

std::pair<int64_t, int64_t> as_root_of_unity(const Cyclotomic& x) {
  auto n = root_of_unity_order(x);
  if (!n) throw DomainError("as_root_of_unity: not a root of unity");
  Cyclotomic acc{Rat(1)};
  const Cyclotomic z = Cyclotomic::root_of_unity(*n, 1);
  for (int64_t j = 0; j < *n; ++j) {
    if (acc == x) return {*n, j};
    acc *= z;
  }
  throw InternalError("as_root_of_unity: power scan failed");
}

RatPoly minimal_polynomial(const Cyclotomic& x) {
  Cyclotomic y = x.reduced();
  int64_t L = y.conductor();
  std::vector<Cyclotomic> orbit;
  for (int64_t s = 1; s <= L; ++s) {
    if (gcd64(s, L) != 1) continue;
    Cyclotomic img = galois_apply(y, s);
    bool seen = false;
    for (const Cyclotomic& o : orbit)
      if (o == img) {
        seen = true;
        break;
      }
    if (!seen) orbit.push_back(std::move(img));
  }
  // Multiply out prod (t - y_i) with cyclotomic coefficients.
  std::vector<Cyclotomic> poly{Cyclotomic(Rat(1))};
  for (const Cyclotomic& root : orbit) {
    std::vector<Cyclotomic> next(poly.size() + 1, Cyclotomic(Rat(0)));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * root;
    }
    poly = std::move(next);
  }
  std::vector<Rat> coeffs(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) {
    Cyclotomic c = poly[i].is_rational() ? poly[i] : poly[i].reduced();
    if (!c.is_rational())
      throw InternalError("minimal_polynomial: non-rational coefficient");
    coeffs[i] = c.rational_value();
  }
  return RatPoly(std::move(coeffs));
}

bool is_algebraic_integer(const Cyclotomic& x) {
  return minimal_polynomial(x).integer_coeffs();
}

std::complex<double> to_complex(const Cyclotomic& x) { return x.to_complex(); }

ScaledValue::ScaledValue(Cyclotomic num, int64_t base, int64_t half_power)
    : num_(std::move(num)), base_(base), half_power_(half_power) {
  if (base_ < 1) throw DomainError("ScaledValue: base must be positive");
  if (base_ == 1) half_power_ = 0;
}

Cyclotomic ScaledValue::as_cyclotomic() const {
  if (base_ == 1 || half_power_ == 0) return num_;
  int64_t r = mod_norm(half_power_, 2);
  int64_t q = (half_power_ - r) / 2;
  Cyclotomic out = num_ * rat_pow(Rat(base_), -q);
  if (r) out = out * embed_sqrt(base_) * (Rat(1) / Rat(base_));  // base^{-1/2} = sqrt/base
  return out;
}

bool ScaledValue::equals(const ScaledValue& o) const {
  if (base_ == o.base_ && half_power_ == o.half_power_) return num_ == o.num_;
  ScaledValue a = normalized(), b = o.normalized();
  if (a.base_ == b.base_ && a.half_power_ == b.half_power_) return a.num_ == b.num_;
  return a.as_cyclotomic() == b.as_cyclotomic();
}

ScaledValue ScaledValue::operator+(const ScaledValue& o) const {
  if (base_ == o.base_ && half_power_ == o.half_power_)
    return {num_ + o.num_, base_, half_power_};
  return ScaledValue(as_cyclotomic() + o.as_cyclotomic());
}

ScaledValue ScaledValue::operator*(const ScaledValue& o) const {
  if (base_ == o.base_) return {num_ * o.num_, base_, half_power_ + o.half_power_};
  if (base_ == 1) return {num_ * o.num_, o.base_, o.half_power_};
  if (o.base_ == 1) return {num_ * o.num_, base_, half_power_};
  return ScaledValue(as_cyclotomic() * o.as_cyclotomic());
}

ScaledValue ScaledValue::pow(int64_t e) const {
  if (e < 0) throw DomainError("ScaledValue::pow: negative exponent");
  return {num_.pow(e), base_, half_power_ * e};
}

ScaledValue ScaledValue::normalized() const {
  if (num_.is_zero()) return {Cyclotomic(Rat(0)), 1, 0};
  if (base_ == 1 || half_power_ == 0) return {num_, 1, 0};
  auto [s, b0] = squarefree_decompose(base_);
  int64_t r = mod_norm(half_power_, 2);
  int64_t q = (half_power_ - r) / 2;
  Cyclotomic n = num_ * rat_pow(Rat(s), -half_power_) * rat_pow(Rat(b0), -q);
  if (r == 0 || b0 == 1) return {std::move(n), 1, 0};
  return {std::move(n), b0, 1};
}

std::complex<double> ScaledValue::to_complex() const {
  return num_.to_complex() *
         std::pow(static_cast<double>(base_), -0.5 * static_cast<double>(half_power_));
}

std::string ScaledValue::str() const {
  ScaledValue v = normalized();
  std::string s = v.num_.reduced().str();
  if (v.base_ != 1) s += "|sqrt(" + std::to_string(v.base_) + ")^-1";
  return s;
}

}  // namespace tyind
