#include "tyind/finfield.hpp"

#include <algorithm>

namespace tyind {

LegendreContext legendre_context(int64_t p) {
  if (!is_prime(p) || p == 2) throw DomainError("legendre_context: p must be an odd prime");
  Cyclotomic eps = p % 4 == 1 ? Cyclotomic(Rat(1)) : Cyclotomic::root_of_unity(4, 1);
  return {p, std::move(eps)};
}

int legendre(int64_t a, int64_t p) {
  if (!is_prime(p) || p == 2) throw DomainError("legendre: p must be an odd prime");
  a = mod_norm(a, p);
  if (a == 0) return 0;
  int64_t e = mod_pow(a, (p - 1) / 2, p);
  return e == 1 ? +1 : -1;
}

Cyclotomic gauss_sum(int64_t a, int64_t p) {
  if (!is_prime(p) || p == 2) throw DomainError("gauss_sum: p must be an odd prime");
  if (gcd64(mod_norm(a, p), p) != 1) throw DomainError("gauss_sum: a must be coprime to p");
  std::vector<int64_t> counts(p, 0);
  for (int64_t i = 0; i < p; ++i) counts[mod_norm(a * i * i, p)]++;
  Cyclotomic g{Rat(0)};
  for (int64_t e = 0; e < p; ++e)
    if (counts[e]) g += Cyclotomic::root_of_unity(p, e) * Rat(counts[e]);
  LegendreContext ctx = legendre_context(p);
  if (!(g == ctx.eps * embed_sqrt(p) * Rat(legendre(a, p))))
    throw InternalError("gauss_sum: closed-form identity failed");
  return g;
}

int d_invariant(const Bicharacter& chi) {
  const AbelianGroup& g = chi.group();
  int64_t p = g.factors().empty() ? 0 : g.factors()[0];
  if (!is_prime(p) || p == 2) throw DomainError("d_invariant: group must be F_p^r, p odd");
  for (int64_t f : g.factors())
    if (f != p) throw DomainError("d_invariant: group must be F_p^r");
  // det of the matrix mod p by Gaussian elimination.
  auto m = chi.matrix();
  size_t r = m.size();
  int64_t det = 1;
  for (size_t col = 0; col < r; ++col) {
    size_t piv = col;
    while (piv < r && m[piv][col] % p == 0) ++piv;
    if (piv == r) throw DomainError("d_invariant: degenerate form (det = 0 mod p)");
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = mod_norm(-det, p);
    }
    det = det * m[col][col] % p;
    int64_t inv = mod_inv(m[col][col], p);
    for (size_t i = col + 1; i < r; ++i) {
      int64_t f = m[i][col] % p * inv % p;
      for (size_t j = col; j < r; ++j) m[i][j] = mod_norm(m[i][j] - f * m[col][j], p);
    }
  }
  return legendre(det, p);
}

ScaledValue closed_form_fp(int64_t p, int64_t r, int d, int tau_sign, int64_t k) {
  if (r < 1 || k < 1) throw DomainError("closed_form_fp: r and k must be positive");
  if (d != 1 && d != -1) throw DomainError("closed_form_fp: D must be +1 or -1");
  if (tau_sign != 1 && tau_sign != -1)
    throw DomainError("closed_form_fp: tau sign must be +1 or -1");
  LegendreContext ctx = legendre_context(p);
  auto ipow = [](int base, int64_t e) { return e % 2 ? base : 1; };  // (+-1)^e
  Rat sgn_k(ipow(tau_sign, k));
  if (k % p != 0) {
    Rat scalar = sgn_k * Rat(ipow(legendre(-k, p), r)) *
                 Rat(ipow(legendre(-2, p), r * (k + 1))) * Rat(ipow(d, k + 1));
    return ScaledValue{ctx.eps.pow(r * (k + 1)) * scalar};
  }
  Rat scalar = sgn_k * Rat(ipow(legendre(-2, p), r * k)) * Rat(ipow(d, k));
  Cyclotomic val = ctx.eps.pow(r * k) * scalar * rat_pow(Rat(p), r / 2);
  if (r % 2) val *= embed_sqrt(p);
  return ScaledValue{std::move(val)};
}

ScaledValue closed_form_f2(int64_t r, F2Form form, int tau_sign, int64_t k) {
  if (r < 1 || k < 1) throw DomainError("closed_form_f2: r and k must be positive");
  if (tau_sign != 1 && tau_sign != -1)
    throw DomainError("closed_form_f2: tau sign must be +1 or -1");
  Rat sgn_k(k % 2 ? tau_sign : 1);
  if (form == F2Form::kAlt) {
    if (r % 2) throw DomainError("closed_form_f2: alt requires even r");
    if (k % 2) return ScaledValue{Cyclotomic(sgn_k)};
    return ScaledValue{Cyclotomic(rat_pow(Rat(2), r / 2))};
  }
  // sym: sgn(tau)^k zeta_8^{rk} ((1 + i^{-k})/sqrt(2))^r, with the second
  // factor evaluated exactly by k mod 4.
  Cyclotomic second{Rat(0)};
  switch (mod_norm(k, 4)) {
    case 0:
      second = embed_sqrt(2);
      break;
    case 1:
      second = Cyclotomic::root_of_unity(8, 7);  // (1 - i)/sqrt(2)
      break;
    case 2:
      second = Cyclotomic(Rat(0));
      break;
    case 3:
      second = Cyclotomic::root_of_unity(8, 1);  // (1 + i)/sqrt(2)
      break;
  }
  Cyclotomic val = Cyclotomic::root_of_unity(8, mod_norm(r * k, 8)) * second.pow(r) * sgn_k;
  return ScaledValue{std::move(val)};
}

namespace {

template <typename Same>
std::vector<std::vector<size_t>> partition_by(size_t n, const Same& same) {
  std::vector<std::vector<size_t>> classes;
  for (size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (auto& cls : classes)
      if (same(cls.front(), i)) {
        cls.push_back(i);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

}  // namespace

std::vector<std::vector<size_t>> classify_by_indicators(const std::vector<TYCategory>& cats,
                                                        int64_t bound) {
  if (cats.empty()) return {};
  for (const TYCategory& c : cats)
    if (!(c.group() == cats.front().group()))
      throw DomainError("classify_by_indicators: categories must share the group");

  std::vector<std::pair<ScaledValue, ScaledValue>> nu_m_pairs, nu_c_pairs;
  for (const TYCategory& c : cats) {
    nu_m_pairs.emplace_back(nu_m(c, 2), nu_m(c, 4));
    nu_c_pairs.emplace_back(nu_category(c, 2), nu_category(c, 4));
  }
  auto by_numbers = partition_by(cats.size(), [&](size_t i, size_t j) {
    return nu_m_pairs[i].first.equals(nu_m_pairs[j].first) &&
           nu_m_pairs[i].second.equals(nu_m_pairs[j].second);
  });
  auto by_sums = partition_by(cats.size(), [&](size_t i, size_t j) {
    return nu_c_pairs[i].first.equals(nu_c_pairs[j].first) &&
           nu_c_pairs[i].second.equals(nu_c_pairs[j].second);
  });
  auto by_equivalence = partition_by(cats.size(), [&](size_t i, size_t j) {
    return cats[i].tau_sign() == cats[j].tau_sign() &&
           is_isometric(cats[i].pmg(), cats[j].pmg(), bound).has_value();
  });
  if (by_numbers != by_equivalence || by_numbers != by_sums)
    throw InternalError(
        "classify_by_indicators: (nu_2, nu_4) partition disagrees with monoidal "
        "equivalence classes");
  return by_numbers;
}

namespace {

// nu_n(C G) = |G[n]| for group algebras; the counts below are the order
// profiles of D_8 (orders 1,2,2,2,2,2,4,4) and Q_8 (orders 1,2,4,...,4).
int64_t group_torsion_count(const std::vector<int>& orders, int64_t n) {
  int64_t cnt = 0;
  for (int o : orders)
    if (n % o == 0) cnt++;
  return cnt;
}

void check_named(const TYCategory& c, const std::vector<int64_t>& expect,
                 const std::string& name) {
  for (size_t i = 0; i < expect.size(); ++i) {
    int64_t n = static_cast<int64_t>(i) + 1;
    if (!nu_category(c, n).equals(ScaledValue(Cyclotomic(expect[i]))))
      throw InternalError("named_examples: nu_" + std::to_string(n) + "(" + name +
                          ") mismatch");
  }
}

}  // namespace

std::vector<NamedExample> named_examples() {
  std::vector<NamedExample> out;

  // B_8: the unique non-trivial semisimple Hopf algebra of dimension 8.
  TYCategory b8(PseudoMetricGroup(Bicharacter::sym(2)), +1);
  check_named(b8, {1, 6, 1, 4, 1, 6, 1, 8}, "B8");
  out.push_back({"B8", "Z2xZ2", "sym", +1, "nu vector (1,6,1,4,1,6,1,8) over n=1..8"});

  // Group algebras C D_8 and C Q_8: nu_n = |G[n]|.
  std::vector<int> d8_orders{1, 2, 2, 2, 2, 2, 4, 4};
  std::vector<int> q8_orders{1, 2, 4, 4, 4, 4, 4, 4};
  TYCategory d8(PseudoMetricGroup(Bicharacter::alt(2)), +1);
  TYCategory q8(PseudoMetricGroup(Bicharacter::alt(2)), -1);
  std::vector<int64_t> d8_expect, q8_expect;
  for (int64_t n = 1; n <= 8; ++n) {
    d8_expect.push_back(group_torsion_count(d8_orders, n));
    q8_expect.push_back(group_torsion_count(q8_orders, n));
  }
  check_named(d8, d8_expect, "CD8");
  check_named(q8, q8_expect, "CQ8");
  out.push_back({"D8", "Z2xZ2", "alt", +1, "nu_n = |D8[n]| for n=1..8"});
  out.push_back({"Q8", "Z2xZ2", "alt", -1, "nu_n = |Q8[n]| for n=1..8"});

  // H_{2p^2}: tau = +1/p and D(chi) = eps_p^2 read as a sign; the full
  // indicator vector matches gcd(n,p)^2 (+ p gcd(n,p) for even n).
  for (int64_t p : {3, 5}) {
    int d_wanted = p % 4 == 1 ? +1 : -1;  // eps_p^2
    std::vector<int64_t> entries{1, 1};
    if (d_wanted < 0) entries[1] = 2;  // guarantees (det/p) = -1 via a non-residue
    while (legendre(entries[0] * entries[1], p) != d_wanted) entries[1]++;
    TYCategory h(PseudoMetricGroup(Bicharacter::diag(p, entries)), +1);
    std::vector<int64_t> expect;
    for (int64_t n = 1; n <= 2 * p * p; ++n) {
      int64_t g = gcd64(n, p);
      expect.push_back(g * g + (n % 2 == 0 ? p * g : 0));
    }
    check_named(h, expect, "H" + std::to_string(2 * p * p));
    out.push_back({"H" + std::to_string(2 * p * p),
                   "Z" + std::to_string(p) + "xZ" + std::to_string(p),
                   "diag(" + std::to_string(entries[0]) + "," + std::to_string(entries[1]) +
                       ")",
                   +1, "nu_n = gcd(n,p)^2 + [n even] p gcd(n,p), n = 1.." +
                       std::to_string(2 * p * p)});
  }
  return out;
}

}  // namespace tyind
