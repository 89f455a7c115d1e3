#pragma once

#include <string>
#include <vector>

#include "tyind/tycat.hpp"

namespace tyind {

// eps_p = 1 for p = 1 mod 4, i for p = 3 mod 4; eps_p^2 = (-1)^{(p-1)/2}.
struct LegendreContext {
  int64_t p;
  Cyclotomic eps;
};
LegendreContext legendre_context(int64_t p);

// Euler's criterion; a may be any integer, p an odd prime.
int legendre(int64_t a, int64_t p);

// sum_i zeta_p^{a i^2}; asserts equality with (a/p) eps_p sqrt(p).
Cyclotomic gauss_sum(int64_t a, int64_t p);

// D(chi) = (det B / p) for chi = chi_B over F_p^r; requires non-degenerate B.
int d_invariant(const Bicharacter& chi);

// nu_{2k}(m) for TY(F_p^r, chi, tau) with D(chi) = d, straight from the
// Legendre-symbol closed form; shares no code with the tycat routes.
ScaledValue closed_form_fp(int64_t p, int64_t r, int d, int tau_sign, int64_t k);

enum class F2Form { kSym, kAlt };

// nu_{2k}(m) for TY(F_2^r, chi_sym / chi_alt, tau); alt requires even r.
ScaledValue closed_form_f2(int64_t r, F2Form form, int tau_sign, int64_t k);

// Partition of categories over one group by the exact pair (nu_2(m),
// nu_4(m)); asserted to coincide with the (isometry class, tau) partition
// and with the (nu_2(C), nu_4(C)) partition.
std::vector<std::vector<size_t>> classify_by_indicators(const std::vector<TYCategory>& cats,
                                                        int64_t bound = 64);

struct NamedExample {
  std::string name;
  std::string group;
  std::string chi_desc;
  int tau_sign;
  std::string note;
};

// Identifications of classical Hopf algebras with TY data, each verified
// against its known indicator values: B_8, D_8, Q_8 over F_2^2 and
// H_{2p^2} for p = 3, 5. Any mismatch throws InternalError.
std::vector<NamedExample> named_examples();

}  // namespace tyind
