#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tyind/quadlift.hpp"

namespace tyind {

struct WorkBounds {
  int64_t tuple_terms = 10'000'000;  // closed-route |A|^{k-1} term budget
  int64_t aut_scan = 64;             // brute-force bound on |A| for Aut scans
};

// TY(A, chi, tau): chi non-degenerate symmetric, tau = tau_sign * |A|^{-1/2}.
class TYCategory {
 public:
  TYCategory(PseudoMetricGroup pmg, int tau_sign);

  const PseudoMetricGroup& pmg() const { return pmg_; }
  const Bicharacter& chi() const { return pmg_.chi(); }
  const AbelianGroup& group() const { return pmg_.group(); }
  int tau_sign() const { return tau_sign_; }
  ScaledValue tau() const;      // tau_sign * |A|^{-1/2}
  int64_t dim() const { return 2 * group().order(); }
  ScaledValue fpdim_m() const;  // sqrt(|A|)

 private:
  PseudoMetricGroup pmg_;
  int tau_sign_;
};

// nu_n(a) = [n a = 0] for invertible simples.
int64_t nu_invertible(const TYCategory& c, const Element& a, int64_t n);

enum class NuRoute { kFourier, kConvolution, kClosed, kCenter };

// nu_{2k}(m) along each route; all routes agree exactly, and the fourier /
// convolution / izumi forms agree for every lift in C(chi).
ScaledValue nu_m_fourier(const TYCategory& c, int64_t k, const QuadraticLift& rho);
ScaledValue nu_m_convolution(const TYCategory& c, int64_t k, const QuadraticLift& rho);
ScaledValue nu_m_closed(const TYCategory& c, int64_t k, const WorkBounds& wb = {});
ScaledValue nu_m_center(const TYCategory& c, int64_t k);
ScaledValue nu_m_izumi(const TYCategory& c, int64_t k, const QuadraticLift& rho);

// nu_n(m): zero for odd n, otherwise dispatches on the route (default
// fourier with the standard lift).
ScaledValue nu_m(const TYCategory& c, int64_t n, NuRoute route = NuRoute::kFourier,
                 const WorkBounds& wb = {});

// Simple objects of the Drinfeld center with pivotal dimension and twist.
struct CenterSimple {
  enum class Kind { X, Y, Z };
  Kind kind;
  std::string label;
  ScaledValue pdim;
  Cyclotomic twist;
  Element a;             // X and Y
  Element b;             // Y only
  Cyclotomic epsilon;    // X: square root of chi(a, a)
  size_t rho_index = 0;  // Z: index into all_lifts order

  // Documentation-level description of the half-braiding.
  std::string braiding_note() const;
};

std::vector<CenterSimple> center_simples(const TYCategory& c);

// A simple object of TY(A, chi, tau): an element of A, or m.
struct SimpleLabel {
  bool is_m = false;
  Element a;

  static SimpleLabel m() { return SimpleLabel{true, {}}; }
  static SimpleLabel invertible(Element e) { return SimpleLabel{false, std::move(e)}; }
};

// Indicator through the center: (1/2|A|) sum theta_X^n pdim(X) dim Hom(V, X),
// multiplicities read off the parametrization.
ScaledValue nu_via_center(const TYCategory& c, const SimpleLabel& v, int64_t n);

// nu_n(C) = sum_V nu_n(V) pdim(V) = |A[n]| + nu_n(m) sqrt(|A|).
ScaledValue nu_category(const TYCategory& c, int64_t n, const WorkBounds& wb = {});

// nu_{2k}(C) = (2^r + sqrt(|A/A[k]|) xi) |A[k]| with 2^r = |A[2k]|/|A[k]|
// and xi in mu_8 or 0; both parts verified exactly.
struct CategoryDecomposition {
  int64_t r = 0;
  Cyclotomic xi;
};
CategoryDecomposition nu_category_decompose(const TYCategory& c, int64_t k,
                                            const WorkBounds& wb = {});

// nu_{2k}(m) = sqrt(|A[k]|) xi: certifies xi in mu_8 or 0, the vanishing
// criterion, and (odd |A|) the sign of xi^2 against the mod-4 test.
struct ArithCertificate {
  Cyclotomic xi;
  bool vanishes = false;
  std::optional<int> xi_square_sign;  // only when |A| is odd
};
ArithCertificate arithmetic_certificate(const TYCategory& c, int64_t k,
                                        const WorkBounds& wb = {});

// Xi_k(B, beta): the normalized tuple sum, an isometry invariant. For
// non-degenerate beta the value is certified to lie in mu_infty or be 0.
ScaledValue xi_invariant(const PseudoMetricGroup& p, int64_t k, const WorkBounds& wb = {});

// Is nu_n(C)/n an algebraic integer for each divisor n of dim(C)?
struct FrobeniusReport {
  std::vector<std::pair<int64_t, bool>> by_divisor;  // (n, passes)
  bool all_pass = true;
};
FrobeniusReport frobenius_check(const TYCategory& c, const WorkBounds& wb = {});

// Trace(S) = |A[2]| + sgn(tau) sqrt(|A|), equal to nu_2(C).
ScaledValue trace_antipode(const TYCategory& c);

// A fiber-functor datum: an involution sigma with chi(a, sigma(a)) = 1 and a
// sign-valued rho in C(chi_bar on V(sigma)) matching sgn(tau).
struct FiberWitness {
  Homomorphism sigma;
  AbelianGroup v_group;              // abstract presentation of V(sigma)
  std::vector<Element> v_reps;       // representative in A per abstract index
  std::vector<int> rho_signs;        // value of rho per abstract index
};

// Requires |A| to be a perfect square (else DomainError: no fiber functor
// exists since FPdim(m) is irrational).
std::vector<FiberWitness> fiber_functor_search(const TYCategory& c,
                                               const WorkBounds& wb = {});

}  // namespace tyind
