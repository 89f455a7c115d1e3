#include "tyind/tycat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tyind {

TYCategory::TYCategory(PseudoMetricGroup pmg, int tau_sign)
    : pmg_(std::move(pmg)), tau_sign_(tau_sign) {
  if (tau_sign_ != 1 && tau_sign_ != -1)
    throw DomainError("TYCategory: tau sign must be +1 or -1");
  if (!pmg_.chi().is_nondegenerate())
    throw DomainError("TYCategory: chi must be non-degenerate");
}

ScaledValue TYCategory::tau() const {
  return {Cyclotomic(tau_sign_), group().order(), 1};
}

ScaledValue TYCategory::fpdim_m() const {
  return {Cyclotomic(Rat(1)), group().order(), -1};
}

int64_t nu_invertible(const TYCategory& c, const Element& a, int64_t n) {
  if (n < 1) throw DomainError("nu_invertible: n must be positive");
  return c.group().mul(a, n) == c.group().identity() ? 1 : 0;
}

namespace {

Rat sign_pow(int sign, int64_t k) { return Rat(k % 2 && sign < 0 ? -1 : 1); }

Cyclotomic sum_of_powers(int64_t order, const std::vector<int64_t>& counts) {
  Cyclotomic acc{Rat(0)};
  for (int64_t e = 0; e < order; ++e)
    if (counts[e]) acc += Cyclotomic::root_of_unity(order, e) * Rat(counts[e]);
  return acc;
}

// sum over (a_1..a_k) in A^k with a_1+...+a_k = 0 of prod_{i<j} chi(a_i,a_j).
// Bilinearity collapses the new pair terms at depth d to one evaluation
// against the running partial sum.
Cyclotomic chi_tuple_sum(const Bicharacter& chi, int64_t k, int64_t term_bound) {
  const AbelianGroup& g = chi.group();
  int64_t ord = g.order(), n = chi.modulus();
  double terms = std::pow(static_cast<double>(ord), static_cast<double>(k - 1));
  if (terms > static_cast<double>(term_bound))
    throw BoundError("tuple sum: |A|^(k-1) = " + std::to_string(terms) +
                     " exceeds the term bound " + std::to_string(term_bound) +
                     " (raise with --bound-terms)");
  auto elems = g.all_elements();
  std::vector<std::vector<int64_t>> pair_exp(ord, std::vector<int64_t>(ord));
  std::vector<std::vector<size_t>> add_tab(ord, std::vector<size_t>(ord));
  std::vector<size_t> neg_tab(ord);
  for (int64_t i = 0; i < ord; ++i) {
    neg_tab[i] = g.index_of(g.neg(elems[i]));
    for (int64_t j = 0; j < ord; ++j) {
      pair_exp[i][j] = chi.eval_exponent(elems[i], elems[j]);
      add_tab[i][j] = g.index_of(g.add(elems[i], elems[j]));
    }
  }
  std::vector<int64_t> counts(n, 0);
  size_t id = g.index_of(g.identity());
  // depth d holds the partial sum index and accumulated exponent after
  // choosing a_1..a_d.
  std::function<void(int64_t, size_t, int64_t)> rec = [&](int64_t depth, size_t sum_idx,
                                                          int64_t exp) {
    if (depth == k - 1) {
      size_t last = neg_tab[sum_idx];
      counts[(exp + pair_exp[sum_idx][last]) % n]++;
      return;
    }
    for (int64_t i = 0; i < ord; ++i)
      rec(depth + 1, add_tab[sum_idx][i], (exp + pair_exp[sum_idx][i]) % n);
  };
  if (k == 1) {
    counts[0] = 1;  // only the tuple (0), empty product
  } else {
    rec(0, id, 0);
  }
  return sum_of_powers(n, counts);
}

}  // namespace

ScaledValue nu_m_fourier(const TYCategory& c, int64_t k, const QuadraticLift& rho) {
  const AbelianGroup& g = c.group();
  const Bicharacter& chi = c.chi();
  int64_t m = rho.modulus();
  auto elems = g.all_elements();
  Cyclotomic acc{Rat(0)};
  std::vector<int64_t> counts(m);
  for (int64_t ai = 0; ai < g.order(); ++ai) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int64_t xi = 0; xi < g.order(); ++xi)
      counts[mod_norm(rho.exponent_at_index(xi) -
                          2 * chi.eval_exponent(elems[xi], elems[ai]),
                      m)]++;
    acc += sum_of_powers(m, counts).pow(k);
  }
  return {acc * sign_pow(c.tau_sign(), k), g.order(), k + 1};
}

ScaledValue nu_m_convolution(const TYCategory& c, int64_t k, const QuadraticLift& rho) {
  const AbelianGroup& g = c.group();
  GroupFunction f = rho.fn();
  GroupFunction acc = f;
  for (int64_t i = 1; i < k; ++i) acc = convolve(acc, f);
  return {acc.at(g.identity()) * sign_pow(c.tau_sign(), k), g.order(), k - 1};
}

ScaledValue nu_m_closed(const TYCategory& c, int64_t k, const WorkBounds& wb) {
  Cyclotomic s = chi_tuple_sum(c.chi(), k, wb.tuple_terms);
  return {s * sign_pow(c.tau_sign(), k), c.group().order(), k - 1};
}

ScaledValue nu_m_izumi(const TYCategory& c, int64_t k, const QuadraticLift& rho) {
  const AbelianGroup& g = c.group();
  GroupFunction raw = transform_raw(c.chi(), rho.fn());
  int64_t m = rho.modulus();
  std::vector<int64_t> counts(m, 0);
  for (int64_t i = 0; i < g.order(); ++i)
    counts[mod_norm(-k * rho.exponent_at_index(i), m)]++;
  Cyclotomic val = raw.at(g.identity()).pow(k) * sum_of_powers(m, counts);
  return {val * sign_pow(c.tau_sign(), k), g.order(), k + 1};
}

ScaledValue nu_m_center(const TYCategory& c, int64_t k) {
  Cyclotomic acc{Rat(0)};
  for (const CenterSimple& s : center_simples(c))
    if (s.kind == CenterSimple::Kind::Z) acc += s.twist.pow(2 * k);
  return {acc * Rat(1, 2), c.group().order(), 1};
}

ScaledValue nu_m(const TYCategory& c, int64_t n, NuRoute route, const WorkBounds& wb) {
  if (n < 1) throw DomainError("nu_m: n must be positive");
  if (n % 2) return ScaledValue{Cyclotomic(Rat(0)), c.group().order(), 1};
  int64_t k = n / 2;
  switch (route) {
    case NuRoute::kFourier:
      return nu_m_fourier(c, k, standard_lift(c.chi()));
    case NuRoute::kConvolution:
      return nu_m_convolution(c, k, standard_lift(c.chi()));
    case NuRoute::kClosed:
      return nu_m_closed(c, k, wb);
    case NuRoute::kCenter:
      return nu_m_center(c, k);
  }
  throw DomainError("nu_m: unknown route");
}

namespace {

// Both square roots of a root of unity, smaller canonical exponent first.
std::pair<Cyclotomic, Cyclotomic> root_pair(const Cyclotomic& w) {
  auto [n, j] = as_root_of_unity(w);
  return {Cyclotomic::root_of_unity(2 * n, j), Cyclotomic::root_of_unity(2 * n, j + n)};
}

}  // namespace

std::string CenterSimple::braiding_note() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::X:
      os << "s(m)=" << epsilon.str() << ", s(x)=chi(" << element_str(a) << ",x)";
      break;
    case Kind::Y:
      os << "t(m)=[[0,1],[chi(a,b),0]], t(x)=diag(chi(" << element_str(b) << ",x),chi("
         << element_str(a) << ",x))";
      break;
    case Kind::Z:
      os << "u(m)=Delta*sum_x rho(-x), u(x)=rho(x)^-1, Delta=" << twist.str();
      break;
  }
  return os.str();
}

std::vector<CenterSimple> center_simples(const TYCategory& c) {
  const AbelianGroup& g = c.group();
  const Bicharacter& chi = c.chi();
  int64_t ord = g.order();
  auto elems = g.all_elements();
  std::vector<CenterSimple> out;
  out.reserve(static_cast<size_t>(2 * ord + ord * (ord - 1) / 2 + 2 * ord));

  for (int64_t ai = 0; ai < ord; ++ai) {
    Cyclotomic chiaa = chi.eval(elems[ai], elems[ai]);
    auto [e0, e1] = root_pair(chiaa);
    for (const Cyclotomic& eps : {e0, e1}) {
      if (!(eps * eps == chiaa)) throw InternalError("center: eps^2 != chi(a,a)");
      CenterSimple s;
      s.kind = CenterSimple::Kind::X;
      s.a = elems[ai];
      s.epsilon = eps;
      s.twist = chiaa;
      s.pdim = ScaledValue(Cyclotomic(Rat(1)));
      s.label = "X(" + element_str(s.a) + "," + eps.reduced().str() + ")";
      out.push_back(std::move(s));
    }
  }
  for (int64_t i = 0; i < ord; ++i)
    for (int64_t j = i + 1; j < ord; ++j) {
      CenterSimple s;
      s.kind = CenterSimple::Kind::Y;
      s.a = elems[i];
      s.b = elems[j];
      s.twist = chi.eval(elems[i], elems[j]);
      s.pdim = ScaledValue(Cyclotomic(Rat(2)));
      s.label = "Y(" + element_str(s.a) + "," + element_str(s.b) + ")";
      out.push_back(std::move(s));
    }

  auto lifts = all_lifts(chi);
  for (size_t li = 0; li < lifts.size(); ++li) {
    Cyclotomic s_rho{Rat(0)};
    for (int64_t i = 0; i < ord; ++i) s_rho += lifts[li].value_at_index(i);
    // tau * sum rho = sgn(tau) sum rho / sqrt(|A|), embedded exactly.
    Cyclotomic w = s_rho * embed_sqrt(ord) * Rat(c.tau_sign(), ord);
    auto [d0, d1] = root_pair(w);  // as_root_of_unity certifies w in mu_infty
    for (const Cyclotomic& delta : {d0, d1}) {
      if (!(delta * delta == w)) throw InternalError("center: Delta^2 != tau*sum(rho)");
      CenterSimple s;
      s.kind = CenterSimple::Kind::Z;
      s.rho_index = li;
      s.twist = delta;
      s.pdim = c.fpdim_m();
      s.label = "Z(rho" + std::to_string(li) + "," + delta.reduced().str() + ")";
      out.push_back(std::move(s));
    }
  }

  size_t expect = static_cast<size_t>(2 * ord + ord * (ord - 1) / 2 + 2 * ord);
  if (out.size() != expect) throw InternalError("center: simple-object count mismatch");
  // sum of pdim^2 over the list must be dim(C)^2 = 4|A|^2.
  int64_t pdim_sq = 2 * ord + 4 * (ord * (ord - 1) / 2) + 2 * ord * ord;
  if (pdim_sq != 4 * ord * ord) throw InternalError("center: global dimension mismatch");
  return out;
}

ScaledValue nu_via_center(const TYCategory& c, const SimpleLabel& v, int64_t n) {
  if (n < 1) throw DomainError("nu_via_center: n must be positive");
  const AbelianGroup& g = c.group();
  auto simples = center_simples(c);
  if (v.is_m) {
    Cyclotomic acc{Rat(0)};
    for (const CenterSimple& s : simples)
      if (s.kind == CenterSimple::Kind::Z) acc += s.twist.pow(n);
    return {acc * Rat(1, 2), g.order(), 1};
  }
  g.require_element(v.a);
  Cyclotomic acc{Rat(0)};
  for (const CenterSimple& s : simples) {
    if (s.kind == CenterSimple::Kind::X && s.a == v.a) acc += s.twist.pow(n);
    if (s.kind == CenterSimple::Kind::Y && (s.a == v.a || s.b == v.a))
      acc += s.twist.pow(n) * Rat(2);
  }
  return ScaledValue{acc * Rat(1, 2 * g.order())};
}

ScaledValue nu_category(const TYCategory& c, int64_t n, const WorkBounds& wb) {
  if (n < 1) throw DomainError("nu_category: n must be positive");
  int64_t torsion = static_cast<int64_t>(c.group().torsion(n).size());
  if (n % 2) return ScaledValue{Cyclotomic(torsion)};
  ScaledValue m_part = nu_m(c, n, NuRoute::kFourier, wb);
  // nu_n(m) * sqrt(|A|): lower the half power by one.
  ScaledValue scaled{m_part.num(), m_part.base(), m_part.half_power() - 1};
  return ScaledValue{Cyclotomic(torsion)} + scaled;
}

namespace {

Cyclotomic extract_xi(const TYCategory& c, int64_t k, const WorkBounds& wb) {
  Cyclotomic nu = nu_m(c, 2 * k, NuRoute::kFourier, wb).as_cyclotomic();
  int64_t tk = static_cast<int64_t>(c.group().torsion(k).size());
  Cyclotomic xi = nu * embed_sqrt(tk).inv();
  if (!(xi * xi * Rat(tk) == nu * nu))
    throw InternalError("extract_xi: square re-verification failed");
  return xi.reduced();
}

}  // namespace

CategoryDecomposition nu_category_decompose(const TYCategory& c, int64_t k,
                                            const WorkBounds& wb) {
  if (k < 1) throw DomainError("nu_category_decompose: k must be positive");
  const AbelianGroup& g = c.group();
  int64_t tk = static_cast<int64_t>(g.torsion(k).size());
  int64_t t2k = static_cast<int64_t>(g.torsion(2 * k).size());
  if (t2k % tk != 0) throw InternalError("decompose: |A[2k]| not divisible by |A[k]|");
  int64_t ratio = t2k / tk, r = 0;
  while (ratio % 2 == 0) {
    ratio /= 2;
    ++r;
  }
  if (ratio != 1) throw InternalError("decompose: |A[2k]|/|A[k]| is not a power of two");

  CategoryDecomposition d{r, extract_xi(c, k, wb)};
  // nu_2k(C) = (2^r + sqrt(|A/A[k]|) xi) |A[k]|, verified exactly.
  Cyclotomic rhs = (Cyclotomic(Rat(t2k / tk)) + embed_sqrt(g.order() / tk) * d.xi) * Rat(tk);
  if (!(nu_category(c, 2 * k, wb).as_cyclotomic() == rhs))
    throw InternalError("decompose: reconstruction identity failed");
  return d;
}

ArithCertificate arithmetic_certificate(const TYCategory& c, int64_t k,
                                        const WorkBounds& wb) {
  if (k < 1) throw DomainError("arithmetic_certificate: k must be positive");
  ArithCertificate cert;
  cert.xi = extract_xi(c, k, wb);
  cert.vanishes = lift_power_on_torsion(c.chi(), k);
  if (cert.vanishes != cert.xi.is_zero())
    throw InternalError("mu8 theorem violation: vanishing criterion mismatch");
  if (!cert.xi.is_zero() && !(cert.xi.pow(8) == Cyclotomic(Rat(1))))
    throw InternalError("mu8 theorem violation: xi^8 != 1");
  const AbelianGroup& g = c.group();
  if (g.order() % 2 == 1) {
    Cyclotomic xi2 = cert.xi * cert.xi;
    int sign;
    if (xi2 == Cyclotomic(Rat(1)))
      sign = +1;
    else if (xi2 == Cyclotomic(Rat(-1)))
      sign = -1;
    else
      throw InternalError("mu8 theorem violation: odd |A| but xi^2 not a sign");
    Int pw = 1;
    for (int64_t i = 1; i < k; ++i) pw *= g.order();
    Int tk(static_cast<long>(g.torsion(k).size()));
    if (pw % tk != 0) throw InternalError("mu8: |A|^(k-1) not divisible by |A[k]|");
    Int q = pw / tk;
    int expected = (q % 4 == 1) ? +1 : -1;
    if (sign != expected)
      throw InternalError("mu8 theorem violation: xi^2 sign contradicts the mod-4 test");
    cert.xi_square_sign = sign;
  }
  return cert;
}

ScaledValue xi_invariant(const PseudoMetricGroup& p, int64_t k, const WorkBounds& wb) {
  if (k < 1) throw DomainError("xi_invariant: k must be positive");
  const AbelianGroup& g = p.group();
  Cyclotomic s = chi_tuple_sum(p.chi(), k, wb.tuple_terms);
  int64_t base = static_cast<int64_t>(g.torsion(k).size());
  for (int64_t i = 1; i < k; ++i) base *= g.order();
  ScaledValue val{std::move(s), base, 1};
  if (p.chi().is_nondegenerate()) {
    Cyclotomic cy = val.as_cyclotomic();
    if (!cy.is_zero() && !root_of_unity_order(cy))
      throw InternalError("xi_invariant: value not in mu_infty for non-degenerate form");
  }
  return val;
}

FrobeniusReport frobenius_check(const TYCategory& c, const WorkBounds& wb) {
  FrobeniusReport report;
  for (int64_t n : divisors(c.dim())) {
    ScaledValue ratio = nu_category(c, n, wb) * Rat(1, n);
    bool pass = is_algebraic_integer(ratio.as_cyclotomic());
    report.by_divisor.emplace_back(n, pass);
    report.all_pass = report.all_pass && pass;
  }
  return report;
}

ScaledValue trace_antipode(const TYCategory& c) {
  const AbelianGroup& g = c.group();
  Cyclotomic val = Cyclotomic(Rat(static_cast<long>(g.torsion(2).size()))) +
                   embed_sqrt(g.order()) * Rat(c.tau_sign());
  return ScaledValue{std::move(val)};
}

std::vector<FiberWitness> fiber_functor_search(const TYCategory& c, const WorkBounds& wb) {
  const AbelianGroup& g = c.group();
  const Bicharacter& chi = c.chi();
  int64_t vroot = 0;
  if (!is_square(g.order(), &vroot))
    throw DomainError("NotSquare: |A| = " + std::to_string(g.order()) +
                      " is not a perfect square, so the category admits no fiber functor");
  auto elems = g.all_elements();
  std::vector<FiberWitness> witnesses;

  for (const Homomorphism& sigma : automorphisms(g, wb.aut_scan)) {
    // Involution?
    bool involution = true;
    for (size_t i = 0; i < g.rank() && involution; ++i)
      if (!(sigma.apply(sigma.apply(g.generator(i))) == g.generator(i))) involution = false;
    if (!involution) continue;
    // (a, b) -> chi(a, sigma(b)) alternating.
    bool alternating = true;
    for (const Element& a : elems)
      if (chi.eval_exponent(a, sigma.apply(a)) != 0) {
        alternating = false;
        break;
      }
    if (!alternating) continue;

    // V(sigma) = Fix(sigma) / { a + sigma(a) }.
    ElementList fix;
    for (const Element& a : elems)
      if (sigma.apply(a) == a) fix.push_back(a);
    ElementList w_gens;
    for (const Element& a : elems) w_gens.push_back(g.add(a, sigma.apply(a)));
    ElementList w = subgroup_closure(g, w_gens);

    std::vector<bool> in_w(g.order(), false);
    for (const Element& x : w) in_w[g.index_of(x)] = true;
    // Coset representatives inside Fix, in enumeration order.
    std::vector<Element> reps;
    std::vector<size_t> rep_pos(g.order(), static_cast<size_t>(-1));
    for (const Element& f : fix) {
      if (rep_pos[g.index_of(f)] != static_cast<size_t>(-1)) continue;
      size_t pos = reps.size();
      for (const Element& x : w) rep_pos[g.index_of(g.add(f, x))] = pos;
      reps.push_back(f);
    }
    ConcreteGroup cg{reps.size(), rep_pos[g.index_of(g.identity())],
                     [&](size_t x, size_t y) {
                       return rep_pos[g.index_of(g.add(reps[x], reps[y]))];
                     }};
    StructureIso iso = decompose_concrete(cg);
    const AbelianGroup& vg = iso.abstract;

    // Induced bicharacter on V(sigma).
    int64_t nv = vg.exponent(), n = chi.modulus();
    size_t r = vg.rank();
    std::vector<std::vector<int64_t>> mat(r, std::vector<int64_t>(r, 0));
    bool ok = true;
    for (size_t i = 0; i < r && ok; ++i)
      for (size_t j = 0; j < r && ok; ++j) {
        const Element& ri = reps[iso.abstract_to_concrete[vg.index_of(vg.generator(i))]];
        const Element& rj = reps[iso.abstract_to_concrete[vg.index_of(vg.generator(j))]];
        int64_t e = chi.eval_exponent(ri, rj);
        if ((e * nv) % n != 0)
          throw InternalError("fiber search: induced form exceeds quotient exponent");
        mat[i][j] = e * nv / n;
      }
    Bicharacter chibar(vg, std::move(mat));

    int64_t vsq = 0;
    if (!is_square(vg.order(), &vsq)) continue;  // Eq. for sgn(tau) unsatisfiable
    for (const QuadraticLift& rho : all_lifts(chibar)) {
      bool signs_only = true;
      int64_t total = 0;
      std::vector<int> signs(vg.order());
      for (int64_t i = 0; i < vg.order() && signs_only; ++i) {
        int64_t e = rho.exponent_at_index(i);
        if (e == 0) {
          signs[i] = 1;
        } else if (e == nv) {
          signs[i] = -1;
        } else {
          signs_only = false;
          break;
        }
        total += signs[i];
      }
      if (!signs_only) continue;
      if (total != c.tau_sign() * vsq) continue;
      FiberWitness wit;
      wit.sigma = sigma;
      wit.v_group = vg;
      for (size_t i = 0; i < static_cast<size_t>(vg.order()); ++i)
        wit.v_reps.push_back(reps[iso.abstract_to_concrete[i]]);
      wit.rho_signs = std::move(signs);
      witnesses.push_back(std::move(wit));
    }
  }
  return witnesses;
}

}  // namespace tyind
