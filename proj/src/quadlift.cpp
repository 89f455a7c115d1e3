#include "tyind/quadlift.hpp"

namespace tyind {

QuadraticLift::QuadraticLift(Bicharacter chi, std::vector<int64_t> exponents)
    : chi_(std::move(chi)), exps_(std::move(exponents)) {
  const AbelianGroup& g = chi_.group();
  if (exps_.size() != static_cast<size_t>(g.order()))
    throw DomainError("QuadraticLift: one exponent per group element required");
  int64_t m = modulus();
  for (int64_t& e : exps_) e = mod_norm(e, m);
  if (exps_[g.index_of(g.identity())] != 0)
    throw InternalError("QuadraticLift: rho(0) != 1");
  // Full coboundary verification: rho(a) rho(a+b)^{-1} rho(b) = chi(a, b).
  auto elems = g.all_elements();
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      size_t ij = g.index_of(g.add(elems[i], elems[j]));
      int64_t lhs = mod_norm(exps_[i] + exps_[j] - exps_[ij], m);
      int64_t rhs = mod_norm(2 * chi_.eval_exponent(elems[i], elems[j]), m);
      if (lhs != rhs) throw InternalError("QuadraticLift: coboundary check failed");
    }
}

Cyclotomic QuadraticLift::value(const Element& a) const {
  return value_at_index(group().index_of(a));
}

Cyclotomic QuadraticLift::value_at_index(size_t i) const {
  return Cyclotomic::root_of_unity(modulus(), exps_[i]);
}

GroupFunction QuadraticLift::fn() const {
  const AbelianGroup& g = group();
  std::vector<Cyclotomic> vals;
  vals.reserve(g.order());
  for (int64_t i = 0; i < g.order(); ++i) vals.push_back(value_at_index(i));
  return GroupFunction(g, std::move(vals));
}

QuadraticLift standard_lift(const Bicharacter& chi) {
  if (!chi.is_symmetric()) throw DomainError("standard_lift: chi must be symmetric");
  const AbelianGroup& g = chi.group();
  int64_t n = chi.modulus(), m = 2 * n;
  size_t r = g.rank();
  // theta_i as an exponent of zeta_{2N}: theta_i = zeta_{2 n_i}^{u_i}.
  std::vector<int64_t> theta(r, 0);
  for (size_t i = 0; i < r; ++i) {
    int64_t ni = g.factors()[i];
    // chi(e_i, e_i)^{-1} = zeta_{n_i}^{t}.
    int64_t t = mod_norm(-chi.matrix()[i][i], n) / (n / ni);
    int64_t u = ni % 2 ? mod_norm(t * (ni + 1) / 2, ni) * 2 : t;
    theta[i] = u * (n / ni);  // exponent of zeta_{2N}
  }
  std::vector<int64_t> exps(g.order(), 0);
  for (int64_t idx = 0; idx < g.order(); ++idx) {
    Element a = g.element(idx);
    int64_t e = 0;
    for (size_t i = 0; i < r; ++i) {
      e = mod_norm(e + theta[i] * ((a.r[i] * a.r[i]) % m), m);
      for (size_t j = i + 1; j < r; ++j)
        e = mod_norm(e - 2 * chi.matrix()[i][j] % m * (a.r[i] * a.r[j] % m), m);
    }
    exps[idx] = e;
  }
  return QuadraticLift(chi, std::move(exps));  // ctor re-verifies exhaustively
}

std::vector<QuadraticLift> all_lifts(const Bicharacter& chi) {
  const AbelianGroup& g = chi.group();
  QuadraticLift base = standard_lift(chi);
  int64_t n = chi.modulus(), m = 2 * n;
  std::vector<QuadraticLift> out;
  out.reserve(g.order());
  for (int64_t bi = 0; bi < g.order(); ++bi) {
    Element b = g.element(bi);
    std::vector<int64_t> exps(g.order());
    for (int64_t ai = 0; ai < g.order(); ++ai)
      exps[ai] = mod_norm(base.exponent_at_index(ai) +
                              2 * character_exponent(g, b, g.element(ai)),
                          m);
    out.emplace_back(chi, std::move(exps));
  }
  return out;
}

bool product_formula_check(const QuadraticLift& rho, const std::vector<Element>& tuple) {
  const AbelianGroup& g = rho.group();
  int64_t m = rho.modulus();
  int64_t lhs = 0;
  Element total = g.identity();
  int64_t cross = 0;
  for (size_t i = 0; i < tuple.size(); ++i) {
    lhs = mod_norm(lhs + rho.exponent_at(tuple[i]), m);
    for (size_t j = i + 1; j < tuple.size(); ++j)
      cross = mod_norm(cross + 2 * rho.chi().eval_exponent(tuple[i], tuple[j]), m);
    total = g.add(total, tuple[i]);
  }
  return lhs == mod_norm(rho.exponent_at(total) + cross, m);
}

bool radical_restriction_trivial(const QuadraticLift& rho) {
  const AbelianGroup& g = rho.group();
  int64_t m = rho.modulus();
  bool trivial = true;
  for (const Element& rad : rho.chi().radical()) {
    if (rho.exponent_at(rad) != 0) trivial = false;
    for (const Element& b : g.all_elements()) {
      int64_t lhs = rho.exponent_at(g.add(rad, b));
      int64_t rhs = mod_norm(rho.exponent_at(rad) + rho.exponent_at(b), m);
      if (lhs != rhs)
        throw InternalError("radical_restriction: rho is not multiplicative on J x A");
    }
  }
  return trivial;
}

bool lift_power_on_torsion(const Bicharacter& chi, int64_t k) {
  if (k < 0) throw DomainError("lift_power_on_torsion: k must be non-negative");
  QuadraticLift rho = standard_lift(chi);
  int64_t m = rho.modulus();
  for (const Element& a : chi.group().torsion(k))
    if (mod_norm(k * rho.exponent_at(a), m) != 0) return true;
  return false;
}

}  // namespace tyind
