#include "tyind/driver.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace tyind {

namespace {

using nlohmann::json;

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x == 0.0 ? 0.0 : x);  // normalize -0
  return buf;
}

json value_entry(int64_t n, const ScaledValue& v) {
  std::complex<double> z = v.to_complex();
  return json{{"n", n}, {"exact", exact_str(v)}, {"approx", format_complex(z)}};
}

TYCategory make_category(const Bicharacter& chi, int tau_sign) {
  return TYCategory(PseudoMetricGroup(chi), tau_sign);
}

json spec_echo(const Bicharacter& chi, int tau_sign) {
  return json{{"group", chi.group().str()},
              {"bichar", json::parse(chi.to_json())},
              {"tau", tau_sign > 0 ? "+" : "-"}};
}

}  // namespace

std::string format_complex(std::complex<double> z) {
  double scale = std::max({1.0, std::abs(z.real()), std::abs(z.imag())});
  double re = std::abs(z.real()) < 1e-12 * scale ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 1e-12 * scale ? 0.0 : z.imag();
  if (im == 0.0) return fmt12(re);
  std::string s = fmt12(re) + (im < 0 ? "-" : "+") + fmt12(std::abs(im)) + "i";
  return s;
}

std::string exact_str(const ScaledValue& v) { return v.str(); }

std::string table_json(const Bicharacter& chi, int tau_sign, int64_t n_min, int64_t n_max,
                       const WorkBounds& wb) {
  if (n_min < 1 || n_max < n_min) throw DomainError("table: bad n range");
  TYCategory cat = make_category(chi, tau_sign);
  const AbelianGroup& g = cat.group();
  json rows = json::array();
  for (const Element& a : g.all_elements()) {
    json values = json::array();
    for (int64_t n = n_min; n <= n_max; ++n)
      values.push_back(value_entry(n, ScaledValue(Cyclotomic(nu_invertible(cat, a, n)))));
    rows.push_back(json{{"object", element_str(a)}, {"values", values}});
  }
  {
    json values = json::array();
    for (int64_t n = n_min; n <= n_max; ++n)
      values.push_back(value_entry(n, nu_m(cat, n, NuRoute::kFourier, wb)));
    rows.push_back(json{{"object", "m"}, {"values", values}});
  }
  {
    json values = json::array();
    for (int64_t n = n_min; n <= n_max; ++n)
      values.push_back(value_entry(n, nu_category(cat, n, wb)));
    rows.push_back(json{{"object", "nu(C)"}, {"values", values}});
  }
  json out{{"spec", spec_echo(chi, tau_sign)},
           {"n_min", n_min},
           {"n_max", n_max},
           {"rows", rows}};
  return out.dump(2);
}

std::pair<std::string, bool> verify_json(const Bicharacter& chi, int tau_sign,
                                         const std::string& suite, int64_t kmax,
                                         const WorkBounds& wb) {
  VerifyReport rep = run_suite(suite, chi, tau_sign, kmax, wb);
  json checks = json::array();
  for (const CheckResult& c : rep.checks)
    checks.push_back(json{{"anchor", c.anchor},
                          {"instances", c.instances},
                          {"pass", c.pass},
                          {"detail", c.detail}});
  json out{{"spec", spec_echo(chi, tau_sign)},
           {"suite", rep.suite},
           {"kmax", kmax},
           {"pass", rep.pass},
           {"checks", checks}};
  return {out.dump(2), rep.pass};
}

std::string center_json(const Bicharacter& chi, int tau_sign) {
  TYCategory cat = make_category(chi, tau_sign);
  json simples = json::array();
  for (const CenterSimple& s : center_simples(cat)) {
    const char* kind = s.kind == CenterSimple::Kind::X   ? "X"
                       : s.kind == CenterSimple::Kind::Y ? "Y"
                                                         : "Z";
    ScaledValue twist{s.twist};
    simples.push_back(json{{"kind", kind},
                           {"label", s.label},
                           {"pdim", exact_str(s.pdim)},
                           {"pdim_approx", format_complex(s.pdim.to_complex())},
                           {"twist", exact_str(twist)},
                           {"twist_approx", format_complex(s.twist.to_complex())},
                           {"braiding", s.braiding_note()}});
  }
  json out{{"spec", spec_echo(chi, tau_sign)},
           {"count", simples.size()},
           {"simples", simples}};
  return out.dump(2);
}

std::string fiber_json(const Bicharacter& chi, int tau_sign, const WorkBounds& wb) {
  TYCategory cat = make_category(chi, tau_sign);
  json wits = json::array();
  for (const FiberWitness& w : fiber_functor_search(cat, wb)) {
    json reps = json::array(), signs = json::array();
    for (const Element& r : w.v_reps) reps.push_back(element_str(r));
    for (int s : w.rho_signs) signs.push_back(s);
    wits.push_back(json{{"sigma", w.sigma.str()},
                        {"v_group", w.v_group.str()},
                        {"v_reps", reps},
                        {"rho_signs", signs}});
  }
  json out{{"spec", spec_echo(chi, tau_sign)},
           {"count", wits.size()},
           {"witnesses", wits}};
  return out.dump(2);
}

std::string frobenius_json(const Bicharacter& chi, int tau_sign, const WorkBounds& wb) {
  TYCategory cat = make_category(chi, tau_sign);
  FrobeniusReport rep = frobenius_check(cat, wb);
  json divisors = json::array();
  for (auto [n, pass] : rep.by_divisor) {
    ScaledValue ratio = nu_category(cat, n, wb) * Rat(1, n);
    divisors.push_back(json{{"n", n},
                            {"pass", pass},
                            {"nu_over_n", exact_str(ratio)},
                            {"approx", format_complex(ratio.to_complex())}});
  }
  json out{{"spec", spec_echo(chi, tau_sign)},
           {"dim", cat.dim()},
           {"all_pass", rep.all_pass},
           {"divisors", divisors}};
  return out.dump(2);
}

std::string certificate_json(const Bicharacter& chi, int tau_sign, int64_t k,
                             const WorkBounds& wb) {
  TYCategory cat = make_category(chi, tau_sign);
  ArithCertificate cert = arithmetic_certificate(cat, k, wb);
  CategoryDecomposition dec = nu_category_decompose(cat, k, wb);
  json out{{"spec", spec_echo(chi, tau_sign)},
           {"k", k},
           {"xi", ScaledValue(cert.xi).str()},
           {"xi_approx", format_complex(cert.xi.to_complex())},
           {"vanishes", cert.vanishes},
           {"r", dec.r}};
  if (cert.xi_square_sign) out["xi_square_sign"] = *cert.xi_square_sign;
  return out.dump(2);
}

namespace {

// All well-defined symmetric matrices over the group, in lexicographic order
// of the upper triangle (entries stepping through the divisibility lattice).
std::vector<Bicharacter> symmetric_bicharacters(const AbelianGroup& g) {
  int64_t n = g.exponent();
  size_t r = g.rank();
  std::vector<std::pair<size_t, size_t>> slots;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i; j < r; ++j) slots.emplace_back(i, j);
  std::vector<Bicharacter> out;
  std::vector<std::vector<int64_t>> mat(r, std::vector<int64_t>(r, 0));
  std::function<void(size_t)> rec = [&](size_t s) {
    if (s == slots.size()) {
      out.emplace_back(g, mat);
      return;
    }
    auto [i, j] = slots[s];
    int64_t step = lcm64(n / gcd64(g.factors()[i], n), n / gcd64(g.factors()[j], n));
    for (int64_t v = 0; v < n; v += step) {
      mat[i][j] = mat[j][i] = v;
      rec(s + 1);
    }
    mat[i][j] = mat[j][i] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

std::string classify_json(int64_t order, const WorkBounds& wb) {
  if (order < 1) throw DomainError("classify: order must be positive");
  if (order > wb.aut_scan)
    throw BoundError("classify: order " + std::to_string(order) +
                     " exceeds the brute-force bound " + std::to_string(wb.aut_scan) +
                     " (raise with --bound-aut)");
  json groups = json::array();
  for (const AbelianGroup& g : groups_of_order(order)) {
    // Non-degenerate symmetric forms up to isometry.
    std::vector<Bicharacter> nondeg;
    for (Bicharacter& chi : symmetric_bicharacters(g))
      if (chi.is_nondegenerate()) nondeg.push_back(std::move(chi));
    std::vector<Bicharacter> reps;
    for (const Bicharacter& chi : nondeg) {
      bool seen = false;
      for (const Bicharacter& rep : reps)
        if (is_isometric(PseudoMetricGroup(chi), PseudoMetricGroup(rep), wb.aut_scan)) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(chi);
    }
    json rows = json::array();
    std::vector<std::pair<ScaledValue, ScaledValue>> seen_pairs;
    bool distinct = true;
    for (const Bicharacter& chi : reps) {
      for (int tau : {+1, -1}) {
        TYCategory cat(PseudoMetricGroup(chi), tau);
        ScaledValue n2m = nu_m(cat, 2, NuRoute::kFourier, wb);
        ScaledValue n4m = nu_m(cat, 4, NuRoute::kFourier, wb);
        for (const auto& p : seen_pairs)
          if (p.first.equals(n2m) && p.second.equals(n4m)) distinct = false;
        seen_pairs.emplace_back(n2m, n4m);
        rows.push_back(json{{"chi", json::parse(chi.to_json())},
                            {"tau", tau > 0 ? "+" : "-"},
                            {"nu2_m", exact_str(n2m)},
                            {"nu4_m", exact_str(n4m)},
                            {"nu4_m_approx", format_complex(n4m.to_complex())},
                            {"nu2_C", exact_str(nu_category(cat, 2, wb))},
                            {"nu4_C", exact_str(nu_category(cat, 4, wb))}});
      }
    }
    // (nu_2, nu_4) is a complete invariant over F_p^r; elsewhere collisions
    // are possible (Z9 has two classes with equal quadratic Gauss sums) and
    // are reported rather than rejected.
    bool elementary = true;
    for (int64_t f : g.factors())
      if (f != g.factors()[0] || !is_prime(f)) elementary = false;
    if (!distinct && elementary && g.order() > 1)
      throw InternalError("classify: (nu_2, nu_4) collision over an elementary group");
    groups.push_back(json{{"group", g.str()},
                          {"isometry_classes", reps.size()},
                          {"pairwise_distinct", distinct},
                          {"rows", rows}});
  }
  json out{{"order", order}, {"groups", groups}};
  return out.dump(2);
}

}  // namespace tyind
