#include "tyind.h"

#include <cstring>
#include <string>

#include "json.hpp"
#include "tyind/driver.hpp"

struct tyind_job {
  tyind::Bicharacter chi;
  int tau_sign;
  tyind::WorkBounds bounds;
};

namespace {

thread_local std::string g_last_error = "";

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
tyind_status wrap(Fn&& fn) {
  try {
    fn();
    return TYIND_OK;
  } catch (const tyind::ParseError& e) {
    g_last_error = e.what();
    return TYIND_ERR_PARSE;
  } catch (const tyind::DomainError& e) {
    g_last_error = e.what();
    return TYIND_ERR_DOMAIN;
  } catch (const tyind::BoundError& e) {
    g_last_error = e.what();
    return TYIND_ERR_BOUND;
  } catch (const tyind::VerifyError& e) {
    g_last_error = e.what();
    return TYIND_ERR_VERIFY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TYIND_ERR_INTERNAL;
  }
}

int parse_tau_text(const std::string& t) {
  if (t == "+" || t == "+1") return +1;
  if (t == "-" || t == "-1") return -1;
  throw tyind::ParseError("tau must be '+' or '-', got '" + t + "'");
}

// Explicit argument wins; a "tau" field inside a bicharacter JSON is the
// fallback; the default is '+'.
int parse_tau(const char* tau, const char* bichar_spec) {
  if (tau && *tau) return parse_tau_text(tau);
  if (bichar_spec && *bichar_spec == '{') {
    auto j = nlohmann::json::parse(bichar_spec, nullptr, false);
    if (j.is_object() && j.contains("tau") && j["tau"].is_string())
      return parse_tau_text(j["tau"].get<std::string>());
  }
  return +1;
}

tyind::NuRoute parse_route(const char* route) {
  if (!route) return tyind::NuRoute::kFourier;
  std::string r(route);
  if (r == "fourier" || r.empty()) return tyind::NuRoute::kFourier;
  if (r == "convolution") return tyind::NuRoute::kConvolution;
  if (r == "closed") return tyind::NuRoute::kClosed;
  if (r == "center") return tyind::NuRoute::kCenter;
  throw tyind::ParseError("unknown route '" + r + "'");
}

void put_value(const tyind::ScaledValue& v, char** exact, double* re, double* im) {
  if (exact) *exact = dup_string(tyind::exact_str(v));
  std::complex<double> z = v.to_complex();
  if (re) *re = z.real();
  if (im) *im = z.imag();
}

}  // namespace

extern "C" {

const char* tyind_version(void) { return "0.1.0"; }

const char* tyind_last_error(void) { return g_last_error.c_str(); }

void tyind_string_free(char* s) { delete[] s; }

tyind_status tyind_job_create(const char* group_spec, const char* bichar_spec,
                              const char* tau, tyind_job** out) {
  return wrap([&] {
    if (!group_spec || !out) throw tyind::ParseError("group spec and out are required");
    tyind::AbelianGroup g = tyind::AbelianGroup::parse(group_spec);
    tyind::Bicharacter chi =
        (bichar_spec && *bichar_spec)
            ? tyind::Bicharacter::from_spec(g, bichar_spec)
            : tyind::Bicharacter::trivial(g);
    if (!chi.is_symmetric())
      throw tyind::DomainError("bicharacter must be symmetric");
    *out = new tyind_job{std::move(chi), parse_tau(tau, bichar_spec), tyind::WorkBounds{}};
  });
}

void tyind_job_free(tyind_job* job) { delete job; }

tyind_status tyind_job_set_bounds(tyind_job* job, int64_t tuple_terms, int64_t aut_scan) {
  return wrap([&] {
    if (!job) throw tyind::ParseError("null job");
    if (tuple_terms > 0) job->bounds.tuple_terms = tuple_terms;
    if (aut_scan > 0) job->bounds.aut_scan = aut_scan;
  });
}

tyind_status tyind_group_order(const tyind_job* job, int64_t* out) {
  return wrap([&] {
    if (!job || !out) throw tyind::ParseError("null argument");
    *out = job->chi.group().order();
  });
}

tyind_status tyind_element_str(const tyind_job* job, int64_t index, char** out) {
  return wrap([&] {
    if (!job || !out) throw tyind::ParseError("null argument");
    *out = dup_string(tyind::element_str(job->chi.group().element(index)));
  });
}

tyind_status tyind_nu_element(tyind_job* job, int64_t index, int64_t n, int64_t* out) {
  return wrap([&] {
    if (!job || !out) throw tyind::ParseError("null argument");
    tyind::TYCategory cat(tyind::PseudoMetricGroup(job->chi), job->tau_sign);
    *out = tyind::nu_invertible(cat, job->chi.group().element(index), n);
  });
}

tyind_status tyind_nu_m(tyind_job* job, int64_t n, const char* route, char** exact,
                        double* re, double* im) {
  return wrap([&] {
    if (!job) throw tyind::ParseError("null job");
    tyind::TYCategory cat(tyind::PseudoMetricGroup(job->chi), job->tau_sign);
    put_value(tyind::nu_m(cat, n, parse_route(route), job->bounds), exact, re, im);
  });
}

tyind_status tyind_nu_category(tyind_job* job, int64_t n, char** exact, double* re,
                               double* im) {
  return wrap([&] {
    if (!job) throw tyind::ParseError("null job");
    tyind::TYCategory cat(tyind::PseudoMetricGroup(job->chi), job->tau_sign);
    put_value(tyind::nu_category(cat, n, job->bounds), exact, re, im);
  });
}

tyind_status tyind_table_json(tyind_job* job, int64_t n_min, int64_t n_max,
                              char** json_out) {
  return wrap([&] {
    if (!job || !json_out) throw tyind::ParseError("null argument");
    *json_out = dup_string(tyind::table_json(job->chi, job->tau_sign, n_min, n_max,
                                             job->bounds));
  });
}

tyind_status tyind_verify_json(tyind_job* job, const char* suite, int64_t kmax,
                               char** json_out) {
  bool pass = true;
  tyind_status st = wrap([&] {
    if (!job || !json_out || !suite) throw tyind::ParseError("null argument");
    auto [text, ok] =
        tyind::verify_json(job->chi, job->tau_sign, suite, kmax, job->bounds);
    *json_out = dup_string(text);
    pass = ok;
  });
  if (st != TYIND_OK) return st;
  if (!pass) {
    g_last_error = "verification suite reported failures";
    return TYIND_ERR_VERIFY;
  }
  return TYIND_OK;
}

tyind_status tyind_center_json(tyind_job* job, char** json_out) {
  return wrap([&] {
    if (!job || !json_out) throw tyind::ParseError("null argument");
    *json_out = dup_string(tyind::center_json(job->chi, job->tau_sign));
  });
}

tyind_status tyind_fiber_json(tyind_job* job, char** json_out) {
  return wrap([&] {
    if (!job || !json_out) throw tyind::ParseError("null argument");
    *json_out = dup_string(tyind::fiber_json(job->chi, job->tau_sign, job->bounds));
  });
}

tyind_status tyind_frobenius_json(tyind_job* job, char** json_out) {
  return wrap([&] {
    if (!job || !json_out) throw tyind::ParseError("null argument");
    *json_out = dup_string(tyind::frobenius_json(job->chi, job->tau_sign, job->bounds));
  });
}

tyind_status tyind_certificate_json(tyind_job* job, int64_t k, char** json_out) {
  return wrap([&] {
    if (!job || !json_out) throw tyind::ParseError("null argument");
    *json_out = dup_string(tyind::certificate_json(job->chi, job->tau_sign, k,
                                                   job->bounds));
  });
}

tyind_status tyind_classify_json(int64_t order, int64_t tuple_terms, int64_t aut_scan,
                                 char** json_out) {
  return wrap([&] {
    if (!json_out) throw tyind::ParseError("null argument");
    tyind::WorkBounds wb;
    if (tuple_terms > 0) wb.tuple_terms = tuple_terms;
    if (aut_scan > 0) wb.aut_scan = aut_scan;
    *json_out = dup_string(tyind::classify_json(order, wb));
  });
}

}  // extern "C"
