// Command-line front end for the tyind shared library. Talks to the core
// exclusively through the C API in tyind.h; formatting (pretty/csv) is done
// here from the JSON the library returns.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tyind.h"

namespace {

using nlohmann::json;

struct JobOptions {
  std::string group;
  std::string bichar;
  std::string tau;
  std::string format = "pretty";
  int64_t bound_terms = 0;
  int64_t bound_aut = 0;
};

void add_job_options(CLI::App* cmd, JobOptions& opt, bool need_group = true) {
  auto* g = cmd->add_option("--group", opt.group, "group spec, e.g. Z4xZ2");
  if (need_group) g->required();
  cmd->add_option("--bichar", opt.bichar,
                  "bicharacter: alt | sym | diag:a1,a2,... | cyclic:c | trivial | JSON");
  cmd->add_option("--tau", opt.tau, "sign of tau: + or - (a \"tau\" field in the "
                  "bicharacter JSON is the fallback)");
  cmd->add_option("--format", opt.format, "output format: pretty | json | csv")
      ->default_val("pretty")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  cmd->add_option("--bound-terms", opt.bound_terms, "closed tuple-sum term budget");
  cmd->add_option("--bound-aut", opt.bound_aut, "brute-force bound on |A| for Aut scans");
}

int status_to_exit(tyind_status st) {
  switch (st) {
    case TYIND_OK:
      return 0;
    case TYIND_ERR_VERIFY:
    case TYIND_ERR_INTERNAL:
      return 1;
    case TYIND_ERR_BOUND:
      return 2;
    case TYIND_ERR_PARSE:
    case TYIND_ERR_DOMAIN:
      return 3;
  }
  return 1;
}

int fail(tyind_status st) {
  std::cerr << "error: " << tyind_last_error() << "\n";
  return status_to_exit(st);
}

struct JobHandle {
  tyind_job* job = nullptr;
  ~JobHandle() { tyind_job_free(job); }
};

tyind_status make_job(const JobOptions& opt, JobHandle& h) {
  tyind_status st = tyind_job_create(opt.group.c_str(),
                                     opt.bichar.empty() ? nullptr : opt.bichar.c_str(),
                                     opt.tau.empty() ? nullptr : opt.tau.c_str(), &h.job);
  if (st != TYIND_OK) return st;
  if (opt.bound_terms > 0 || opt.bound_aut > 0)
    st = tyind_job_set_bounds(h.job, opt.bound_terms, opt.bound_aut);
  return st;
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  tyind_string_free(s);
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

bool parse_range(const std::string& text, int64_t& lo, int64_t& hi) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoll(text);
    } else {
      lo = std::stoll(text.substr(0, dots));
      hi = std::stoll(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 1 && hi >= lo;
}

// ---- renderers -----------------------------------------------------------

void print_table(const json& j, const std::string& format) {
  if (format == "csv") {
    std::cout << "object,n,exact,approx\n";
    for (const auto& row : j.at("rows"))
      for (const auto& v : row.at("values"))
        std::cout << csv_quote(row.at("object").get<std::string>()) << ","
                  << v.at("n").get<int64_t>() << ","
                  << csv_quote(v.at("exact").get<std::string>()) << ","
                  << csv_quote(v.at("approx").get<std::string>()) << "\n";
    return;
  }
  const auto& spec = j.at("spec");
  std::cout << "TY(" << spec.at("group").get<std::string>() << ", tau "
            << spec.at("tau").get<std::string>() << "): nu_n for n = "
            << j.at("n_min").get<int64_t>() << ".." << j.at("n_max").get<int64_t>() << "\n";
  for (const auto& row : j.at("rows")) {
    std::cout << row.at("object").get<std::string>() << ":";
    for (const auto& v : row.at("values"))
      std::cout << "  " << v.at("exact").get<std::string>();
    std::cout << "\n";
  }
}

void print_verify(const json& j, const std::string& format) {
  if (format == "csv") {
    std::cout << "anchor,instances,pass,detail\n";
    for (const auto& c : j.at("checks"))
      std::cout << csv_quote(c.at("anchor").get<std::string>()) << ","
                << c.at("instances").get<int64_t>() << ","
                << (c.at("pass").get<bool>() ? "pass" : "FAIL") << ","
                << csv_quote(c.at("detail").get<std::string>()) << "\n";
    return;
  }
  std::cout << "suite '" << j.at("suite").get<std::string>() << "' on "
            << j.at("spec").at("group").get<std::string>() << " (tau "
            << j.at("spec").at("tau").get<std::string>() << ")\n";
  for (const auto& c : j.at("checks")) {
    std::cout << (c.at("pass").get<bool>() ? "  [PASS] " : "  [FAIL] ")
              << c.at("anchor").get<std::string>() << " (" << c.at("instances").get<int64_t>()
              << " instances)";
    std::string detail = c.at("detail").get<std::string>();
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
  }
  std::cout << (j.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
}

void print_center(const json& j, const std::string& format) {
  if (format == "csv") {
    std::cout << "kind,label,pdim,twist,twist_approx\n";
    for (const auto& s : j.at("simples"))
      std::cout << s.at("kind").get<std::string>() << ","
                << csv_quote(s.at("label").get<std::string>()) << ","
                << csv_quote(s.at("pdim").get<std::string>()) << ","
                << csv_quote(s.at("twist").get<std::string>()) << ","
                << csv_quote(s.at("twist_approx").get<std::string>()) << "\n";
    return;
  }
  std::cout << j.at("count").get<int64_t>() << " simple objects of the center\n";
  for (const auto& s : j.at("simples"))
    std::cout << "  " << s.at("label").get<std::string>() << "  pdim "
              << s.at("pdim").get<std::string>() << "  twist "
              << s.at("twist").get<std::string>() << " (" << s.at("twist_approx").get<std::string>()
              << ")\n";
}

void print_fiber(const json& j, const std::string& format) {
  if (format == "csv") {
    std::cout << "index,sigma,v_group,rho_signs\n";
    int64_t i = 0;
    for (const auto& w : j.at("witnesses")) {
      std::string rho;
      for (const auto& s : w.at("rho_signs")) rho += (s.get<int>() > 0 ? "+" : "-");
      std::cout << i++ << "," << csv_quote(w.at("sigma").get<std::string>()) << ","
                << w.at("v_group").get<std::string>() << "," << rho << "\n";
    }
    return;
  }
  std::cout << j.at("count").get<int64_t>() << " fiber-functor witnesses\n";
  for (const auto& w : j.at("witnesses")) {
    std::string rho;
    for (const auto& s : w.at("rho_signs")) rho += (s.get<int>() > 0 ? "+" : "-");
    std::cout << "  sigma " << w.at("sigma").get<std::string>() << ", V(sigma) = "
              << w.at("v_group").get<std::string>() << ", rho = " << rho << "\n";
  }
}

void print_frobenius(const json& j, const std::string& format) {
  if (format == "csv") {
    std::cout << "n,pass,nu_over_n,approx\n";
    for (const auto& d : j.at("divisors"))
      std::cout << d.at("n").get<int64_t>() << ","
                << (d.at("pass").get<bool>() ? "pass" : "FAIL") << ","
                << csv_quote(d.at("nu_over_n").get<std::string>()) << ","
                << csv_quote(d.at("approx").get<std::string>()) << "\n";
    return;
  }
  std::cout << "Frobenius theorem for dim(C) = " << j.at("dim").get<int64_t>() << ":\n";
  for (const auto& d : j.at("divisors"))
    std::cout << "  n = " << d.at("n").get<int64_t>() << ": "
              << (d.at("pass").get<bool>() ? "pass" : "FAIL") << "  (nu_n(C)/n = "
              << d.at("nu_over_n").get<std::string>() << ")\n";
  std::cout << (j.at("all_pass").get<bool>() ? "all divisors pass" : "some divisors fail")
            << "\n";
}

void print_classify(const json& j, const std::string& format) {
  if (format == "csv") {
    std::cout << "group,chi,tau,nu2_m,nu4_m,nu2_C,nu4_C\n";
    for (const auto& g : j.at("groups"))
      for (const auto& r : g.at("rows"))
        std::cout << g.at("group").get<std::string>() << ","
                  << csv_quote(r.at("chi").dump()) << "," << r.at("tau").get<std::string>()
                  << "," << csv_quote(r.at("nu2_m").get<std::string>()) << ","
                  << csv_quote(r.at("nu4_m").get<std::string>()) << ","
                  << csv_quote(r.at("nu2_C").get<std::string>()) << ","
                  << csv_quote(r.at("nu4_C").get<std::string>()) << "\n";
    return;
  }
  std::cout << "TY categories of group order " << j.at("order").get<int64_t>() << "\n";
  for (const auto& g : j.at("groups")) {
    std::cout << g.at("group").get<std::string>() << " ("
              << g.at("isometry_classes").get<int64_t>() << " isometry classes):\n";
    for (const auto& r : g.at("rows"))
      std::cout << "  chi = " << r.at("chi").at("matrix").dump() << ", tau "
                << r.at("tau").get<std::string>() << ": nu2(m) = "
                << r.at("nu2_m").get<std::string>() << ", nu4(m) = "
                << r.at("nu4_m").get<std::string>() << ", nu2(C) = "
                << r.at("nu2_C").get<std::string>() << ", nu4(C) = "
                << r.at("nu4_C").get<std::string>() << "\n";
  }
}

int emit(tyind_status st, char* payload, const std::string& format,
         void (*pretty)(const json&, const std::string&)) {
  if (st != TYIND_OK && !payload) return fail(st);
  std::string text = take_string(payload);
  if (format == "json") {
    std::cout << text << "\n";
  } else {
    pretty(json::parse(text), format);
  }
  if (st != TYIND_OK) std::cerr << "error: " << tyind_last_error() << "\n";
  return status_to_exit(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Frobenius-Schur indicators of Tambara-Yamagami categories"};
  app.require_subcommand(1);

  JobOptions topt;
  std::string n_range = "1..8";
  CLI::App* table = app.add_subcommand("table", "indicator table for all simple objects");
  add_job_options(table, topt);
  table->add_option("--n", n_range, "indicator orders, e.g. 4 or 1..8")->default_val("1..8");

  JobOptions vopt;
  std::string suite;
  int64_t kmax = 4;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_job_options(verify, vopt);
  verify->add_option("--suite", suite, "fourier|lifts|routes|arithmetic|center|frobenius|closedforms|all")
      ->required();
  verify->add_option("--kmax", kmax, "largest k (checks use n <= 2k)")->default_val(4);

  JobOptions copt;
  CLI::App* center = app.add_subcommand("center", "list Drinfeld-center simple objects");
  add_job_options(center, copt);

  JobOptions fopt;
  CLI::App* fiber = app.add_subcommand("fiber", "search fiber functors");
  add_job_options(fiber, fopt);

  JobOptions fropt;
  CLI::App* frobenius = app.add_subcommand("frobenius", "per-divisor Frobenius report");
  add_job_options(frobenius, fropt);

  JobOptions clopt;
  int64_t order = 0;
  CLI::App* classify = app.add_subcommand("classify", "classify TY categories by order");
  classify->add_option("--order", order, "group order")->required();
  classify->add_option("--format", clopt.format, "output format: pretty | json | csv")
      ->default_val("pretty")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  classify->add_option("--bound-terms", clopt.bound_terms, "closed tuple-sum term budget");
  classify->add_option("--bound-aut", clopt.bound_aut, "brute-force bound on |A|");

  CLI11_PARSE(app, argc, argv);

  if (table->parsed()) {
    int64_t lo, hi;
    if (!parse_range(n_range, lo, hi)) {
      std::cerr << "error: bad --n range '" << n_range << "'\n";
      return 3;
    }
    JobHandle h;
    tyind_status st = make_job(topt, h);
    if (st != TYIND_OK) return fail(st);
    char* out = nullptr;
    st = tyind_table_json(h.job, lo, hi, &out);
    return emit(st, out, topt.format, print_table);
  }
  if (verify->parsed()) {
    JobHandle h;
    tyind_status st = make_job(vopt, h);
    if (st != TYIND_OK) return fail(st);
    char* out = nullptr;
    st = tyind_verify_json(h.job, suite.c_str(), kmax, &out);
    return emit(st, out, vopt.format, print_verify);
  }
  if (center->parsed()) {
    JobHandle h;
    tyind_status st = make_job(copt, h);
    if (st != TYIND_OK) return fail(st);
    char* out = nullptr;
    st = tyind_center_json(h.job, &out);
    return emit(st, out, copt.format, print_center);
  }
  if (fiber->parsed()) {
    JobHandle h;
    tyind_status st = make_job(fopt, h);
    if (st != TYIND_OK) return fail(st);
    char* out = nullptr;
    st = tyind_fiber_json(h.job, &out);
    return emit(st, out, fopt.format, print_fiber);
  }
  if (frobenius->parsed()) {
    JobHandle h;
    tyind_status st = make_job(fropt, h);
    if (st != TYIND_OK) return fail(st);
    char* out = nullptr;
    st = tyind_frobenius_json(h.job, &out);
    return emit(st, out, fropt.format, print_frobenius);
  }
  if (classify->parsed()) {
    char* out = nullptr;
    tyind_status st =
        tyind_classify_json(order, clopt.bound_terms, clopt.bound_aut, &out);
    return emit(st, out, clopt.format, print_classify);
  }
  return 3;
}
