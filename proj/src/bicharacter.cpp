#include "tyind/bicharacter.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace tyind {

Bicharacter::Bicharacter(AbelianGroup group, std::vector<std::vector<int64_t>> matrix)
    : group_(std::move(group)), n_(group_.exponent()), mat_(std::move(matrix)) {
  size_t r = group_.rank();
  if (mat_.size() != r) throw DomainError("Bicharacter: matrix must be rank x rank");
  for (size_t i = 0; i < r; ++i) {
    if (mat_[i].size() != r) throw DomainError("Bicharacter: matrix must be square");
    for (size_t j = 0; j < r; ++j) {
      mat_[i][j] = mod_norm(mat_[i][j], n_);
      int64_t need = lcm64(n_ / gcd64(group_.factors()[i], n_),
                           n_ / gcd64(group_.factors()[j], n_));
      if (mat_[i][j] % need != 0)
        throw DomainError("Bicharacter: entry C[" + std::to_string(i + 1) + "][" +
                          std::to_string(j + 1) + "] = " + std::to_string(mat_[i][j]) +
                          " violates divisibility by N/gcd(n_i,n_j) = " +
                          std::to_string(need));
    }
  }
}

Bicharacter Bicharacter::trivial(AbelianGroup group) {
  size_t r = group.rank();
  return Bicharacter(std::move(group),
                     std::vector<std::vector<int64_t>>(r, std::vector<int64_t>(r, 0)));
}

Bicharacter Bicharacter::diag(int64_t p, const std::vector<int64_t>& entries) {
  if (!is_prime(p) || p == 2) throw DomainError("diag: p must be an odd prime");
  size_t r = entries.size();
  std::vector<std::vector<int64_t>> mat(r, std::vector<int64_t>(r, 0));
  for (size_t i = 0; i < r; ++i) mat[i][i] = mod_norm(entries[i], p);
  return Bicharacter(AbelianGroup(std::vector<int64_t>(r, p)), std::move(mat));
}

Bicharacter Bicharacter::sym(size_t r) {
  std::vector<std::vector<int64_t>> mat(r, std::vector<int64_t>(r, 0));
  for (size_t i = 0; i < r; ++i) mat[i][i] = 1;
  return Bicharacter(AbelianGroup(std::vector<int64_t>(r, 2)), std::move(mat));
}

Bicharacter Bicharacter::alt(size_t r) {
  if (r % 2) throw DomainError("alt: rank must be even");
  std::vector<std::vector<int64_t>> mat(r, std::vector<int64_t>(r, 0));
  for (size_t s = 0; s + 1 < r; s += 2) mat[s][s + 1] = mat[s + 1][s] = 1;
  return Bicharacter(AbelianGroup(std::vector<int64_t>(r, 2)), std::move(mat));
}

Bicharacter Bicharacter::cyclic(int64_t n, int64_t c) {
  return Bicharacter(AbelianGroup({n}), {{mod_norm(c, n)}});
}

namespace {

Bicharacter from_parsed(const AbelianGroup& group, const nlohmann::json& j) {
  if (j.contains("named")) {
    const auto& named = j.at("named");
    if (named.is_string()) {
      std::string name = named.get<std::string>();
      size_t r = group.rank();
      for (int64_t f : group.factors())
        if (f != 2) throw DomainError("named '" + name + "' requires a group of shape Z2^r");
      if (name == "alt") return Bicharacter::alt(r);
      if (name == "sym") return Bicharacter::sym(r);
      throw ParseError("unknown named bicharacter '" + name + "'");
    }
    if (named.contains("diag")) {
      auto entries = named.at("diag").get<std::vector<int64_t>>();
      if (entries.size() != group.rank())
        throw DomainError("diag: entry count must match group rank");
      int64_t p = group.factors().empty() ? 0 : group.factors()[0];
      for (int64_t f : group.factors())
        if (f != p) throw DomainError("diag requires a group of shape Zp^r");
      return Bicharacter::diag(p, entries);
    }
    if (named.contains("cyclic")) {
      if (group.rank() != 1) throw DomainError("cyclic requires a single cyclic factor");
      return Bicharacter::cyclic(group.factors()[0], named.at("cyclic").get<int64_t>());
    }
    throw ParseError("unrecognized named bicharacter form");
  }
  auto mat = j.at("matrix").get<std::vector<std::vector<int64_t>>>();
  int64_t zeta = j.value("zeta", group.exponent());
  int64_t n = group.exponent();
  if (zeta < 1) throw ParseError("bicharacter json: zeta must be positive");
  if (zeta != n) {
    // Rescale zeta_Z^m to zeta_N^c; each entry must convert exactly.
    for (auto& row : mat)
      for (auto& m : row) {
        m = mod_norm(m, zeta);
        if ((m * n) % zeta != 0)
          throw DomainError("bicharacter json: entry " + std::to_string(m) +
                            " of order not dividing the group exponent");
        m = m * n / zeta;
      }
  }
  return Bicharacter(group, std::move(mat));
}

}  // namespace

Bicharacter Bicharacter::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bicharacter json: ") + e.what());
  }
  try {
    AbelianGroup group(j.at("group").get<std::vector<int64_t>>());
    return from_parsed(group, j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bicharacter json: ") + e.what());
  }
}

Bicharacter Bicharacter::from_spec(const AbelianGroup& group, const std::string& spec) {
  if (!spec.empty() && spec[0] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bicharacter json: ") + e.what());
    }
    try {
      if (j.contains("group")) {
        AbelianGroup g(j.at("group").get<std::vector<int64_t>>());
        if (!(g == group))
          throw DomainError("bicharacter json group does not match --group");
        return from_parsed(g, j);
      }
      return from_parsed(group, j);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bicharacter json: ") + e.what());
    }
  }
  nlohmann::json j;
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  if (head == "alt" || head == "sym") {
    j["named"] = head;
  } else if (head == "cyclic" && colon != std::string::npos) {
    try {
      j["named"] = {{"cyclic", std::stoll(spec.substr(colon + 1))}};
    } catch (const std::exception&) {
      throw ParseError("bad cyclic spec '" + spec + "'");
    }
  } else if (head == "diag" && colon != std::string::npos) {
    std::vector<int64_t> entries;
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        entries.push_back(std::stoll(item));
      } catch (const std::exception&) {
        throw ParseError("bad diag spec '" + spec + "'");
      }
    }
    if (entries.empty()) throw ParseError("bad diag spec '" + spec + "'");
    j["named"] = {{"diag", entries}};
  } else if (head == "trivial") {
    return Bicharacter::trivial(group);
  } else {
    throw ParseError("unrecognized bicharacter spec '" + spec + "'");
  }
  return from_parsed(group, j);
}

std::string Bicharacter::to_json() const {
  nlohmann::json j;
  j["group"] = group_.factors();
  j["zeta"] = n_;
  j["matrix"] = mat_;
  return j.dump();
}

int64_t Bicharacter::eval_exponent(const Element& a, const Element& b) const {
  group_.require_element(a);
  group_.require_element(b);
  int64_t e = 0;
  for (size_t i = 0; i < group_.rank(); ++i) {
    if (a.r[i] == 0) continue;
    for (size_t j = 0; j < group_.rank(); ++j) {
      if (b.r[j] == 0 || mat_[i][j] == 0) continue;
      e = (e + a.r[i] * mat_[i][j] % n_ * b.r[j]) % n_;
    }
  }
  return e;
}

Cyclotomic Bicharacter::eval(const Element& a, const Element& b) const {
  return Cyclotomic::root_of_unity(n_, eval_exponent(a, b));
}

bool Bicharacter::is_symmetric() const {
  for (size_t i = 0; i < mat_.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (mat_[i][j] != mat_[j][i]) return false;
  // Full verification at desk scale.
  auto elems = group_.all_elements();
  for (const Element& a : elems)
    for (const Element& b : elems)
      if (eval_exponent(a, b) != eval_exponent(b, a)) return false;
  return true;
}

bool Bicharacter::is_alternating() const {
  for (const Element& a : group_.all_elements())
    if (eval_exponent(a, a) != 0) return false;
  return true;
}

ElementList Bicharacter::radical() const {
  if (!is_symmetric()) throw DomainError("radical: bicharacter must be symmetric");
  ElementList out;
  for (const Element& a : group_.all_elements()) {
    bool in = true;
    for (size_t i = 0; i < group_.rank() && in; ++i)
      if (eval_exponent(group_.generator(i), a) != 0) in = false;
    if (in) out.push_back(a);
  }
  return out;
}

bool Bicharacter::is_nondegenerate() const { return radical().size() == 1; }

Bicharacter Bicharacter::galois_twist(int64_t s) const {
  if (gcd64(mod_norm(s, n_), n_) != 1 && n_ > 1)
    throw DomainError("galois_twist: s not coprime to the exponent");
  auto mat = mat_;
  for (auto& row : mat)
    for (auto& c : row) c = mod_norm(c * s, n_);
  return Bicharacter(group_, std::move(mat));
}

PseudoMetricGroup::PseudoMetricGroup(Bicharacter chi) : chi_(std::move(chi)) {
  if (!chi_.is_symmetric())
    throw DomainError("PseudoMetricGroup: bicharacter must be symmetric");
}

const Element& Descent::rep_of(const Element& abstract_elem) const {
  return quotient.reps()[structure.abstract_to_concrete[structure.abstract.index_of(
      abstract_elem)]];
}

Element Descent::abstract_of(const Element& parent_elem) const {
  return structure.abstract.element(
      structure.concrete_to_abstract[quotient.rep_position(parent_elem)]);
}

Descent descend_to_quotient(const Bicharacter& chi) {
  if (!chi.is_symmetric())
    throw DomainError("descend_to_quotient: bicharacter must be symmetric");
  const AbelianGroup& g = chi.group();
  Quotient q(g, chi.radical());
  ConcreteGroup cg{q.size(), q.rep_position(g.identity()), [&q](size_t x, size_t y) {
                     return q.rep_position(q.parent().add(q.reps()[x], q.reps()[y]));
                   }};
  StructureIso iso = decompose_concrete(cg);

  const AbelianGroup& quot = iso.abstract;
  int64_t nbar = quot.exponent(), n = chi.modulus();
  size_t r = quot.rank();
  std::vector<std::vector<int64_t>> mat(r, std::vector<int64_t>(r, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      const Element& ri = q.reps()[iso.abstract_to_concrete[quot.index_of(quot.generator(i))]];
      const Element& rj = q.reps()[iso.abstract_to_concrete[quot.index_of(quot.generator(j))]];
      int64_t e = chi.eval_exponent(ri, rj);
      if ((e * nbar) % n != 0)
        throw InternalError("descend_to_quotient: value order exceeds quotient exponent");
      mat[i][j] = e * nbar / n;
    }
  Bicharacter descended(quot, std::move(mat));
  if (!descended.is_nondegenerate())
    throw InternalError("descend_to_quotient: induced bicharacter is degenerate");
  return Descent{std::move(q), std::move(iso), std::move(descended)};
}

namespace {

struct IsoSearch {
  const Bicharacter& chi_p;
  const Bicharacter& chi_q;
  const AbelianGroup& a;
  const AbelianGroup& b;
  std::vector<Element> images;
  std::optional<Homomorphism> found;

  void run(size_t level, std::vector<bool>& mem, std::vector<size_t>& span) {
    if (found) return;
    if (level == a.rank()) {
      found = Homomorphism{a, b, images};
      return;
    }
    int64_t n = a.factors()[level];
    for (int64_t c = 0; c < b.order() && !found; ++c) {
      Element cand = b.element(c);
      if (b.element_order(cand) != n) continue;
      bool ok = true;
      for (size_t j = 0; j <= level && ok; ++j) {
        const Element& other = j == level ? cand : images[j];
        if (chi_q.eval_exponent(cand, other) !=
            chi_p.eval_exponent(a.generator(level), a.generator(j)))
          ok = false;
      }
      if (!ok) continue;
      std::vector<bool> mem2 = mem;
      std::vector<size_t> span2 = span;
      size_t base = span2.size();
      Element step = cand;
      for (int64_t k = 1; k < n && ok; ++k) {
        for (size_t i = 0; i < base; ++i) {
          size_t y = b.index_of(b.add(b.element(span2[i]), step));
          if (mem2[y]) {
            ok = false;
            break;
          }
          mem2[y] = true;
          span2.push_back(y);
        }
        step = b.add(step, cand);
      }
      if (!ok) continue;
      images.push_back(std::move(cand));
      run(level + 1, mem2, span2);
      images.pop_back();
    }
  }
};

std::vector<int64_t> diagonal_multiset(const Bicharacter& chi) {
  std::vector<int64_t> d;
  for (const Element& a : chi.group().all_elements()) d.push_back(chi.eval_exponent(a, a));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<Homomorphism> is_isometric(const PseudoMetricGroup& p,
                                         const PseudoMetricGroup& q, int64_t bound) {
  const AbelianGroup& a = p.group();
  const AbelianGroup& b = q.group();
  if (a.order() > bound || b.order() > bound)
    throw BoundError("is_isometric: group order exceeds the brute-force bound " +
                     std::to_string(bound) + " (raise with --bound-aut)");
  if (a.order() != b.order()) return std::nullopt;
  if (!(a.canonical_form() == b.canonical_form())) return std::nullopt;
  // The diagonal multiset {chi(a,a)} is a cheap isometry invariant.
  if (diagonal_multiset(p.chi()) != diagonal_multiset(q.chi())) return std::nullopt;

  IsoSearch search{p.chi(), q.chi(), a, b, {}, std::nullopt};
  std::vector<bool> mem(b.order(), false);
  mem[b.index_of(b.identity())] = true;
  std::vector<size_t> span{b.index_of(b.identity())};
  search.run(0, mem, span);
  return search.found;
}

std::vector<PrimaryPart> product_decompose(const PseudoMetricGroup& p) {
  const Bicharacter& chi = p.chi();
  const AbelianGroup& g = chi.group();
  int64_t n = chi.modulus();
  std::vector<PrimaryPart> out;
  for (SylowComponent& s : sylow_decompose(g)) {
    int64_t np = s.component.exponent();
    size_t r = s.component.rank();
    std::vector<std::vector<int64_t>> mat(r, std::vector<int64_t>(r, 0));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) {
        int64_t e = chi.eval_exponent(s.embed(s.component.generator(i)),
                                      s.embed(s.component.generator(j)));
        if ((e * np) % n != 0)
          throw InternalError("product_decompose: restricted value order too large");
        mat[i][j] = e * np / n;
      }
    Bicharacter restricted(s.component, std::move(mat));
    out.push_back(PrimaryPart{std::move(s), std::move(restricted)});
  }
  return out;
}

}  // namespace tyind
