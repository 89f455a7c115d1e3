#include "tyind/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace tyind {

std::string element_str(const Element& e) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.r.size(); ++i) {
    if (i) os << ",";
    os << e.r[i];
  }
  os << ")";
  return os.str();
}

AbelianGroup::AbelianGroup(std::vector<int64_t> factors) : factors_(std::move(factors)) {
  for (int64_t n : factors_) {
    if (n < 1) throw DomainError("AbelianGroup: cyclic orders must be >= 1");
    order_ *= n;
    exponent_ = lcm64(exponent_, n);
  }
}

AbelianGroup AbelianGroup::parse(const std::string& spec) {
  std::vector<int64_t> factors;
  size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("group spec '" + spec + "': " + what + " at position " +
                     std::to_string(i));
  };
  while (true) {
    if (i >= spec.size() || (spec[i] != 'Z' && spec[i] != 'z')) fail("expected 'Z'");
    ++i;
    if (i >= spec.size() || !std::isdigit(static_cast<unsigned char>(spec[i])))
      fail("expected digits");
    int64_t n = 0;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
      n = n * 10 + (spec[i] - '0');
      if (n > 1'000'000) fail("factor too large");
      ++i;
    }
    if (n < 1) fail("factor must be >= 1");
    factors.push_back(n);
    if (i == spec.size()) break;
    if (spec[i] != 'x' && spec[i] != 'X') fail("expected 'x'");
    ++i;
  }
  return AbelianGroup(std::move(factors));
}

std::string AbelianGroup::str() const {
  if (factors_.empty()) return "Z1";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << "x";
    os << "Z" << factors_[i];
  }
  return os.str();
}

Element AbelianGroup::identity() const {
  return Element{std::vector<int64_t>(rank(), 0)};
}

Element AbelianGroup::make(std::vector<int64_t> residues) const {
  if (residues.size() != rank()) throw DomainError("make: wrong arity for group");
  for (size_t i = 0; i < residues.size(); ++i) residues[i] = mod_norm(residues[i], factors_[i]);
  return Element{std::move(residues)};
}

Element AbelianGroup::element(size_t index) const {
  if (static_cast<int64_t>(index) >= order_) throw DomainError("element: index out of range");
  std::vector<int64_t> r(rank());
  for (size_t i = rank(); i-- > 0;) {
    r[i] = static_cast<int64_t>(index % factors_[i]);
    index /= factors_[i];
  }
  return Element{std::move(r)};
}

size_t AbelianGroup::index_of(const Element& e) const {
  require_element(e);
  size_t idx = 0;
  for (size_t i = 0; i < rank(); ++i) idx = idx * factors_[i] + e.r[i];
  return idx;
}

std::vector<Element> AbelianGroup::all_elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (int64_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

void AbelianGroup::require_element(const Element& e) const {
  if (e.r.size() != rank()) throw DomainError("element does not belong to this group (arity)");
  for (size_t i = 0; i < rank(); ++i)
    if (e.r[i] < 0 || e.r[i] >= factors_[i])
      throw DomainError("element does not belong to this group (range)");
}

Element AbelianGroup::add(const Element& a, const Element& b) const {
  require_element(a);
  require_element(b);
  std::vector<int64_t> r(rank());
  for (size_t i = 0; i < rank(); ++i) r[i] = (a.r[i] + b.r[i]) % factors_[i];
  return Element{std::move(r)};
}

Element AbelianGroup::neg(const Element& a) const {
  require_element(a);
  std::vector<int64_t> r(rank());
  for (size_t i = 0; i < rank(); ++i) r[i] = a.r[i] == 0 ? 0 : factors_[i] - a.r[i];
  return Element{std::move(r)};
}

Element AbelianGroup::mul(const Element& a, int64_t k) const {
  require_element(a);
  std::vector<int64_t> r(rank());
  for (size_t i = 0; i < rank(); ++i) {
    int64_t kk = mod_norm(k, factors_[i]);
    r[i] = (a.r[i] * kk) % factors_[i];
  }
  return Element{std::move(r)};
}

int64_t AbelianGroup::element_order(const Element& a) const {
  require_element(a);
  int64_t ord = 1;
  for (size_t i = 0; i < rank(); ++i)
    ord = lcm64(ord, factors_[i] / gcd64(factors_[i], a.r[i]));
  return ord;
}

std::vector<Element> AbelianGroup::torsion(int64_t n) const {
  if (n < 0) throw DomainError("torsion: n must be non-negative");
  std::vector<Element> out;
  for (int64_t i = 0; i < order_; ++i) {
    Element e = element(i);
    bool in = true;
    for (size_t j = 0; j < rank(); ++j)
      if ((e.r[j] * mod_norm(n, factors_[j])) % factors_[j] != 0) {
        in = false;
        break;
      }
    if (in) out.push_back(std::move(e));
  }
  return out;
}

Element AbelianGroup::generator(size_t i) const {
  std::vector<int64_t> r(rank(), 0);
  if (factors_[i] > 1) r[i] = 1;
  return Element{std::move(r)};
}

AbelianGroup AbelianGroup::canonical_form() const {
  // Per prime, sort the prime-power exponents descending; invariant factor i
  // is the product of the i-th largest power of each prime.
  std::map<int64_t, std::vector<int>> by_prime;
  size_t max_len = 0;
  for (int64_t n : factors_)
    for (auto [p, e] : factorize(n)) {
      by_prime[p].push_back(e);
    }
  for (auto& [p, es] : by_prime) {
    std::sort(es.begin(), es.end(), std::greater<>());
    max_len = std::max(max_len, es.size());
  }
  std::vector<int64_t> inv(max_len, 1);
  for (auto& [p, es] : by_prime)
    for (size_t i = 0; i < es.size(); ++i)
      for (int k = 0; k < es[i]; ++k) inv[i] *= p;
  if (inv.empty()) inv.push_back(1);
  return AbelianGroup(std::move(inv));
}

bool is_subgroup(const AbelianGroup& g, const ElementList& k) {
  if (k.empty()) return false;
  std::vector<bool> mem(g.order(), false);
  for (const Element& e : k) {
    g.require_element(e);
    mem[g.index_of(e)] = true;
  }
  if (!mem[g.index_of(g.identity())]) return false;
  for (const Element& a : k)
    for (const Element& b : k)
      if (!mem[g.index_of(g.add(a, b))]) return false;
  return true;
}

ElementList subgroup_closure(const AbelianGroup& g, const ElementList& generators) {
  std::vector<bool> mem(g.order(), false);
  ElementList frontier{g.identity()};
  mem[g.index_of(g.identity())] = true;
  while (!frontier.empty()) {
    ElementList next;
    for (const Element& x : frontier)
      for (const Element& gen : generators) {
        Element y = g.add(x, gen);
        size_t idx = g.index_of(y);
        if (!mem[idx]) {
          mem[idx] = true;
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  ElementList out;
  for (int64_t i = 0; i < g.order(); ++i)
    if (mem[i]) out.push_back(g.element(i));
  return out;
}

ElementList sorted_elements(const AbelianGroup& g, ElementList items) {
  std::sort(items.begin(), items.end(), [&](const Element& a, const Element& b) {
    return g.index_of(a) < g.index_of(b);
  });
  return items;
}

Quotient::Quotient(AbelianGroup parent, ElementList k)
    : parent_(std::move(parent)), k_(sorted_elements(parent_, std::move(k))) {
  if (!is_subgroup(parent_, k_)) throw DomainError("Quotient: K is not a subgroup");
  rep_pos_.assign(parent_.order(), static_cast<size_t>(-1));
  for (int64_t i = 0; i < parent_.order(); ++i) {
    if (rep_pos_[i] != static_cast<size_t>(-1)) continue;
    Element rep = parent_.element(i);
    size_t pos = reps_.size();
    for (const Element& x : k_) rep_pos_[parent_.index_of(parent_.add(rep, x))] = pos;
    reps_.push_back(std::move(rep));
  }
}

Element Quotient::project(const Element& a) const { return reps_[rep_position(a)]; }

size_t Quotient::rep_position(const Element& a) const {
  parent_.require_element(a);
  return rep_pos_[parent_.index_of(a)];
}

Element Quotient::add(const Element& a, const Element& b) const {
  return project(parent_.add(a, b));
}

Element Quotient::neg(const Element& a) const { return project(parent_.neg(a)); }

Element SylowComponent::embed(const Element& x) const {
  component.require_element(x);
  std::vector<int64_t> r(parent.rank(), 0);
  for (size_t j = 0; j < component.rank(); ++j) {
    size_t i = parent_factor[j];
    r[i] = (x.r[j] % parent.factors()[i]) * embed_mult[j] % parent.factors()[i];
  }
  return parent.make(std::move(r));
}

Element SylowComponent::project(const Element& a) const {
  parent.require_element(a);
  std::vector<int64_t> r(component.rank());
  for (size_t j = 0; j < component.rank(); ++j)
    r[j] = a.r[parent_factor[j]] % component.factors()[j];
  return Element{std::move(r)};
}

std::vector<SylowComponent> sylow_decompose(const AbelianGroup& g) {
  std::map<int64_t, SylowComponent> comps;
  for (size_t i = 0; i < g.rank(); ++i) {
    for (auto [p, e] : factorize(g.factors()[i])) {
      int64_t pe = 1;
      for (int k = 0; k < e; ++k) pe *= p;
      SylowComponent& c = comps.try_emplace(p).first->second;
      c.prime = p;
      c.parent_factor.push_back(i);
      int64_t m = g.factors()[i] / pe;  // coprime cofactor
      int64_t u = (m * mod_inv(m % pe, pe)) % g.factors()[i];
      c.embed_mult.push_back(u);
      std::vector<int64_t> f = c.component.factors();
      f.push_back(pe);
      c.component = AbelianGroup(std::move(f));
    }
  }
  std::vector<SylowComponent> out;
  for (auto& [p, c] : comps) {
    c.parent = g;
    out.push_back(std::move(c));
  }
  return out;
}

Element Homomorphism::apply(const Element& a) const {
  domain.require_element(a);
  Element acc = codomain.identity();
  for (size_t i = 0; i < domain.rank(); ++i)
    if (a.r[i]) acc = codomain.add(acc, codomain.mul(gen_images[i], a.r[i]));
  return acc;
}

bool Homomorphism::is_identity() const {
  if (!(domain == codomain)) return false;
  for (size_t i = 0; i < domain.rank(); ++i)
    if (!(gen_images[i] == domain.generator(i))) return false;
  return true;
}

std::string Homomorphism::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < gen_images.size(); ++i) {
    if (i) os << ", ";
    os << "e" << i + 1 << "->" << element_str(gen_images[i]);
  }
  os << "]";
  return os.str();
}

namespace {

// Extends a partial injective span by n copies of image g; returns false if
// the extended map would not be injective.
bool expand_span(const AbelianGroup& g, std::vector<bool>& mem, std::vector<size_t>& span,
                 const Element& img, int64_t n) {
  size_t base = span.size();
  Element step = img;
  for (int64_t k = 1; k < n; ++k) {
    for (size_t i = 0; i < base; ++i) {
      Element y = g.add(g.element(span[i]), step);
      size_t idx = g.index_of(y);
      if (mem[idx]) return false;
      mem[idx] = true;
      span.push_back(idx);
    }
    step = g.add(step, img);
  }
  return true;
}

void aut_search(const AbelianGroup& g, size_t level, std::vector<Element>& images,
                std::vector<bool>& mem, std::vector<size_t>& span,
                std::vector<Homomorphism>& out) {
  if (level == g.rank()) {
    out.push_back(Homomorphism{g, g, images});
    return;
  }
  int64_t n = g.factors()[level];
  for (int64_t c = 0; c < g.order(); ++c) {
    Element cand = g.element(c);
    if (g.element_order(cand) != n) continue;  // automorphisms preserve orders
    std::vector<bool> mem2 = mem;
    std::vector<size_t> span2 = span;
    if (!expand_span(g, mem2, span2, cand, n)) continue;
    images.push_back(std::move(cand));
    aut_search(g, level + 1, images, mem2, span2, out);
    images.pop_back();
  }
}

}  // namespace

std::vector<Homomorphism> automorphisms(const AbelianGroup& g, int64_t bound) {
  if (g.order() > bound)
    throw BoundError("automorphisms: |A| = " + std::to_string(g.order()) +
                     " exceeds the brute-force bound " + std::to_string(bound) +
                     " (raise with --bound-aut)");
  std::vector<Homomorphism> out;
  std::vector<Element> images;
  std::vector<bool> mem(g.order(), false);
  mem[g.index_of(g.identity())] = true;
  std::vector<size_t> span{g.index_of(g.identity())};
  aut_search(g, 0, images, mem, span, out);
  return out;
}

int64_t character_exponent(const AbelianGroup& g, const Element& b, const Element& a) {
  g.require_element(a);
  g.require_element(b);
  int64_t N = g.exponent();
  int64_t e = 0;
  for (size_t i = 0; i < g.rank(); ++i)
    e = (e + a.r[i] * b.r[i] % N * (N / g.factors()[i])) % N;
  return e;
}

std::vector<std::vector<Cyclotomic>> character_tables(const AbelianGroup& g) {
  int64_t N = g.exponent();
  std::vector<Cyclotomic> zpow(N, Cyclotomic(Rat(1)));
  for (int64_t e = 1; e < N; ++e) zpow[e] = Cyclotomic::root_of_unity(N, e);
  std::vector<std::vector<Cyclotomic>> out;
  out.reserve(g.order());
  for (int64_t bi = 0; bi < g.order(); ++bi) {
    Element b = g.element(bi);
    std::vector<Cyclotomic> table;
    table.reserve(g.order());
    for (int64_t ai = 0; ai < g.order(); ++ai)
      table.push_back(zpow[character_exponent(g, b, g.element(ai))]);
    out.push_back(std::move(table));
  }
  return out;
}

namespace {

int64_t concrete_order(const ConcreteGroup& cg, size_t x) {
  int64_t ord = 1;
  size_t acc = x;
  while (acc != cg.identity) {
    acc = cg.add(acc, x);
    ++ord;
  }
  return ord;
}

// Divisor chains m_1 | ... with m_1 = exponent, m_{i+1} | m_i, product = n.
void chain_candidates(int64_t remaining, int64_t prev, std::vector<int64_t>& cur,
                      std::vector<std::vector<int64_t>>& out) {
  if (remaining == 1) {
    out.push_back(cur);
    return;
  }
  for (int64_t d : divisors(gcd64(remaining, prev))) {
    if (d < 2) continue;
    cur.push_back(d);
    chain_candidates(remaining / d, d, cur, out);
    cur.pop_back();
  }
}

bool concrete_gen_search(const ConcreteGroup& cg, const std::vector<int64_t>& orders,
                         const std::vector<int64_t>& chain, size_t level,
                         std::vector<size_t>& gens, std::vector<bool>& mem,
                         std::vector<size_t>& span) {
  if (level == chain.size()) return true;
  int64_t m = chain[level];
  for (size_t c = 0; c < cg.size; ++c) {
    if (orders[c] != m) continue;
    std::vector<bool> mem2 = mem;
    std::vector<size_t> span2 = span;
    bool ok = true;
    size_t base = span2.size();
    size_t step = c;
    for (int64_t k = 1; k < m && ok; ++k) {
      for (size_t i = 0; i < base; ++i) {
        size_t y = cg.add(span2[i], step);
        if (mem2[y]) {
          ok = false;
          break;
        }
        mem2[y] = true;
        span2.push_back(y);
      }
      step = cg.add(step, c);
    }
    if (!ok) continue;
    gens.push_back(c);
    if (concrete_gen_search(cg, orders, chain, level + 1, gens, mem2, span2)) return true;
    gens.pop_back();
  }
  return false;
}

}  // namespace

StructureIso decompose_concrete(const ConcreteGroup& cg) {
  StructureIso iso;
  std::vector<int64_t> orders(cg.size);
  int64_t exponent = 1;
  for (size_t x = 0; x < cg.size; ++x) {
    orders[x] = concrete_order(cg, x);
    exponent = lcm64(exponent, orders[x]);
  }
  if (cg.size == 1) {
    iso.abstract = AbelianGroup({1});
    iso.generator_ids = {cg.identity};
    iso.abstract_to_concrete = {cg.identity};
    iso.concrete_to_abstract = {0};
    return iso;
  }

  std::vector<std::vector<int64_t>> chains;
  {
    std::vector<int64_t> cur{exponent};
    chain_candidates(static_cast<int64_t>(cg.size) / exponent, exponent, cur, chains);
  }
  for (const auto& chain : chains) {
    std::vector<size_t> gens;
    std::vector<bool> mem(cg.size, false);
    mem[cg.identity] = true;
    std::vector<size_t> span{cg.identity};
    if (!concrete_gen_search(cg, orders, chain, 0, gens, mem, span)) continue;
    iso.abstract = AbelianGroup(chain);
    iso.generator_ids = gens;
    iso.abstract_to_concrete.assign(cg.size, 0);
    iso.concrete_to_abstract.assign(cg.size, 0);
    for (int64_t i = 0; i < iso.abstract.order(); ++i) {
      Element e = iso.abstract.element(i);
      size_t acc = cg.identity;
      for (size_t j = 0; j < chain.size(); ++j)
        for (int64_t k = 0; k < e.r[j]; ++k) acc = cg.add(acc, gens[j]);
      iso.abstract_to_concrete[i] = acc;
      iso.concrete_to_abstract[acc] = i;
    }
    return iso;
  }
  throw InternalError("decompose_concrete: no invariant-factor chain matched");
}

std::vector<AbelianGroup> groups_of_order(int64_t n) {
  if (n < 1) throw DomainError("groups_of_order: order must be positive");
  // Partitions of each prime exponent, combined across primes.
  std::vector<std::vector<std::vector<int>>> prime_parts;
  std::vector<int64_t> primes;
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
      if (remaining == 0) {
        parts.push_back(cur);
        return;
      }
      for (int k = std::min(remaining, maxpart); k >= 1; --k) {
        cur.push_back(k);
        rec(remaining - k, k);
        cur.pop_back();
      }
    };
    rec(e, e);
    prime_parts.push_back(std::move(parts));
    primes.push_back(p);
  }
  std::vector<AbelianGroup> out;
  std::vector<size_t> choice(prime_parts.size(), 0);
  while (true) {
    // Combine: invariant factor i = prod_p p^{part_p[i]}.
    size_t max_len = 0;
    for (size_t pi = 0; pi < primes.size(); ++pi)
      max_len = std::max(max_len, prime_parts[pi][choice[pi]].size());
    std::vector<int64_t> inv(std::max<size_t>(max_len, 1), 1);
    for (size_t pi = 0; pi < primes.size(); ++pi) {
      const auto& part = prime_parts[pi][choice[pi]];
      for (size_t i = 0; i < part.size(); ++i)
        for (int k = 0; k < part[i]; ++k) inv[i] *= primes[pi];
    }
    out.push_back(AbelianGroup(std::move(inv)));
    size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == prime_parts[pos].size()) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == choice.size()) break;
    if (choice.empty()) break;
  }
  return out;
}

}  // namespace tyind
