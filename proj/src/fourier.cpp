#include "tyind/fourier.hpp"

#include <cmath>

namespace tyind {

GroupFunction::GroupFunction(AbelianGroup group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != static_cast<size_t>(group_.order()))
    throw DomainError("GroupFunction: one value per group element required");
}

GroupFunction GroupFunction::operator+(const GroupFunction& o) const {
  if (!(group_ == o.group_)) throw DomainError("GroupFunction: group mismatch");
  GroupFunction out(group_);
  for (size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] + o.values_[i];
  return out;
}

GroupFunction GroupFunction::operator*(const Cyclotomic& c) const {
  GroupFunction out(group_);
  for (size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] * c;
  return out;
}

GroupFunction GroupFunction::pointwise(const GroupFunction& o) const {
  if (!(group_ == o.group_)) throw DomainError("GroupFunction: group mismatch");
  GroupFunction out(group_);
  for (size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] * o.values_[i];
  return out;
}

Cyclotomic GroupFunction::sum() const {
  Cyclotomic acc{Rat(0)};
  for (const Cyclotomic& v : values_) acc += v;
  return acc;
}

bool ScaledFunction::equals(const ScaledFunction& o) const {
  if (!(fn.group() == o.fn.group())) return false;
  for (size_t i = 0; i < fn.values().size(); ++i)
    if (!at_index(i).equals(o.at_index(i))) return false;
  return true;
}

GroupFunction delta(const AbelianGroup& g, const Element& a) {
  GroupFunction f(g);
  f.set(a, Cyclotomic(Rat(1)));
  return f;
}

GroupFunction constant_fn(const AbelianGroup& g, const Cyclotomic& v) {
  GroupFunction f(g);
  for (int64_t i = 0; i < g.order(); ++i) f.set_index(i, v);
  return f;
}

std::vector<GroupFunction> character_functions(const AbelianGroup& g) {
  std::vector<GroupFunction> out;
  for (auto& table : character_tables(g)) out.emplace_back(g, std::move(table));
  return out;
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  if (!(f.group() == g.group())) throw DomainError("convolve: group mismatch");
  const AbelianGroup& grp = f.group();
  GroupFunction out(grp);
  auto elems = grp.all_elements();
  for (int64_t ai = 0; ai < grp.order(); ++ai) {
    Cyclotomic acc{Rat(0)};
    const Element& a = elems[ai];
    for (int64_t xi = 0; xi < grp.order(); ++xi) {
      if (f.at_index(xi).is_zero()) continue;
      acc += f.at_index(xi) * g.at(grp.add(a, grp.neg(elems[xi])));
    }
    out.set_index(ai, std::move(acc));
  }
  return out;
}

GroupFunction transform_raw(const Bicharacter& chi, const GroupFunction& f, int sign) {
  if (!(chi.group() == f.group())) throw DomainError("transform: group mismatch");
  const AbelianGroup& g = f.group();
  int64_t n = chi.modulus();
  std::vector<Cyclotomic> zpow(n, Cyclotomic(Rat(1)));
  for (int64_t e = 1; e < n; ++e) zpow[e] = Cyclotomic::root_of_unity(n, e);
  auto elems = g.all_elements();
  GroupFunction out(g);
  for (int64_t ai = 0; ai < g.order(); ++ai) {
    Cyclotomic acc{Rat(0)};
    for (int64_t xi = 0; xi < g.order(); ++xi) {
      if (f.at_index(xi).is_zero()) continue;
      int64_t e = chi.eval_exponent(elems[xi], elems[ai]);
      if (sign > 0) e = mod_norm(-e, n);
      acc += f.at_index(xi) * zpow[e];
    }
    out.set_index(ai, std::move(acc));
  }
  return out;
}

ScaledFunction transform(const Bicharacter& chi, const GroupFunction& f) {
  if (!chi.is_symmetric()) throw DomainError("transform: bicharacter must be symmetric");
  return ScaledFunction{transform_raw(chi, f, +1), chi.group().order(), 1};
}

GroupFunction project(const ElementList& k, const GroupFunction& f) {
  const AbelianGroup& g = f.group();
  if (!is_subgroup(g, k)) throw DomainError("project: K is not a subgroup");
  GroupFunction out(g);
  auto elems = g.all_elements();
  Rat inv_k(1, static_cast<unsigned long>(k.size()));
  inv_k.canonicalize();
  for (int64_t ai = 0; ai < g.order(); ++ai) {
    Cyclotomic acc{Rat(0)};
    for (const Element& x : k) acc += f.at(g.add(elems[ai], x));
    out.set_index(ai, acc * inv_k);
  }
  return out;
}

ScaledValue trace_of_transform(const Bicharacter& chi) {
  if (!chi.is_symmetric())
    throw DomainError("trace_of_transform: bicharacter must be symmetric");
  const AbelianGroup& g = chi.group();
  int64_t n = chi.modulus();
  std::vector<int64_t> counts(n, 0);
  for (const Element& a : g.all_elements()) counts[mod_norm(-chi.eval_exponent(a, a), n)]++;
  Cyclotomic acc{Rat(0)};
  for (int64_t e = 0; e < n; ++e)
    if (counts[e]) acc += Cyclotomic::root_of_unity(n, e) * Rat(counts[e]);
  return {std::move(acc), g.order(), 1};
}

TraceParity trace_parity(const Bicharacter& chi) {
  const AbelianGroup& g = chi.group();
  ElementList j = chi.radical();
  Quotient q(g, j);
  int64_t square_fixed = 0;
  for (const Element& rep : q.reps())
    if (q.rep_position(g.add(rep, rep)) == q.rep_position(g.identity())) ++square_fixed;
  int64_t m = static_cast<int64_t>(q.size());
  TraceParity tp;
  tp.d_plus = (m + square_fixed) / 2;
  tp.d_minus = (m - square_fixed) / 2;

  ScaledValue trace = trace_of_transform(chi);
  int64_t jj = static_cast<int64_t>(j.size());
  // Float image proposes n_{+-}; exact arithmetic verifies them.
  std::complex<double> guide =
      trace.num().to_complex() / std::sqrt(static_cast<double>(g.order() * jj));
  tp.n_plus = std::llround(guide.real());
  tp.n_minus = std::llround(guide.imag());
  Cyclotomic expect = embed_sqrt(g.order() * jj) *
                      (Cyclotomic(tp.n_plus) +
                       Cyclotomic::root_of_unity(4, 1) * Rat(tp.n_minus));
  if (!(expect == trace.num()))
    throw InternalError("trace_parity: exact identity failed after rounding");
  if (mod_norm(tp.n_plus - tp.d_plus, 2) != 0 || mod_norm(tp.n_minus - tp.d_minus, 2) != 0)
    throw InternalError("trace_parity: parity congruence violated");
  return tp;
}

}  // namespace tyind
