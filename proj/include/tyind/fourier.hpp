#pragma once

#include <vector>

#include "tyind/bicharacter.hpp"

namespace tyind {

// A total map A -> Q(zeta), stored densely by enumeration index.
class GroupFunction {
 public:
  explicit GroupFunction(AbelianGroup group)
      : group_(std::move(group)),
        values_(static_cast<size_t>(group_.order()), Cyclotomic(Rat(0))) {}
  GroupFunction(AbelianGroup group, std::vector<Cyclotomic> values);

  const AbelianGroup& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& at(const Element& e) const { return values_[group_.index_of(e)]; }
  const Cyclotomic& at_index(size_t i) const { return values_[i]; }
  void set(const Element& e, Cyclotomic v) { values_[group_.index_of(e)] = std::move(v); }
  void set_index(size_t i, Cyclotomic v) { values_[i] = std::move(v); }

  bool operator==(const GroupFunction& o) const {
    return group_ == o.group_ && values_ == o.values_;
  }

  GroupFunction operator+(const GroupFunction& o) const;
  GroupFunction operator*(const Cyclotomic& c) const;
  GroupFunction pointwise(const GroupFunction& o) const;
  Cyclotomic sum() const;

 private:
  AbelianGroup group_;
  std::vector<Cyclotomic> values_;
};

// fn * base^{-half_power/2}, pointwise.
struct ScaledFunction {
  GroupFunction fn;
  int64_t base = 1;
  int64_t half_power = 0;

  ScaledValue at(const Element& e) const { return {fn.at(e), base, half_power}; }
  ScaledValue at_index(size_t i) const { return {fn.at_index(i), base, half_power}; }
  bool equals(const ScaledFunction& o) const;
};

GroupFunction delta(const AbelianGroup& g, const Element& a);
GroupFunction constant_fn(const AbelianGroup& g, const Cyclotomic& v);

// The |A| characters lambda_b as group functions, in enumeration order of b.
std::vector<GroupFunction> character_functions(const AbelianGroup& g);

// (f * g)(a) = sum_x f(x) g(a - x); same group required.
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);

// sum_x f(x) chi(x, a)^{-sign}: the unscaled transform kernel. sign = +1 is
// the forward kernel chi^{-1}, sign = -1 the inverse kernel chi^{+1}.
GroupFunction transform_raw(const Bicharacter& chi, const GroupFunction& f, int sign = +1);

// F_chi(f) = transform_raw / sqrt(|A|); chi must be symmetric.
ScaledFunction transform(const Bicharacter& chi, const GroupFunction& f);

// P_K(f)(a) = (1/|K|) sum_{x in K} f(a + x); K must be a subgroup.
GroupFunction project(const ElementList& k, const GroupFunction& f);

// Trace(F_chi) = (1/sqrt|A|) sum_a chi(a,a)^{-1}.
ScaledValue trace_of_transform(const Bicharacter& chi);

// Trace(F_chi) = sqrt(|J|) (n_+ + n_- i) with n_{+-} = d_{+-} mod 2, where
// d_{+-} = (|A/J| +- #{a in A/J : 2a = 0})/2. The float image only proposes
// n_{+-}; the identity is then verified exactly.
struct TraceParity {
  int64_t n_plus = 0;
  int64_t n_minus = 0;
  int64_t d_plus = 0;
  int64_t d_minus = 0;
};
TraceParity trace_parity(const Bicharacter& chi);

}  // namespace tyind
