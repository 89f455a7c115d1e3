#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tyind/cyclotomic.hpp"
#include "tyind/numtheory.hpp"

namespace tyind {

// An element of a finite abelian group, as a tuple of canonical residues.
struct Element {
  std::vector<int64_t> r;

  bool operator==(const Element& o) const = default;
  auto operator<=>(const Element& o) const = default;
};

std::string element_str(const Element& e);

// A finite abelian group presented as a product of cyclic factors Z_{n_1} x
// ... x Z_{n_r}. Isomorphic presentations are distinct values; use
// canonical_form() to normalize. Elements enumerate lexicographically.
class AbelianGroup {
 public:
  AbelianGroup() = default;  // trivial group, rank 0
  explicit AbelianGroup(std::vector<int64_t> factors);

  // Grammar: Z<n> atoms joined by 'x', case-insensitive, no whitespace.
  static AbelianGroup parse(const std::string& spec);

  const std::vector<int64_t>& factors() const { return factors_; }
  size_t rank() const { return factors_.size(); }
  int64_t order() const { return order_; }
  int64_t exponent() const { return exponent_; }
  std::string str() const;

  bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

  Element identity() const;
  Element make(std::vector<int64_t> residues) const;  // reduces mod n_i
  Element element(size_t index) const;
  size_t index_of(const Element& e) const;
  std::vector<Element> all_elements() const;

  void require_element(const Element& e) const;  // throws DomainError

  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, int64_t k) const;  // k may be negative or zero
  int64_t element_order(const Element& a) const;

  // A[n] = { a : n*a = 0 } in enumeration order; n = 0 gives all of A.
  std::vector<Element> torsion(int64_t n) const;

  // Generator e_i (1 in position i).
  Element generator(size_t i) const;

  // Invariant-factor presentation m_1, m_2, ... with m_{i+1} | m_i.
  AbelianGroup canonical_form() const;

 private:
  std::vector<int64_t> factors_;
  int64_t order_ = 1;
  int64_t exponent_ = 1;
};

// Subgroups are explicit element lists, sorted by enumeration index.
using ElementList = std::vector<Element>;

bool is_subgroup(const AbelianGroup& g, const ElementList& k);
ElementList subgroup_closure(const AbelianGroup& g, const ElementList& generators);
ElementList sorted_elements(const AbelianGroup& g, ElementList items);

// Coset space A/K with a deterministic transversal: the representative of a
// coset is its first element in enumeration order.
class Quotient {
 public:
  Quotient(AbelianGroup parent, ElementList k);

  const AbelianGroup& parent() const { return parent_; }
  const ElementList& subgroup() const { return k_; }
  const std::vector<Element>& reps() const { return reps_; }
  size_t size() const { return reps_.size(); }

  Element project(const Element& a) const;
  size_t rep_position(const Element& a) const;  // index into reps()

  // Coset-group operations (inputs and outputs are representatives).
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;

 private:
  AbelianGroup parent_;
  ElementList k_;
  std::vector<Element> reps_;
  std::vector<size_t> rep_pos_;  // element index -> position in reps_
};

// One primary component of the Sylow decomposition, with the mutually
// inverse CRT maps.
struct SylowComponent {
  int64_t prime = 2;
  AbelianGroup component;
  AbelianGroup parent;
  std::vector<size_t> parent_factor;  // component factor j sits in parent factor
  std::vector<int64_t> embed_mult;    // CRT section multiplier per factor

  Element embed(const Element& x) const;    // component -> parent
  Element project(const Element& a) const;  // parent -> component
};

std::vector<SylowComponent> sylow_decompose(const AbelianGroup& g);

// A homomorphism between product presentations, stored by generator images.
struct Homomorphism {
  AbelianGroup domain;
  AbelianGroup codomain;
  std::vector<Element> gen_images;

  Element apply(const Element& a) const;
  bool is_identity() const;
  std::string str() const;
};

// All automorphisms by brute force over generator images, in deterministic
// order. Requires |A| <= bound.
std::vector<Homomorphism> automorphisms(const AbelianGroup& g, int64_t bound = 64);

// Characters as cyclotomic value tables: lambda_b(a) = zeta_N^{sum a_i b_i N/n_i},
// indexed by b in enumeration order. Table i holds values by element index.
std::vector<std::vector<Cyclotomic>> character_tables(const AbelianGroup& g);

// Exponent of lambda_b(a) as an integer mod N.
int64_t character_exponent(const AbelianGroup& g, const Element& b, const Element& a);

// --- Abstract structure of concretely presented groups -------------------

// A finite abelian group given by opaque element ids and an addition law;
// used for subquotients (radical quotients, V(sigma)) where no factor
// presentation exists a priori.
struct ConcreteGroup {
  size_t size = 1;
  size_t identity = 0;
  std::function<size_t(size_t, size_t)> add;
};

struct StructureIso {
  AbelianGroup abstract;                     // invariant factors, descending
  std::vector<size_t> generator_ids;         // concrete ids of the generators
  std::vector<size_t> abstract_to_concrete;  // by abstract element index
  std::vector<size_t> concrete_to_abstract;  // inverse permutation
};

// Finds an invariant-factor presentation and an explicit isomorphism by
// generator-image search; intended for groups of desk-scale order.
StructureIso decompose_concrete(const ConcreteGroup& cg);

// All groups of a given order, one per isomorphism class, as invariant-factor
// presentations in deterministic order.
std::vector<AbelianGroup> groups_of_order(int64_t n);

}  // namespace tyind
