#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tyind/abelian.hpp"
#include "tyind/cyclotomic.hpp"

namespace tyind {

// A bicharacter chi: A x A -> C^x presented by an integer matrix C over Z_N
// (N the exponent of A), chi(e_i, e_j) = zeta_N^{C_ij}. Well-definedness
// demands lcm(N/n_i, N/n_j) | C_ij; the constructor enforces it entry by
// entry so invalid matrices fail loudly with the violated constraint named.
class Bicharacter {
 public:
  Bicharacter(AbelianGroup group, std::vector<std::vector<int64_t>> matrix);

  static Bicharacter trivial(AbelianGroup group);
  // F_p^r with diagonal form diag(a_1..a_r), p an odd prime.
  static Bicharacter diag(int64_t p, const std::vector<int64_t>& entries);
  // F_2^r with B_sym(e_i, e_j) = delta_ij.
  static Bicharacter sym(size_t r);
  // F_2^r hyperbolic form, r even.
  static Bicharacter alt(size_t r);
  // Z_N with chi(i, j) = zeta_N^{c i j}.
  static Bicharacter cyclic(int64_t n, int64_t c);

  // JSON object {"group":[...], "zeta":N, "matrix":[[...]]} or
  // {"group":[...], "named":"alt"|"sym"|{"diag":[...]}|{"cyclic":c}}.
  static Bicharacter from_json(const std::string& json_text);
  // CLI shorthand against a known group: "alt", "sym", "diag:1,2",
  // "cyclic:-1", or inline JSON (group field optional, checked if present).
  static Bicharacter from_spec(const AbelianGroup& group, const std::string& spec);
  std::string to_json() const;

  const AbelianGroup& group() const { return group_; }
  int64_t modulus() const { return n_; }  // exponent of the group
  const std::vector<std::vector<int64_t>>& matrix() const { return mat_; }

  // Exponent e with chi(a, b) = zeta_N^e, canonical in [0, N).
  int64_t eval_exponent(const Element& a, const Element& b) const;
  Cyclotomic eval(const Element& a, const Element& b) const;

  bool is_symmetric() const;   // matrix test plus full pair verification
  bool is_alternating() const;

  ElementList radical() const;  // requires symmetric
  bool is_nondegenerate() const;

  Bicharacter galois_twist(int64_t s) const;  // matrix s*C mod N

  bool operator==(const Bicharacter& o) const {
    return group_ == o.group_ && mat_ == o.mat_;
  }

 private:
  AbelianGroup group_;
  int64_t n_;  // exponent, matrix entries live in Z_n
  std::vector<std::vector<int64_t>> mat_;
};

// The pair (A, chi) with chi symmetric.
class PseudoMetricGroup {
 public:
  explicit PseudoMetricGroup(Bicharacter chi);

  const Bicharacter& chi() const { return chi_; }
  const AbelianGroup& group() const { return chi_.group(); }

 private:
  Bicharacter chi_;
};

// The radical quotient A/J with an abstract presentation of A/J and the
// induced non-degenerate bicharacter on it.
struct Descent {
  Quotient quotient;        // A/J with deterministic transversal
  StructureIso structure;   // invariant-factor presentation of A/J
  Bicharacter descended;    // on structure.abstract

  // Coset representative realizing an abstract element.
  const Element& rep_of(const Element& abstract_elem) const;
  // Abstract element of a parent-group element's coset.
  Element abstract_of(const Element& parent_elem) const;
};

Descent descend_to_quotient(const Bicharacter& chi);

// First isometry (A, chi) -> (A', chi') in enumeration order, or nullopt.
// Brute force over generator images with pruning on partial chi-constraints.
std::optional<Homomorphism> is_isometric(const PseudoMetricGroup& p,
                                         const PseudoMetricGroup& q,
                                         int64_t bound = 64);

// Sylow components with the restricted bicharacters.
struct PrimaryPart {
  SylowComponent sylow;
  Bicharacter chi;  // on sylow.component
};
std::vector<PrimaryPart> product_decompose(const PseudoMetricGroup& p);

}  // namespace tyind
