#include "doctest.h"

#include "tyind/bicharacter.hpp"

using namespace tyind;

namespace {

// (1/|A|) sum_a chi(a, z), which Eq-style orthogonality says is 0 or 1.
Cyclotomic radical_indicator(const Bicharacter& chi, const Element& z) {
  Cyclotomic sum{Rat(0)};
  for (const Element& a : chi.group().all_elements()) sum += chi.eval(a, z);
  return sum * Rat(1, chi.group().order());
}

std::vector<Bicharacter> symmetric_corpus() {
  return {
      Bicharacter::cyclic(2, 1),
      Bicharacter::cyclic(3, 1),
      Bicharacter::cyclic(4, 1),
      Bicharacter::cyclic(4, 2),
      Bicharacter::cyclic(5, 1),
      Bicharacter::cyclic(8, 7),
      Bicharacter::sym(2),
      Bicharacter::alt(2),
      Bicharacter::trivial(AbelianGroup({2, 2})),
      Bicharacter(AbelianGroup({2, 2}), {{1, 0}, {0, 0}}),
      Bicharacter(AbelianGroup({4, 2}), {{1, 2}, {2, 2}}),
      Bicharacter(AbelianGroup({6}), {{1}}),
      Bicharacter::diag(3, {1, 2}),
  };
}

}  // namespace

TEST_CASE("construction validates divisibility") {
  CHECK_THROWS_WITH_AS(Bicharacter(AbelianGroup({4, 2}), {{1, 1}, {1, 0}}),
                       doctest::Contains("divisibility"), DomainError);
  CHECK_NOTHROW(Bicharacter(AbelianGroup({4, 2}), {{1, 2}, {2, 2}}));
  CHECK_NOTHROW(Bicharacter(AbelianGroup({1}), {{0}}));
}

TEST_CASE("evaluation") {
  Bicharacter c3 = Bicharacter::cyclic(3, 1);
  AbelianGroup z3({3});
  CHECK(c3.eval(z3.make({1}), z3.make({2})) == Cyclotomic::root_of_unity(3, 2));
  CHECK(c3.eval(z3.identity(), z3.make({2})) == Cyclotomic(1));

  Bicharacter alt = Bicharacter::alt(2);
  AbelianGroup f22({2, 2});
  CHECK(alt.eval(f22.make({1, 0}), f22.make({0, 1})) == Cyclotomic(-1));
  CHECK(alt.eval(f22.make({1, 0}), f22.make({1, 0})) == Cyclotomic(1));

  // chi(a,b) has order dividing gcd(order(a), order(b)).
  for (const Bicharacter& chi : symmetric_corpus()) {
    const AbelianGroup& g = chi.group();
    for (const Element& a : g.all_elements())
      for (const Element& b : g.all_elements()) {
        int64_t d = gcd64(g.element_order(a), g.element_order(b));
        CHECK(chi.eval(a, b).pow(d) == Cyclotomic(1));
      }
  }
}

TEST_CASE("symmetry and alternation") {
  CHECK(Bicharacter::alt(2).is_alternating());
  CHECK(Bicharacter::alt(2).is_symmetric());
  CHECK(!Bicharacter::sym(2).is_alternating());
  CHECK(Bicharacter::sym(2).is_symmetric());
  Bicharacter zero = Bicharacter::trivial(AbelianGroup({2, 2}));
  CHECK(zero.is_symmetric());
  CHECK(zero.is_alternating());
  CHECK(!Bicharacter(AbelianGroup({3, 3}), {{0, 1}, {2, 0}}).is_symmetric());
}

TEST_CASE("radical and the orthogonality dichotomy") {
  AbelianGroup f22({2, 2});
  Bicharacter chi(f22, {{1, 0}, {0, 0}});
  ElementList rad = chi.radical();
  CHECK(rad == ElementList{f22.make({0, 0}), f22.make({0, 1})});
  CHECK(!chi.is_nondegenerate());

  CHECK(Bicharacter::alt(2).radical().size() == 1);
  CHECK(Bicharacter::alt(2).is_nondegenerate());
  CHECK(Bicharacter::sym(2).is_nondegenerate());
  CHECK(Bicharacter::cyclic(3, 1).is_nondegenerate());
  CHECK(!Bicharacter::trivial(AbelianGroup({2})).is_nondegenerate());
  CHECK(Bicharacter::trivial(f22).radical().size() == 4);

  for (const Bicharacter& c : symmetric_corpus()) {
    ElementList rad2 = c.radical();
    CHECK(is_subgroup(c.group(), rad2));
    for (const Element& z : c.group().all_elements()) {
      Cyclotomic ind = radical_indicator(c, z);
      bool in_rad = std::find(rad2.begin(), rad2.end(), z) != rad2.end();
      CHECK(ind == Cyclotomic(in_rad ? 1 : 0));
    }
  }
}

TEST_CASE("descend to radical quotient") {
  // Non-degenerate: quotient has full size.
  Descent d1 = descend_to_quotient(Bicharacter::alt(2));
  CHECK(d1.quotient.size() == 4);
  CHECK(d1.descended.is_nondegenerate());

  // Z2^2 with chi = (-1)^{a1 b1}: quotient Z2 with chi_bar(1,1) = -1.
  AbelianGroup f22({2, 2});
  Descent d2 = descend_to_quotient(Bicharacter(f22, {{1, 0}, {0, 0}}));
  CHECK(d2.structure.abstract.order() == 2);
  CHECK(d2.descended.eval(d2.structure.abstract.make({1}), d2.structure.abstract.make({1})) ==
        Cyclotomic(-1));

  Descent d3 = descend_to_quotient(Bicharacter::trivial(f22));
  CHECK(d3.structure.abstract.order() == 1);

  // chi_bar agrees with chi on transversal representatives.
  Bicharacter chi(AbelianGroup({4, 2}), {{2, 0}, {0, 2}});
  Descent d = descend_to_quotient(chi);
  const AbelianGroup& q = d.structure.abstract;
  for (const Element& x : q.all_elements())
    for (const Element& y : q.all_elements())
      CHECK(d.descended.eval(x, y) == chi.eval(d.rep_of(x), d.rep_of(y)));
}

TEST_CASE("galois twist and the square lemma") {
  Bicharacter c5 = Bicharacter::cyclic(5, 1);
  CHECK(c5.galois_twist(1) == c5);
  Bicharacter t2 = c5.galois_twist(2);
  CHECK(t2.matrix()[0][0] == 2);
  CHECK(!is_isometric(PseudoMetricGroup(c5), PseudoMetricGroup(t2)).has_value());
  Bicharacter t4 = t2.galois_twist(2);
  auto wit = is_isometric(PseudoMetricGroup(c5), PseudoMetricGroup(t4));
  REQUIRE(wit.has_value());
  CHECK(wit->gen_images[0] == AbelianGroup({5}).make({2}));

  for (const Bicharacter& chi : symmetric_corpus()) {
    int64_t n = chi.modulus();
    for (int64_t s = 1; s < n; ++s) {
      if (gcd64(s, n) != 1) continue;
      CHECK(is_isometric(PseudoMetricGroup(chi),
                         PseudoMetricGroup(chi.galois_twist(s * s % n)))
                .has_value());
    }
  }
}

TEST_CASE("isometry search") {
  // Reflexive with a verified witness.
  for (const Bicharacter& chi : symmetric_corpus()) {
    PseudoMetricGroup p(chi);
    auto wit = is_isometric(p, p);
    REQUIRE(wit.has_value());
    const AbelianGroup& g = chi.group();
    for (const Element& a : g.all_elements())
      for (const Element& b : g.all_elements())
        CHECK(chi.eval_exponent(wit->apply(a), wit->apply(b)) == chi.eval_exponent(a, b));
  }

  CHECK(!is_isometric(PseudoMetricGroup(Bicharacter::sym(2)),
                      PseudoMetricGroup(Bicharacter::alt(2)))
             .has_value());
  CHECK(!is_isometric(PseudoMetricGroup(Bicharacter::diag(3, {1, 1})),
                      PseudoMetricGroup(Bicharacter::diag(3, {1, 2})))
             .has_value());
  CHECK(is_isometric(PseudoMetricGroup(Bicharacter::diag(3, {1, 2})),
                     PseudoMetricGroup(Bicharacter::diag(3, {2, 1})))
            .has_value());

  // Symmetric relation on a sample pair.
  PseudoMetricGroup a(Bicharacter::cyclic(8, 1)), b(Bicharacter::cyclic(8, 7));
  CHECK(is_isometric(a, b).has_value() == is_isometric(b, a).has_value());
}

TEST_CASE("product decomposition") {
  Bicharacter c6(AbelianGroup({6}), {{1}});
  auto parts = product_decompose(PseudoMetricGroup(c6));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].sylow.prime == 2);
  CHECK(parts[0].chi.group().factors() == std::vector<int64_t>{2});
  CHECK(parts[1].sylow.prime == 3);

  auto single = product_decompose(PseudoMetricGroup(Bicharacter::cyclic(4, 1)));
  CHECK(single.size() == 1);

  // chi equals the product of its restrictions on all pairs.
  for (const Bicharacter& chi :
       {c6, Bicharacter(AbelianGroup({12}), {{5}}), Bicharacter(AbelianGroup({6, 2}),
                                                                {{1, 3}, {3, 3}})}) {
    auto ps = product_decompose(PseudoMetricGroup(chi));
    for (const Element& x : chi.group().all_elements())
      for (const Element& y : chi.group().all_elements()) {
        Cyclotomic prod{Rat(1)};
        for (const auto& part : ps)
          prod *= part.chi.eval(part.sylow.project(x), part.sylow.project(y));
        CHECK(prod == chi.eval(x, y));
        // Cross-component pairings are trivial.
      }
  }
}

TEST_CASE("json io") {
  Bicharacter chi(AbelianGroup({4, 2}), {{1, 2}, {2, 2}});
  Bicharacter back = Bicharacter::from_json(chi.to_json());
  CHECK(back == chi);

  Bicharacter named = Bicharacter::from_json(R"({"group":[2,2],"named":"alt"})");
  CHECK(named == Bicharacter::alt(2));
  Bicharacter diag = Bicharacter::from_json(R"({"group":[3,3],"named":{"diag":[1,2]}})");
  CHECK(diag == Bicharacter::diag(3, {1, 2}));
  Bicharacter cyc = Bicharacter::from_json(R"({"group":[8],"named":{"cyclic":-1}})");
  CHECK(cyc == Bicharacter::cyclic(8, -1));

  // Rescaled zeta: entries as powers of zeta_4 over Z2^2.
  Bicharacter scaled =
      Bicharacter::from_json(R"({"group":[2,2],"zeta":4,"matrix":[[2,0],[0,2]]})");
  CHECK(scaled == Bicharacter::sym(2));

  CHECK_THROWS_AS(Bicharacter::from_json(R"({"group":[2],"zeta":4,"matrix":[[1]]})"),
                  DomainError);
  CHECK_THROWS_AS(Bicharacter::from_json("{"), ParseError);
  CHECK_THROWS_AS(Bicharacter::from_json(R"({"group":[2,2]})"), ParseError);

  CHECK(Bicharacter::from_spec(AbelianGroup({2, 2}), "sym") == Bicharacter::sym(2));
  CHECK(Bicharacter::from_spec(AbelianGroup({8}), "cyclic:-1") == Bicharacter::cyclic(8, 7));
  CHECK(Bicharacter::from_spec(AbelianGroup({3, 3}), "diag:1,2") ==
        Bicharacter::diag(3, {1, 2}));
  CHECK_THROWS_AS(Bicharacter::from_spec(AbelianGroup({4}), "what"), ParseError);
}
