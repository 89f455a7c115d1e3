#include "doctest.h"

#include <random>

#include "tyind/fourier.hpp"

using namespace tyind;

namespace {

GroupFunction random_fn(const AbelianGroup& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  GroupFunction f(g);
  int64_t n = g.exponent();
  for (int64_t i = 0; i < g.order(); ++i) {
    Cyclotomic v{Rat(num(rng))};
    if (n > 1) v += Cyclotomic::root_of_unity(n, mod_norm(num(rng), n)) * Rat(num(rng));
    f.set_index(i, std::move(v));
  }
  return f;
}

std::vector<Bicharacter> corpus() {
  return {
      Bicharacter::cyclic(2, 1),
      Bicharacter::cyclic(3, 1),
      Bicharacter::cyclic(5, 1),
      Bicharacter::cyclic(8, 7),
      Bicharacter::sym(2),
      Bicharacter::alt(2),
      Bicharacter::trivial(AbelianGroup({2})),
      Bicharacter(AbelianGroup({2, 2}), {{1, 0}, {0, 0}}),
      Bicharacter(AbelianGroup({4, 2}), {{2, 0}, {0, 2}}),
      Bicharacter(AbelianGroup({6}), {{2}}),
      Bicharacter(AbelianGroup({3, 3}), {{1, 0}, {0, 0}}),
  };
}

}  // namespace

TEST_CASE("characters as group functions") {
  AbelianGroup g({3, 2});
  auto chars = character_functions(g);
  REQUIRE(chars.size() == 6);
  for (const GroupFunction& lam : chars)
    for (const Element& a : g.all_elements())
      for (const Element& b : g.all_elements())
        CHECK(lam.at(g.add(a, b)) == lam.at(a) * lam.at(b));
}

TEST_CASE("delta functions") {
  AbelianGroup g({4, 2});
  GroupFunction d0 = delta(g, g.identity());
  CHECK(d0.at(g.identity()) == Cyclotomic(1));
  CHECK(d0.at(g.make({1, 0})) == Cyclotomic(0));
  GroupFunction sum(g);
  for (const Element& a : g.all_elements()) sum = sum + delta(g, a);
  CHECK(sum == constant_fn(g, Cyclotomic(1)));
}

TEST_CASE("convolution basics") {
  AbelianGroup g({4, 2});
  std::mt19937 rng(5);
  GroupFunction f = random_fn(g, rng);
  CHECK(convolve(f, delta(g, g.identity())) == f);
  Element a = g.make({3, 1}), b = g.make({2, 1});
  CHECK(convolve(delta(g, a), delta(g, b)) == delta(g, g.add(a, b)));

  AbelianGroup z2({2});
  GroupFunction u(z2, {Cyclotomic(1), Cyclotomic(1)});
  GroupFunction v(z2, {Cyclotomic(1), Cyclotomic(-1)});
  CHECK(convolve(u, v) == GroupFunction(z2, {Cyclotomic(0), Cyclotomic(0)}));

  GroupFunction h = random_fn(g, rng);
  CHECK(convolve(f, h) == convolve(h, f));
  GroupFunction k = random_fn(g, rng);
  CHECK(convolve(convolve(f, h), k) == convolve(f, convolve(h, k)));
}

TEST_CASE("transform of delta and bijectivity for non-degenerate chi") {
  Bicharacter chi = Bicharacter::sym(2);
  const AbelianGroup& g = chi.group();
  ScaledFunction t = transform(chi, delta(g, g.identity()));
  CHECK(t.base == 4);
  CHECK(t.half_power == 1);
  CHECK(t.fn == constant_fn(g, Cyclotomic(1)));

  // Inverse kernel undoes the forward kernel up to |A|.
  std::mt19937 rng(23);
  for (const Bicharacter& c : {Bicharacter::sym(2), Bicharacter::cyclic(5, 2),
                               Bicharacter::cyclic(8, 7), Bicharacter::alt(2)}) {
    GroupFunction f = random_fn(c.group(), rng);
    GroupFunction round = transform_raw(c, transform_raw(c, f, +1), -1);
    CHECK(round == f * Cyclotomic(c.group().order()));
  }
}

TEST_CASE("convolution theorem, exactly") {
  std::mt19937 rng(31);
  for (const Bicharacter& chi : corpus()) {
    for (int trial = 0; trial < 4; ++trial) {
      GroupFunction f = random_fn(chi.group(), rng);
      GroupFunction g = random_fn(chi.group(), rng);
      // raw(f*g) = raw(f) raw(g) pointwise encodes Eq-level exactness.
      CHECK(transform_raw(chi, convolve(f, g)) ==
            transform_raw(chi, f).pointwise(transform_raw(chi, g)));
    }
  }
}

TEST_CASE("projection operator") {
  AbelianGroup g({4, 2});
  std::mt19937 rng(41);
  GroupFunction f = random_fn(g, rng);
  CHECK(project({g.identity()}, f) == f);

  GroupFunction pa = project(g.all_elements(), f);
  Cyclotomic mean = f.sum() * Rat(1, g.order());
  CHECK(pa == constant_fn(g, mean));

  ElementList k = subgroup_closure(g, {g.make({2, 0})});
  GroupFunction p1 = project(k, f);
  CHECK(project(k, p1) == p1);
  CHECK_THROWS_AS(project({g.make({1, 0})}, f), DomainError);
}

TEST_CASE("factorization through the radical quotient") {
  std::mt19937 rng(43);
  for (const Bicharacter& chi : corpus()) {
    Descent d = descend_to_quotient(chi);
    const AbelianGroup& g = chi.group();
    int64_t jsz = static_cast<int64_t>(chi.radical().size());
    GroupFunction f = random_fn(g, rng);
    GroupFunction pf = project(chi.radical(), f);
    // g_bar on the abstract quotient.
    GroupFunction fbar(d.structure.abstract);
    for (const Element& x : d.structure.abstract.all_elements())
      fbar.set(x, pf.at(d.rep_of(x)));
    GroupFunction lhs = transform_raw(chi, f);
    GroupFunction rhs = transform_raw(d.descended, fbar);
    for (const Element& a : g.all_elements())
      CHECK(lhs.at(a) == rhs.at(d.abstract_of(a)) * Rat(jsz));
  }
}

TEST_CASE("square law on the delta basis") {
  for (const Bicharacter& chi : corpus()) {
    const AbelianGroup& g = chi.group();
    int64_t jsz = static_cast<int64_t>(chi.radical().size());
    Rat scale(g.order() * jsz);
    for (const Element& b : g.all_elements()) {
      GroupFunction f = delta(g, b);
      GroupFunction ff = transform_raw(chi, transform_raw(chi, f));
      GroupFunction pj = project(chi.radical(), f);
      for (const Element& a : g.all_elements())
        CHECK(ff.at(a) == pj.at(g.neg(a)) * Cyclotomic(scale));
    }
  }
}

TEST_CASE("image dimension equals |A/J|") {
  // Gaussian elimination over the cyclotomic field on the kernel matrix.
  for (const Bicharacter& chi : corpus()) {
    const AbelianGroup& g = chi.group();
    if (g.order() > 9) continue;
    auto elems = g.all_elements();
    size_t n = elems.size();
    std::vector<std::vector<Cyclotomic>> m(n, std::vector<Cyclotomic>(n, Cyclotomic(Rat(0))));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        m[i][j] = chi.eval(elems[i], elems[j]).inv();
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < n; ++col) {
      size_t piv = rank;
      while (piv < n && m[piv][col].is_zero()) ++piv;
      if (piv == n) continue;
      std::swap(m[rank], m[piv]);
      Cyclotomic inv = m[rank][col].inv();
      for (size_t j = 0; j < n; ++j) m[rank][j] *= inv;
      for (size_t i = 0; i < n; ++i) {
        if (i == rank || m[i][col].is_zero()) continue;
        Cyclotomic f = m[i][col];
        for (size_t j = 0; j < n; ++j) m[i][j] -= f * m[rank][j];
      }
      ++rank;
    }
    CHECK(rank == n / chi.radical().size());
    CHECK((rank == n) == chi.is_nondegenerate());
  }
}

TEST_CASE("trace of the transform") {
  ScaledValue t3 = trace_of_transform(Bicharacter::cyclic(3, 1));
  CHECK(t3.equals(ScaledValue(-Cyclotomic::root_of_unity(4, 1))));  // -i

  ScaledValue t2 = trace_of_transform(Bicharacter::cyclic(2, 1));
  CHECK(t2.is_zero());

  AbelianGroup g({2, 2});
  ScaledValue ttriv = trace_of_transform(Bicharacter::trivial(g));
  CHECK(ttriv.equals(ScaledValue(embed_sqrt(4))));
}

TEST_CASE("trace parity theorem") {
  TraceParity p5 = trace_parity(Bicharacter::cyclic(5, 1));
  CHECK(p5.n_plus == 1);
  CHECK(p5.n_minus == 0);
  CHECK(p5.n_plus % 2 == 1);  // |A/J| = 5 = 1 mod 4

  TraceParity p3 = trace_parity(Bicharacter::cyclic(3, 1));
  CHECK(p3.n_plus == 0);
  CHECK(p3.n_minus == -1);

  TraceParity pt = trace_parity(Bicharacter::trivial(AbelianGroup({2})));
  CHECK(pt.n_plus == 1);
  CHECK(pt.n_minus == 0);
  CHECK(pt.d_plus == 1);
  CHECK(pt.d_minus == 0);

  // Congruences hold on the whole corpus, including degenerate cases;
  // trace_parity throws InternalError if they ever fail.
  for (const Bicharacter& chi : corpus()) {
    TraceParity tp = trace_parity(chi);
    CHECK(mod_norm(tp.n_plus - tp.d_plus, 2) == 0);
    CHECK(mod_norm(tp.n_minus - tp.d_minus, 2) == 0);
  }
}
