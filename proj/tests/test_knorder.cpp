#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "braidorder/knorder.hpp"
#include "braidorder/magnus.hpp"
#include "braidorder/suites.hpp"

using namespace braidorder;

namespace {

struct Fixture {
  std::shared_ptr<const SurfaceGroup> S;
  KnOrder K;

  explicit Fixture(int n, int genus = 1)
      : S(std::make_shared<const SurfaceGroup>(genus)), K(n, S) {}

  SurfaceElem gamma(std::string_view text) const { return S->element(text); }
  FGen f(int i, int j, std::string_view text) const {
    return K.fgen(i, j, gamma(text));
  }
};

}  // namespace

TEST_CASE("fgen validation and equality") {
  Fixture fx(3);
  CHECK_THROWS_AS(fx.K.fgen(2, 2, fx.gamma("1")), std::invalid_argument);
  CHECK_THROWS_AS(fx.K.fgen(0, 2, fx.gamma("1")), std::invalid_argument);
  CHECK_THROWS_AS(fx.K.fgen(1, 4, fx.gamma("1")), std::invalid_argument);

  // Gamma equality is group equality of representatives.
  CHECK(fx.K.fgen_equal(fx.f(1, 2, "w_1 w_2"), fx.f(1, 2, "w_2 w_1")));
  CHECK_FALSE(fx.K.fgen_equal(fx.f(1, 2, "w_1"), fx.f(1, 2, "w_2")));
  CHECK_FALSE(fx.K.fgen_equal(fx.f(1, 2, "1"), fx.f(1, 3, "1")));
}

TEST_CASE("fgen_compare follows the displayed generator order") {
  Fixture fx(3);
  CHECK(fx.K.fgen_compare(fx.f(1, 2, "1"), fx.f(1, 3, "w_1")) ==
        Ordering::less);
  CHECK(fx.K.fgen_compare(fx.f(1, 2, "w_1"), fx.f(1, 2, "w_1")) ==
        Ordering::equal);
  CHECK(fx.K.fgen_compare(fx.f(1, 2, "1"), fx.f(1, 2, "w_1")) ==
        Ordering::less);
  CHECK_THROWS_AS(fx.K.fgen_compare(fx.f(1, 2, "1"), fx.f(2, 3, "1")),
                  std::invalid_argument);
}

TEST_CASE("factor words reduce with semantic letter equality") {
  Fixture fx(3);
  // Same gamma in two spellings: the letters cancel.
  FWord u = fx.K.word({FLetter{fx.f(1, 2, "w_1 w_2"), +1},
                       FLetter{fx.f(1, 2, "w_2 w_1"), -1}});
  CHECK(u.is_identity());

  FWord v = fx.K.word({FLetter{fx.f(1, 2, "w_1"), +1},
                       FLetter{fx.f(1, 3, "w_1"), -1}});
  CHECK(v.letters.size() == 2);
  CHECK(fx.K.multiply(v, fx.K.invert(v)).is_identity());
}

TEST_CASE("factor_compare") {
  Fixture fx(3);
  FWord empty;
  FWord single = fx.K.word({FLetter{fx.f(1, 2, "1"), +1}});
  CHECK(fx.K.factor_compare(empty, single) == Ordering::less);
  CHECK(fx.K.factor_compare(single, single) == Ordering::equal);

  // The element order on single letters extends the generator order.
  FWord low = fx.K.word({FLetter{fx.f(1, 3, "w_1"), +1}});
  FWord high = fx.K.word({FLetter{fx.f(1, 2, "w_2"), +1}});
  CHECK(fx.K.factor_compare(low, high) == Ordering::greater);

  FWord other_family = fx.K.word({FLetter{fx.f(2, 3, "1"), +1}});
  CHECK_THROWS_AS(fx.K.factor_compare(single, other_family),
                  std::invalid_argument);
}

TEST_CASE("kn_compare: greatest differing component decides") {
  Fixture fx(3);
  FWord u = fx.K.word({FLetter{fx.f(1, 2, "1"), +1}});
  FWord u2 = fx.K.word({FLetter{fx.f(1, 3, "1"), +1}});
  FWord v = fx.K.word({FLetter{fx.f(2, 3, "1"), +1}});
  FWord v2 = fx.K.word({FLetter{fx.f(2, 3, "w_1"), +1}});

  KnElement a = fx.K.element({u, v});
  CHECK(fx.K.kn_compare(a, a) == Ordering::equal);

  // Same top component: the first component decides.
  KnElement b = fx.K.element({u2, v});
  CHECK(fx.K.kn_compare(a, b) == fx.K.factor_compare(u, u2));

  // Different top component: it decides regardless of the lower one.
  KnElement c = fx.K.element({u2, v2});
  Ordering top = fx.K.factor_compare(v, v2);
  CHECK(fx.K.kn_compare(a, c) == top);
  KnElement d = fx.K.element({u, v2});
  CHECK(fx.K.kn_compare(a, d) == top);
}

TEST_CASE("component families are validated") {
  Fixture fx(3);
  FWord wrong_family = fx.K.word({FLetter{fx.f(2, 3, "1"), +1}});
  CHECK_THROWS_AS(fx.K.element({wrong_family, FWord{}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fx.K.element({FWord{}}), std::invalid_argument);
}

TEST_CASE("n = 1 is the trivial group") {
  Fixture fx(1);
  CHECK(fx.K.kn_compare(fx.K.identity(), fx.K.identity()) == Ordering::equal);
}

TEST_CASE("psi_action cases") {
  Fixture fx(3);

  // Unrelated strand: fixed.
  FGen fixed = fx.K.psi_action(ActionLabel{1, 1}, fx.f(2, 3, "w_2"));
  CHECK(fx.K.fgen_equal(fixed, fx.f(2, 3, "w_2")));

  // First index matches: gamma gains the wall letter on the left.
  FGen left = fx.K.psi_action(ActionLabel{1, 1}, fx.f(1, 3, "w_2"));
  CHECK(fx.K.fgen_equal(left, fx.f(1, 3, "w_1 w_2")));

  // Second index matches: gamma gains the inverse wall letter on the right.
  FGen right = fx.K.psi_action(ActionLabel{3, 2}, fx.f(1, 3, "w_1"));
  CHECK(fx.K.fgen_equal(right, fx.f(1, 3, "w_1 w_2^-1")));

  CHECK_THROWS_AS(fx.K.psi_action(ActionLabel{4, 1}, fx.f(1, 2, "1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(fx.K.psi_action(ActionLabel{1, 3}, fx.f(1, 2, "1")),
                  std::invalid_argument);
}

TEST_CASE("psi_extend applies letterwise and inverts cleanly") {
  Fixture fx(3);
  FWord u = fx.K.word({FLetter{fx.f(1, 2, "w_1"), +1},
                       FLetter{fx.f(1, 3, "w_2^-1"), -1}});
  FWord v = fx.K.word({FLetter{fx.f(2, 3, "1"), +1}});
  KnElement k = fx.K.element({u, v});

  for (int i = 1; i <= 3; ++i) {
    for (int r = 1; r <= 2; ++r) {
      ActionLabel l{i, r};
      KnElement forward = fx.K.psi_extend(l, k);
      CHECK(fx.K.elements_equal(fx.K.psi_extend(l, forward, true), k));
      CHECK(fx.K.elements_equal(
          fx.K.psi_extend(l, fx.K.psi_extend(l, k, true)), k));
    }
  }

  // A label whose strand avoids every index in play fixes the element.
  Fixture fx4(4);
  FWord w = fx4.K.word({FLetter{fx4.f(1, 2, "w_1"), +1}});
  KnElement k4 = fx4.K.element({w, FWord{}, FWord{}});
  CHECK(fx4.K.elements_equal(fx4.K.psi_extend(ActionLabel{3, 1}, k4), k4));
}

TEST_CASE("psi_action is an order-preserving bijection of each family") {
  Fixture fx(3, 1);
  Rng rng(51);
  std::vector<SurfaceElem> pool{fx.S->identity()};
  for (int t = 0; t < 8; ++t)
    pool.push_back(fx.S->element(
        random_reduced_word(rng, alphabets::surface_w, 2, 3)));

  std::vector<FGen> family;
  for (int j = 2; j <= 3; ++j)
    for (const auto& g : pool) family.push_back(fx.K.fgen(1, j, g));

  for (int i = 1; i <= 3; ++i) {
    for (int r = 1; r <= 2; ++r) {
      ActionLabel l{i, r};
      // order preserved
      for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = 0; b < family.size(); ++b) {
          Ordering o = fx.K.fgen_compare(family[a], family[b]);
          CHECK(fx.K.fgen_compare(fx.K.psi_action(l, family[a]),
                                  fx.K.psi_action(l, family[b])) == o);
        }
      }
      // injective on the sample
      for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b)
          if (!fx.K.fgen_equal(family[a], family[b]))
            CHECK_FALSE(fx.K.fgen_equal(fx.K.psi_action(l, family[a]),
                                        fx.K.psi_action(l, family[b])));
    }
  }
}

TEST_CASE("semidirect_compare agrees with kn_compare") {
  Fixture fx(3);
  Rng rng(52);
  std::vector<SurfaceElem> pool{fx.S->identity(),
                                fx.gamma("w_1"), fx.gamma("w_2^-1")};

  SemidirectOrderDatum<FWord> datum;
  datum.equal = [&](const FWord& a, const FWord& b) {
    return fx.K.words_equal(a, b);
  };
  for (int p = 0; p < 2; ++p)
    datum.factor_compare.push_back([&](const FWord& a, const FWord& b) {
      return fx.K.factor_compare(a, b);
    });

  auto random_element = [&]() {
    std::vector<FWord> comps;
    for (int family = 1; family <= 2; ++family) {
      std::vector<FLetter> letters;
      const int len = rng.range(0, 2);
      for (int t = 0; t < len; ++t)
        letters.push_back({fx.K.fgen(family, rng.range(family + 1, 3),
                                     pool[rng.below(pool.size())]),
                           rng.coin() ? +1 : -1});
      comps.push_back(fx.K.word(letters));
    }
    return fx.K.element(std::move(comps));
  };

  for (int t = 0; t < 200; ++t) {
    KnElement a = random_element();
    KnElement b = random_element();
    CHECK(fx.K.kn_compare(a, b) ==
          semidirect_compare<FWord>(datum, a.components, b.components));
  }

  CHECK(semidirect_compare<FWord>(datum, fx.K.identity().components,
                                  fx.K.identity().components) ==
        Ordering::equal);
}

TEST_CASE("kn order passes the cone axioms on single-factor products") {
  // Products are only defined here within one factor embedded in tuples,
  // the fragment of the group law the decomposition pins down exactly.
  Fixture fx(3);
  Rng rng(54);
  std::vector<SurfaceElem> pool{fx.S->identity(), fx.gamma("w_1"),
                                fx.gamma("w_2"), fx.gamma("w_1^-1")};

  for (int family = 1; family <= 2; ++family) {
    auto embed = [&](const FWord& u) {
      std::vector<FWord> comps(2);
      comps[static_cast<std::size_t>(family - 1)] = u;
      return fx.K.element(std::move(comps));
    };
    OrderedGroup<KnElement> G{
        .identity = fx.K.identity(),
        .multiply =
            [&, family](const KnElement& a, const KnElement& b) {
              std::vector<FWord> comps(2);
              const auto p = static_cast<std::size_t>(family - 1);
              comps[p] = fx.K.multiply(a.components[p], b.components[p]);
              return fx.K.element(std::move(comps));
            },
        .invert =
            [&, family](const KnElement& a) {
              std::vector<FWord> comps(2);
              const auto p = static_cast<std::size_t>(family - 1);
              comps[p] = fx.K.invert(a.components[p]);
              return fx.K.element(std::move(comps));
            },
        .compare = [&](const KnElement& a,
                       const KnElement& b) { return fx.K.kn_compare(a, b); },
        .describe = [&](const KnElement& a) { return fx.K.to_text(a); },
    };

    std::vector<KnElement> sample{fx.K.identity()};
    for (int t = 0; t < 8; ++t) {
      std::vector<FLetter> letters;
      const int len = rng.range(1, 3);
      for (int s = 0; s < len; ++s)
        letters.push_back({fx.K.fgen(family, rng.range(family + 1, 3),
                                     pool[rng.below(pool.size())]),
                           rng.coin() ? +1 : -1});
      sample.push_back(embed(fx.K.word(letters)));
    }
    CHECK(check_cone_axioms<KnElement>(G, sample, true).ok());

    // Inner-multiplication invariance inside the factor, as tuples.
    for (int t = 0; t < 30; ++t) {
      const KnElement& a = sample[rng.below(sample.size())];
      const KnElement& b = sample[rng.below(sample.size())];
      const KnElement& w = sample[rng.below(sample.size())];
      Ordering o = fx.K.kn_compare(a, b);
      if (o != Ordering::less) continue;
      CHECK(fx.K.kn_compare(G.multiply(w, a), G.multiply(w, b)) ==
            Ordering::less);
      CHECK(fx.K.kn_compare(G.multiply(a, w), G.multiply(b, w)) ==
            Ordering::less);
    }
  }
}

TEST_CASE("semidirect twists must be H1-trivial") {
  Generator x1{alphabets::free_x, 1}, x2{alphabets::free_x, 2};
  Word w0 = Word::generator(x1);

  SemidirectTwist good;
  good.domain = {x1, x2};
  good.map.set(x1, conjugate(w0, Word::generator(x1)));
  good.map.set(x2, conjugate(w0, Word::generator(x2)));
  std::vector<SemidirectTwist> twists{good};
  CHECK_NOTHROW(require_h1_trivial_twists(twists));

  SemidirectTwist bad;
  bad.domain = {x1, x2};
  bad.map.set(x1, multiply(Word::generator(x1), Word::generator(x2)));
  std::vector<SemidirectTwist> bad_twists{bad};
  CHECK_THROWS_AS(require_h1_trivial_twists(bad_twists), std::invalid_argument);
}

TEST_CASE("two-factor toy: F2 semidirect Z passes the cone axioms") {
  // Elements are (u, k) with u over x_1, x_2 and k recorded as a power of
  // x_9; multiplication twists by conjugation with x_1, which is H1-trivial.
  using Elem = std::vector<Word>;
  Generator x1{alphabets::free_x, 1}, x2{alphabets::free_x, 2},
      z{alphabets::free_x, 9};
  const Word w0 = Word::generator(x1);

  SemidirectTwist twist;
  twist.domain = {x1, x2};
  twist.map.set(x1, conjugate(w0, Word::generator(x1)));
  twist.map.set(x2, conjugate(w0, Word::generator(x2)));

  auto word_eq = [](const Word& u, const Word& v) { return u == v; };
  auto word_cmp = [](const Word& u, const Word& v) {
    return magnus_compare(u, v);
  };
  SemidirectOrderDatum<Word> datum = make_semidirect_datum<Word>(
      word_eq, {word_cmp, word_cmp}, {twist});

  // The gate rejects a twist that moves the abelianization.
  SemidirectTwist shear;
  shear.domain = {x1, x2};
  shear.map.set(x1, multiply(Word::generator(x1), Word::generator(x2)));
  CHECK_THROWS_AS(
      make_semidirect_datum<Word>(word_eq, {word_cmp, word_cmp}, {shear}),
      std::invalid_argument);

  auto twist_pow = [&](const Word& u, long k) {
    Word out = u;
    Word conj = k >= 0 ? w0 : invert(w0);
    for (long t = 0; t < (k >= 0 ? k : -k); ++t) out = conjugate(conj, out);
    return out;
  };
  auto level = [&](const Elem& e) {
    long k = 0;
    for (const auto& l : e[1].letters()) k += l.sign;
    return k;
  };

  OrderedGroup<Elem> G{
      .identity = Elem{Word{}, Word{}},
      .multiply =
          [&](const Elem& a, const Elem& b) {
            return Elem{multiply(a[0], twist_pow(b[0], level(a))),
                        multiply(a[1], b[1])};
          },
      .invert =
          [&](const Elem& a) {
            return Elem{twist_pow(invert(a[0]), -level(a)), invert(a[1])};
          },
      .compare =
          [&](const Elem& a, const Elem& b) {
            return semidirect_compare<Word>(datum, a, b);
          },
      .describe =
          [](const Elem& e) { return to_text(e[0]) + " | " + to_text(e[1]); },
  };

  Rng rng(53);
  std::vector<Elem> sample{G.identity};
  for (int t = 0; t < 12; ++t) {
    Word u = random_reduced_word(rng, alphabets::free_x, 2, 4);
    long k = rng.range(-2, 2);
    std::vector<Letter<Generator>> zs;
    for (long s = 0; s < (k >= 0 ? k : -k); ++s)
      zs.push_back({z, k >= 0 ? +1 : -1});
    sample.push_back(Elem{u, Word::reduce(zs)});
  }
  // Group sanity first: inverses actually invert.
  for (const auto& e : sample) {
    Elem prod = G.multiply(e, G.invert(e));
    CHECK(prod[0].is_identity());
    CHECK(prod[1].is_identity());
  }
  CHECK(check_cone_axioms<Elem>(G, sample, true).ok());
}

TEST_CASE("t_word emits the twist braids") {
  CHECK(t_word(1, 2, 3) == BraidWord::sigma_power(3, 1, 2));
  CHECK(t_word(1, 3, 3) ==
        BraidWord(3, {{1, +1}, {2, +1}, {2, +1}, {1, -1}}));
  CHECK(t_word(2, 3, 3) == BraidWord::sigma_power(3, 2, 2));
  CHECK_THROWS_AS(t_word(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(t_word(1, 4, 3), std::invalid_argument);

  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) CHECK(is_pure(t_word(i, j, n)));
}

TEST_CASE("kn element text round-trip") {
  Fixture fx(3);
  FWord u = fx.K.word({FLetter{fx.f(1, 2, "w_1 w_2^-1"), +1},
                       FLetter{fx.f(1, 3, "1"), -1}});
  FWord v = fx.K.word({FLetter{fx.f(2, 3, "w_2"), +1},
                       FLetter{fx.f(2, 3, "w_2"), +1}});
  KnElement k = fx.K.element({u, v});
  std::string text = fx.K.to_text(k);
  CHECK(text == "f[1,2,w_1 w_2^-1] f[1,3,1]^-1 ; f[2,3,w_2]^2");
  CHECK(fx.K.elements_equal(fx.K.parse_element(text), k));

  // Trailing empty components may be omitted.
  KnElement single = fx.K.parse_element("f[1,2,1]");
  CHECK(single.components[1].is_identity());
  CHECK_THROWS_AS(fx.K.parse_element("f[9,2,1]"), std::invalid_argument);
  CHECK_THROWS_AS(fx.K.parse_element("f[1,2"), ParseError);
}
