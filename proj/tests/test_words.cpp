#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidorder/suites.hpp"
#include "braidorder/words.hpp"

using namespace braidorder;

namespace {

Generator x(int k) { return Generator{alphabets::free_x, k}; }
Word w(std::initializer_list<Letter<Generator>> ls) {
  return Word::reduce({ls.begin(), ls.size()});
}
Word parse(std::string_view text) { return parse_word(text, alphabets::free_x); }

// Raw sequences with deliberate cancellations, unlike random_reduced_word.
std::vector<Letter<Generator>> random_raw_letters(Rng& rng, int max_len) {
  std::vector<Letter<Generator>> out;
  const int len = rng.range(0, max_len);
  for (int k = 0; k < len; ++k)
    out.push_back({x(rng.range(1, 3)), rng.coin() ? +1 : -1});
  return out;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(w({{x(1), +1}, {x(1), -1}}).is_identity());
  CHECK(w({{x(1), +1}, {x(2), +1}, {x(2), -1}, {x(1), +1}}) ==
        w({{x(1), +1}, {x(1), +1}}));
  CHECK(w({{x(1), +1}}) == Word::generator(x(1)));

  // Nested cancellation needs the stack, not a single pass.
  CHECK(w({{x(1), +1}, {x(2), +1}, {x(2), -1}, {x(1), -1}}).is_identity());
}

TEST_CASE("reduce is idempotent on random letter sequences") {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    auto raw = random_raw_letters(rng, 12);
    Word once = Word::reduce(raw);
    Word twice = Word::reduce(once.letters());
    CHECK(once == twice);
  }
}

TEST_CASE("multiply and invert") {
  CHECK(multiply(Word::generator(x(1)), Word::generator(x(1), -1))
            .is_identity());
  CHECK(invert(parse("x_1 x_2")) == parse("x_2^-1 x_1^-1"));
  CHECK(multiply(parse("x_1 x_2"), parse("x_2^-1 x_3")) == parse("x_1 x_3"));

  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    Word a = Word::reduce(random_raw_letters(rng, 10));
    CHECK(multiply(a, invert(a)).is_identity());
    CHECK(multiply(invert(a), a).is_identity());
  }
}

TEST_CASE("abelianize") {
  CHECK(abelianize(parse("x_1 x_2 x_1^-1 x_2^-1")).is_zero());
  ExponentVector expected;
  expected.add(x(1), 2);
  expected.add(x(2), 1);
  CHECK(abelianize(parse("x_1^2 x_2")) == expected);
  CHECK(abelianize(Word{}).is_zero());

  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    Word a = Word::reduce(random_raw_letters(rng, 8));
    Word b = Word::reduce(random_raw_letters(rng, 8));
    CHECK(abelianize(multiply(a, b)) == abelianize(a) + abelianize(b));
  }
}

TEST_CASE("apply_map") {
  GeneratorMap phi;
  phi.set(x(1), parse("x_1 x_2"));
  CHECK(apply_map(phi, parse("x_1^-1")) == parse("x_2^-1 x_1^-1"));

  GeneratorMap identity;
  CHECK(apply_map(identity, parse("x_1 x_2^-1 x_3")) == parse("x_1 x_2^-1 x_3"));

  GeneratorMap swap;
  swap.set(x(1), Word::generator(x(2)));
  swap.set(x(2), Word::generator(x(1)));
  CHECK(apply_map(swap, parse("x_1 x_2")) == parse("x_2 x_1"));
}

TEST_CASE("map composition is substitution") {
  Rng rng(14);
  std::vector<Generator> gens{x(1), x(2), x(3)};
  for (int t = 0; t < 100; ++t) {
    GeneratorMap phi = random_h1_trivial_automorphism(rng, gens);
    GeneratorMap psi = random_h1_trivial_automorphism(rng, gens);
    Word a = Word::reduce(random_raw_letters(rng, 8));
    CHECK(apply_map(compose(phi, psi), a) == apply_map(phi, apply_map(psi, a)));
  }
}

TEST_CASE("is_h1_trivial") {
  std::vector<Generator> gens{x(1), x(2)};
  GeneratorMap conj;
  conj.set(x(1), parse("x_2 x_1 x_2^-1"));
  CHECK(is_h1_trivial(conj, gens));

  GeneratorMap stretch;
  stretch.set(x(1), parse("x_1 x_2"));
  CHECK_FALSE(is_h1_trivial(stretch, gens));

  CHECK(is_h1_trivial(GeneratorMap{}, gens));
}

TEST_CASE("text round-trip") {
  CHECK(to_text(Word{}) == "1");
  CHECK(parse("1").is_identity());
  CHECK(to_text(parse("x_1 x_2^-1")) == "x_1 x_2^-1");
  CHECK(to_text(parse("x_1 x_1 x_1")) == "x_1^3");
  CHECK(parse("x_1^3") == w({{x(1), +1}, {x(1), +1}, {x(1), +1}}));
  CHECK(parse("x_2^-2 x_2^2").is_identity());

  Rng rng(15);
  for (int t = 0; t < 300; ++t) {
    Word a = Word::reduce(random_raw_letters(rng, 10));
    CHECK(parse(to_text(a)) == a);
  }

  CHECK_THROWS_AS(parse("y_1"), ParseError);
  CHECK_THROWS_AS(parse("x_"), ParseError);
  CHECK_THROWS_AS(parse("x_1^0"), ParseError);
  CHECK_THROWS_AS(parse("x_0"), ParseError);
}
