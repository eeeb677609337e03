#include "braidorder/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "braidorder/braid.hpp"
#include "braidorder/knorder.hpp"
#include "braidorder/magnus.hpp"
#include "braidorder/series.hpp"
#include "braidorder/surface.hpp"

namespace braidorder {

Word random_reduced_word(Rng& rng, AlphabetId alphabet, int num_generators,
                         int max_len, int min_len) {
  const int len = rng.range(min_len, max_len);
  std::vector<Letter<Generator>> letters;
  while (static_cast<int>(letters.size()) < len) {
    Generator g{alphabet, rng.range(1, num_generators)};
    int sign = rng.coin() ? +1 : -1;
    if (!letters.empty() && letters.back().gen == g &&
        letters.back().sign == -sign)
      continue;
    letters.push_back({g, sign});
  }
  return Word::reduce(letters);
}

Word random_nonidentity_word(Rng& rng, AlphabetId alphabet,
                             int num_generators, int max_len) {
  while (true) {
    Word w = random_reduced_word(rng, alphabet, num_generators, max_len, 1);
    if (!w.is_identity()) return w;
  }
}

namespace {

Word random_word_over(Rng& rng, std::span<const Generator> gens, int max_len,
                      int min_len) {
  const int len = rng.range(min_len, max_len);
  std::vector<Letter<Generator>> letters;
  while (static_cast<int>(letters.size()) < len) {
    Generator g = gens[rng.below(gens.size())];
    int sign = rng.coin() ? +1 : -1;
    if (!letters.empty() && letters.back().gen == g &&
        letters.back().sign == -sign)
      continue;
    letters.push_back({g, sign});
  }
  return Word::reduce(letters);
}

}  // namespace

GeneratorMap random_h1_trivial_automorphism(
    Rng& rng, const std::vector<Generator>& gens) {
  GeneratorMap acc;
  const int steps = rng.range(1, 3);
  for (int s = 0; s < steps; ++s) {
    GeneratorMap elem;
    Generator target = gens[rng.below(gens.size())];
    const bool use_commutator = gens.size() >= 3 && rng.coin();
    if (use_commutator) {
      std::vector<Generator> others;
      for (Generator g : gens)
        if (!(g == target)) others.push_back(g);
      Word u = random_word_over(rng, others, 2, 1);
      Word v = random_word_over(rng, others, 2, 1);
      elem.set(target, multiply(Word::generator(target), commutator(u, v)));
    } else {
      Word w = random_reduced_word(rng, target.alphabet,
                                   static_cast<int>(gens.size()), 3, 1);
      elem.set(target, conjugate(w, Word::generator(target)));
    }
    acc = compose(elem, acc);
  }
  return acc;
}

std::vector<Word> enumerate_reduced_words(AlphabetId alphabet,
                                          int num_generators, int max_len) {
  std::vector<Word> out;
  std::vector<Letter<Generator>> current;
  std::function<void()> visit = [&]() {
    out.push_back(Word::reduce(current));
    if (static_cast<int>(current.size()) >= max_len) return;
    for (int g = 1; g <= num_generators; ++g) {
      for (int sign : {+1, -1}) {
        Letter<Generator> l{Generator{alphabet, g}, sign};
        if (!current.empty() && current.back().gen == l.gen &&
            current.back().sign == -sign)
          continue;
        current.push_back(l);
        visit();
        current.pop_back();
      }
    }
  };
  visit();
  return out;
}

namespace {

using SuiteFn = std::function<SuiteResult(const SuiteConfig&)>;

SuiteResult make_result(std::string name, const SuiteConfig& cfg) {
  SuiteResult r;
  r.suite = std::move(name);
  r.config = cfg;
  return r;
}

// ---- magnus-homomorphism ------------------------------------------------

SuiteResult suite_magnus_homomorphism(const SuiteConfig& cfg) {
  SuiteResult r = make_result("magnus-homomorphism", cfg);
  Rng rng(cfg.seed);
  const int d = cfg.params.initial_degree;
  for (long s = 0; s < cfg.samples; ++s) {
    Word u = random_reduced_word(rng, alphabets::free_x, 3, 8);
    Word v = random_reduced_word(rng, alphabets::free_x, 3, 8);
    ++r.report.checked;
    Series lhs = magnus_expand(multiply(u, v), d);
    Series rhs = mul(magnus_expand(u, d), magnus_expand(v, d));
    if (!(lhs == rhs))
      r.report.note("u=" + to_text(u) + ", v=" + to_text(v),
                    "M(uv) = M(u) M(v)", "series differ");
  }
  r.passed = r.report.ok();
  return r;
}

// ---- cone-axioms ---------------------------------------------------------

SuiteResult suite_cone_axioms(const SuiteConfig& cfg) {
  SuiteResult r = make_result("cone-axioms", cfg);
  Rng rng(cfg.seed);
  const auto G = magnus_ordered_group({}, cfg.params);
  const int per_group = std::max(
      2, static_cast<int>(std::ceil(std::sqrt(
             static_cast<double>(cfg.samples) / 2.0))) +
             1);
  for (int num_gens : {2, 3}) {
    std::vector<Word> sample{Word{}};
    while (static_cast<int>(sample.size()) < per_group)
      sample.push_back(
          random_nonidentity_word(rng, alphabets::free_x, num_gens, 8));
    r.report.merge(check_cone_axioms<Word>(G, sample, /*bi_order=*/true));
    r.stats["sample_F" + std::to_string(num_gens)] = sample.size();
  }
  r.passed = r.report.ok();
  return r;
}

// ---- bi-invariance -------------------------------------------------------

SuiteResult suite_bi_invariance(const SuiteConfig& cfg) {
  SuiteResult r = make_result("bi-invariance", cfg);
  Rng rng(cfg.seed);
  long skipped = 0;
  for (long s = 0; s < cfg.samples; ++s) {
    Word a = random_reduced_word(rng, alphabets::free_x, 3, 8);
    Word b = random_reduced_word(rng, alphabets::free_x, 3, 8);
    Word c = random_reduced_word(rng, alphabets::free_x, 3, 8);
    Ordering o = magnus_compare(a, b, {}, cfg.params);
    if (o == Ordering::equal) {
      ++skipped;
      continue;
    }
    if (o == Ordering::greater) std::swap(a, b);
    ++r.report.checked;
    if (magnus_compare(multiply(c, a), multiply(c, b), {}, cfg.params) !=
        Ordering::less)
      r.report.note("a=" + to_text(a) + ", b=" + to_text(b) +
                        ", c=" + to_text(c),
                    "ca < cb", "not less");
    ++r.report.checked;
    if (magnus_compare(multiply(a, c), multiply(b, c), {}, cfg.params) !=
        Ordering::less)
      r.report.note("a=" + to_text(a) + ", b=" + to_text(b) +
                        ", c=" + to_text(c),
                    "ac < bc", "not less");
  }
  r.stats["skipped_equal"] = skipped;
  r.passed = r.report.ok();
  return r;
}

// ---- h1-preserves (random H1-trivial automorphisms) ----------------------

SuiteResult suite_h1_preserves(const SuiteConfig& cfg) {
  SuiteResult r = make_result("h1-preserves", cfg);
  Rng rng(cfg.seed);
  std::vector<Generator> gens;
  for (int k = 1; k <= 3; ++k) gens.push_back({alphabets::free_x, k});
  const auto G = magnus_ordered_group({}, cfg.params);
  for (long s = 0; s < cfg.samples; ++s) {
    GeneratorMap phi = random_h1_trivial_automorphism(rng, gens);
    std::vector<std::pair<Word, Word>> pairs;
    for (int t = 0; t < 3; ++t)
      pairs.push_back(
          {random_reduced_word(rng, alphabets::free_x, 3, 6),
           random_reduced_word(rng, alphabets::free_x, 3, 6)});
    r.report.merge(check_order_preserved_by(phi, G, pairs));
  }
  r.stats["automorphisms"] = cfg.samples;
  r.passed = r.report.ok();
  return r;
}

// ---- perm-preserves (order-preserving relabelings) -----------------------

namespace {

GeneratorMap relabeling(std::span<const int> image_of_index) {
  GeneratorMap phi;
  for (std::size_t k = 0; k < image_of_index.size(); ++k)
    phi.set({alphabets::free_x, static_cast<int>(k) + 1},
            Word::generator({alphabets::free_x, image_of_index[k]}));
  return phi;
}

}  // namespace

SuiteResult suite_perm_preserves(const SuiteConfig& cfg) {
  SuiteResult r = make_result("perm-preserves", cfg);
  Rng rng(cfg.seed);
  const auto G = magnus_ordered_group({}, cfg.params);

  std::vector<std::pair<Word, Word>> random_pairs;
  for (long s = 0; s < cfg.samples; ++s)
    random_pairs.push_back({random_reduced_word(rng, alphabets::free_x, 4, 6),
                            random_reduced_word(rng, alphabets::free_x, 4, 6)});

  // Targeted witnesses: for i < j the word x_j is below x_i, and any
  // relabeling with pi(i) > pi(j) must reverse that pair.
  std::vector<std::pair<Word, Word>> witness_pairs;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      witness_pairs.push_back(
          {Word::generator({alphabets::free_x, j}),
           Word::generator({alphabets::free_x, i})});

  // Monotone injective relabelings preserve degree and lex order of
  // monomials, hence every comparison.
  const std::vector<std::pair<std::string, std::vector<int>>> monotone = {
      {"identity", {1, 2, 3, 4}},
      {"shift+5", {6, 7, 8, 9}},
      {"dilate*2", {2, 4, 6, 8}},
      {"spread", {2, 5, 7, 9}},
  };
  for (const auto& [label, image] : monotone) {
    CheckReport rep = check_order_preserved_by(relabeling(image), G,
                                               random_pairs);
    r.stats["monotone_checked_" + label] = rep.checked;
    r.report.merge(rep);
  }

  // All 24 permutations of {1,2,3,4}: only the identity is monotone; each
  // of the others must be caught on at least one pair.
  std::vector<int> perm = {1, 2, 3, 4};
  long controls = 0, caught = 0;
  do {
    const bool is_monotone = std::is_sorted(perm.begin(), perm.end());
    GeneratorMap phi = relabeling(perm);
    if (is_monotone) {
      r.report.merge(check_order_preserved_by(phi, G, random_pairs));
      continue;
    }
    ++controls;
    CheckReport rep = check_order_preserved_by(phi, G, witness_pairs);
    ++r.report.checked;
    if (rep.ok()) {
      std::string desc = "pi=(";
      for (int v : perm) desc += std::to_string(v) + ",";
      desc.back() = ')';
      r.report.note(desc, "non-monotone permutation produces a violation",
                    "none found");
    } else {
      ++caught;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.stats["non_monotone_controls"] = controls;
  r.stats["non_monotone_caught"] = caught;
  r.passed = r.report.ok();
  return r;
}

// ---- surface-word-problem ------------------------------------------------

namespace {

// Expansion-triviality, the route independent of Dehn's algorithm.
// `expected_trivial` bounds the escalation: a word that is trivial stays 1
// at every degree, so two low degrees suffice to cross-check it, while a
// word claimed nontrivial must actually leave 1 at some degree <= cap.
bool expansion_trivial(const SurfaceGroup& S, const Word& w,
                       const CompareParams& params, bool expected_trivial,
                       bool* undecided) {
  const SurfaceElem e = S.element(w);
  int d = std::max(2, params.initial_degree);
  const int cap =
      expected_trivial ? std::min(2 * d, std::max(d, params.degree_cap))
                       : std::max(d, params.degree_cap);
  while (true) {
    if (!(S.expand(e, d) == Series::one(d))) {
      if (undecided) *undecided = false;
      return false;
    }
    if (d >= cap) break;
    d = std::min(d * 2, cap);
  }
  if (undecided) *undecided = !expected_trivial;
  return true;
}

}  // namespace

SuiteResult suite_surface_word_problem(const SuiteConfig& cfg) {
  SuiteResult r = make_result("surface-word-problem", cfg);
  Rng rng(cfg.seed);
  const int genus = cfg.genus;
  SurfaceGroup S(genus);
  const int num_gens = 2 * genus;
  const Word relator = S.presentation().relator();

  auto expect_trivial = [&](const Word& w, const std::string& what) {
    ++r.report.checked;
    if (!S.is_trivial(w)) r.report.note(what + ": " + to_text(w), "trivial", "nontrivial");
  };
  auto expect_nontrivial = [&](const Word& w, const std::string& what) {
    ++r.report.checked;
    if (S.is_trivial(w)) r.report.note(what + ": " + to_text(w), "nontrivial", "trivial");
  };

  expect_trivial(relator, "relator");
  {
    const auto& ls = relator.letters();
    for (std::size_t k = 1; k < ls.size(); ++k) {
      std::vector<Letter<Generator>> rot(ls.begin() + k, ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + k);
      expect_trivial(Word::reduce(rot), "cyclic conjugate");
    }
    expect_trivial(invert(relator), "inverse relator");
  }

  for (long s = 0; s < cfg.samples; ++s) {
    const int factors = rng.range(1, 4);
    Word product;
    for (int f = 0; f < factors; ++f) {
      Word w = random_reduced_word(rng, alphabets::surface_w, num_gens, 4);
      Word rel = rng.coin() ? relator : invert(relator);
      product = multiply(product, conjugate(w, rel));
    }
    expect_trivial(product, "product of relator conjugates");
  }

  for (long s = 0; s < cfg.samples; ++s) {
    Word w;
    do {
      w = random_nonidentity_word(rng, alphabets::surface_w, num_gens, 8);
    } while (abelianize(w).is_zero());
    expect_nontrivial(w, "abelianization-nonzero word");
  }

  // Sampled cross-validation of the two independent triviality routes.
  const long cross = std::min<long>(cfg.samples, 300);
  for (long s = 0; s < cross; ++s) {
    Word w = random_reduced_word(rng, alphabets::surface_w, num_gens, 5);
    bool via_dehn = S.is_trivial(w);
    bool undecided = false;
    bool via_series = expansion_trivial(S, w, cfg.params, via_dehn, &undecided);
    ++r.report.checked;
    if (via_dehn != via_series)
      r.report.note("w=" + to_text(w),
                    via_dehn ? "trivial both ways" : "nontrivial both ways",
                    undecided ? "expansion stayed 1 to cap" : "routes disagree");
  }
  r.passed = r.report.ok();
  return r;
}

}  // namespace

CheckReport surface_cross_validation_exhaustive(int genus, int max_len,
                                                const CompareParams& params) {
  CheckReport report;
  SurfaceGroup S(genus);
  for (const Word& w :
       enumerate_reduced_words(alphabets::surface_w, 2 * genus, max_len)) {
    bool via_dehn = S.is_trivial(w);
    bool undecided = false;
    bool via_series = expansion_trivial(S, w, params, via_dehn, &undecided);
    ++report.checked;
    if (via_dehn != via_series)
      report.note("w=" + to_text(w),
                  via_dehn ? "trivial both ways" : "nontrivial both ways",
                  undecided ? "expansion stayed 1 to cap" : "routes disagree");
  }
  return report;
}

// ---- surface-order --------------------------------------------------------

namespace {

SuiteResult suite_surface_order(const SuiteConfig& cfg) {
  SuiteResult r = make_result("surface-order", cfg);
  Rng rng(cfg.seed);
  long undecided_pairs = 0, pairs_compared = 0, undecided_invariance = 0,
       skipped_equal = 0;
  for (int genus : {1, 2}) {
    SurfaceGroup S(genus);
    const int num_gens = 2 * genus;
    const long triples = cfg.samples / 2;
    for (long s = 0; s < triples; ++s) {
      SurfaceElem a = S.element(
          random_reduced_word(rng, alphabets::surface_w, num_gens, 6));
      SurfaceElem b = S.element(
          random_reduced_word(rng, alphabets::surface_w, num_gens, 6));
      SurfaceElem c = S.element(
          random_reduced_word(rng, alphabets::surface_w, num_gens, 6));
      Ordering o;
      ++pairs_compared;
      try {
        o = S.compare(a, b, cfg.params);
      } catch (const UndecidedAtCap&) {
        ++undecided_pairs;
        continue;
      }
      if (o == Ordering::equal) {
        ++skipped_equal;
        continue;
      }
      if (o == Ordering::greater) std::swap(a, b);
      try {
        ++r.report.checked;
        if (S.compare(S.multiply(c, a), S.multiply(c, b), cfg.params) !=
            Ordering::less)
          r.report.note("genus=" + std::to_string(genus) +
                            " a=" + to_text(a.representative()) +
                            " b=" + to_text(b.representative()) +
                            " c=" + to_text(c.representative()),
                        "ca < cb (left invariance)", "not less");
        ++r.report.checked;
        if (S.compare(S.multiply(a, c), S.multiply(b, c), cfg.params) !=
            Ordering::less)
          r.report.note("genus=" + std::to_string(genus) +
                            " a=" + to_text(a.representative()) +
                            " b=" + to_text(b.representative()) +
                            " c=" + to_text(c.representative()),
                        "ac < bc (right invariance)", "not less");
      } catch (const UndecidedAtCap&) {
        ++undecided_invariance;
      }
    }
  }
  r.stats["pairs_compared"] = pairs_compared;
  r.stats["undecided_pairs"] = undecided_pairs;
  r.stats["undecided_invariance"] = undecided_invariance;
  r.stats["skipped_equal"] = skipped_equal;
  r.passed = r.report.ok();
  return r;
}

// ---- psi-order -------------------------------------------------------------

SuiteResult suite_psi_order(const SuiteConfig& cfg) {
  SuiteResult r = make_result("psi-order", cfg);
  Rng rng(cfg.seed);
  const int n = cfg.strands;
  const int genus = cfg.genus;
  if (n < 2) throw std::invalid_argument("psi-order: need n >= 2");
  auto S = std::make_shared<const SurfaceGroup>(genus);
  KnOrder K(n, S, cfg.params);
  const int num_gens = 2 * genus;

  std::vector<SurfaceElem> pool{S->identity()};
  for (int g = 1; g <= num_gens; ++g) {
    pool.push_back(S->element(Word::generator(S->presentation().generator(g))));
    pool.push_back(
        S->element(invert(Word::generator(S->presentation().generator(g)))));
  }
  while (pool.size() < 24)
    pool.push_back(S->element(
        random_reduced_word(rng, alphabets::surface_w, num_gens, 4)));

  const long per_cell =
      std::clamp<long>(cfg.samples / 20, 1, 50);
  long case1 = 0, case2_fixed = 0, case2_left = 0, case2_right = 0,
       undecided = 0;

  for (int i = 1; i <= n; ++i) {
    for (int wall = 1; wall <= num_gens; ++wall) {
      const ActionLabel label{i, wall};
      for (int j = 1; j <= n - 1; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          for (int l = k; l <= n; ++l) {
            for (long t = 0; t < per_cell; ++t) {
              SurfaceElem gamma = pool[rng.below(pool.size())];
              SurfaceElem delta = pool[rng.below(pool.size())];
              if (k == l) {
                Ordering o;
                try {
                  o = S->compare(gamma, delta, cfg.params);
                } catch (const UndecidedAtCap&) {
                  ++undecided;
                  continue;
                }
                if (o == Ordering::equal) continue;
                if (o == Ordering::greater) std::swap(gamma, delta);
              }
              FGen a = K.fgen(j, k, gamma);
              FGen b = K.fgen(j, l, delta);
              FGen a1 = K.psi_action(label, a);
              FGen b1 = K.psi_action(label, b);
              ++r.report.checked;
              Ordering image;
              try {
                image = K.fgen_compare(a1, b1);
              } catch (const UndecidedAtCap&) {
                ++undecided;
                --r.report.checked;
                continue;
              }
              if (image != Ordering::less)
                r.report.note(
                    "label=(" + std::to_string(i) + "," +
                        std::to_string(wall) + ") a=" + K.to_text(a) +
                        " b=" + K.to_text(b),
                    "psi(a) < psi(b)", to_string(image));
              if (k < l)
                ++case1;
              else if (i != j && i != k)
                ++case2_fixed;
              else if (i == j)
                ++case2_left;
              else
                ++case2_right;
            }
          }
        }
      }
    }
  }
  r.stats["case1"] = case1;
  r.stats["case2_fixed"] = case2_fixed;
  r.stats["case2_left"] = case2_left;
  r.stats["case2_right"] = case2_right;
  r.stats["undecided"] = undecided;
  r.passed = r.report.ok();
  return r;
}

// ---- kn-tuple ---------------------------------------------------------------

namespace {

KnElement random_kn_element(Rng& rng, const KnOrder& K,
                            std::span<const SurfaceElem> pool) {
  const int n = K.strands();
  std::vector<FWord> components;
  for (int family = 1; family <= n - 1; ++family) {
    std::vector<FLetter> letters;
    const int len = rng.range(0, 3);
    for (int t = 0; t < len; ++t) {
      int j = rng.range(family + 1, n);
      SurfaceElem gamma = pool[rng.below(pool.size())];
      letters.push_back(
          {K.fgen(family, j, gamma), rng.coin() ? +1 : -1});
    }
    components.push_back(K.word(letters));
  }
  return K.element(std::move(components));
}

}  // namespace

SuiteResult suite_kn_tuple(const SuiteConfig& cfg) {
  SuiteResult r = make_result("kn-tuple", cfg);
  Rng rng(cfg.seed);
  const int n = std::max(2, cfg.strands);
  auto S = std::make_shared<const SurfaceGroup>(cfg.genus);
  KnOrder K(n, S, cfg.params);

  std::vector<SurfaceElem> pool{S->identity()};
  for (int g = 1; g <= 2 * cfg.genus; ++g)
    pool.push_back(S->element(Word::generator(S->presentation().generator(g))));
  while (pool.size() < 8)
    pool.push_back(S->element(random_reduced_word(
        rng, alphabets::surface_w, 2 * cfg.genus, 2)));

  SemidirectOrderDatum<FWord> datum;
  datum.equal = [&K](const FWord& u, const FWord& v) {
    return K.words_equal(u, v);
  };
  for (int p = 0; p < n - 1; ++p)
    datum.factor_compare.push_back([&K](const FWord& u, const FWord& v) {
      return K.factor_compare(u, v);
    });

  long undecided = 0;
  for (long s = 0; s < cfg.samples; ++s) {
    KnElement a = random_kn_element(rng, K, pool);
    KnElement b = random_kn_element(rng, K, pool);
    ++r.report.checked;
    try {
      Ordering via_kn = K.kn_compare(a, b);
      Ordering via_generic = semidirect_compare<FWord>(
          datum, a.components, b.components);
      if (via_kn != via_generic)
        r.report.note("a=" + K.to_text(a) + " b=" + K.to_text(b),
                      "kn_compare agrees with semidirect_compare",
                      std::string(to_string(via_kn)) + " vs " +
                          to_string(via_generic));
    } catch (const UndecidedAtCap&) {
      ++undecided;
      --r.report.checked;
      continue;
    }
  }

  // Greatest-index dominance by construction: equal above p, differing at p.
  const long dominance = std::max<long>(1, cfg.samples / 10);
  for (long s = 0; s < dominance; ++s) {
    KnElement a = random_kn_element(rng, K, pool);
    KnElement b = a;
    const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    const int family = p + 1;
    FWord replacement;
    do {
      std::vector<FLetter> letters;
      const int len = rng.range(0, 2);
      for (int t = 0; t < len; ++t)
        letters.push_back({K.fgen(family, rng.range(family + 1, n),
                                  pool[rng.below(pool.size())]),
                           rng.coin() ? +1 : -1});
      replacement = K.word(letters);
    } while (K.words_equal(replacement, a.components[static_cast<std::size_t>(p)]));
    b.components[static_cast<std::size_t>(p)] = replacement;
    // Lower components arbitrary on one side.
    for (int q = 0; q < p; ++q)
      b.components[static_cast<std::size_t>(q)] =
          random_kn_element(rng, K, pool).components[static_cast<std::size_t>(q)];
    ++r.report.checked;
    try {
      Ordering expected = K.factor_compare(
          a.components[static_cast<std::size_t>(p)],
          b.components[static_cast<std::size_t>(p)]);
      if (K.kn_compare(a, b) != expected)
        r.report.note("a=" + K.to_text(a) + " b=" + K.to_text(b),
                      "verdict decided at greatest differing component",
                      "differs");
    } catch (const UndecidedAtCap&) {
      ++undecided;
      --r.report.checked;
    }
  }
  r.stats["undecided"] = undecided;
  r.passed = r.report.ok();
  return r;
}

// ---- delta-relation ----------------------------------------------------------

SuiteResult suite_delta_relation(const SuiteConfig& cfg) {
  SuiteResult r = make_result("delta-relation", cfg);
  for (int n = 2; n <= 7; ++n) r.report.merge(check_delta_relation(n));
  r.passed = r.report.ok();
  return r;
}

// ---- gt-certificates ----------------------------------------------------------

SuiteResult suite_gt_certificates(const SuiteConfig& cfg) {
  SuiteResult r = make_result("gt-certificates", cfg);
  for (int n = 2; n <= 7; ++n) {
    for (int i = 1; i <= n - 1; ++i) {
      ++r.report.checked;
      try {
        GtCertificate cert = make_gt_certificate(n, i);
        if (!cert.valid || !cert.verify())
          r.report.note("n=" + std::to_string(n) + ", i=" + std::to_string(i),
                        "valid certificate", "invalid");
      } catch (const std::exception& e) {
        r.report.note("n=" + std::to_string(n) + ", i=" + std::to_string(i),
                      "valid certificate", e.what());
      }
    }
  }
  r.passed = r.report.ok();
  return r;
}

// ---- gt-absence -----------------------------------------------------------------

SuiteResult suite_gt_absence(const SuiteConfig& cfg) {
  SuiteResult r = make_result("gt-absence", cfg);
  Rng rng(cfg.seed);
  const auto G = magnus_ordered_group({}, cfg.params);

  for (long s = 0; s < cfg.samples / 2; ++s) {
    Word g = random_nonidentity_word(rng, alphabets::free_x, 2, 6);
    std::vector<Word> hs;
    const int count = rng.range(1, 3);
    for (int t = 0; t < count; ++t)
      hs.push_back(random_reduced_word(rng, alphabets::free_x, 2, 4));
    ++r.report.checked;
    if (!check_gt_absence<Word>(G, g, hs))
      r.report.note("g=" + to_text(g), "sign invariant holds in free group",
                    "failed");
  }

  long undecided = 0;
  for (int genus : {1, 2}) {
    SurfaceGroup S(genus);
    const auto OG = S.ordered_group(cfg.params);
    for (long s = 0; s < cfg.samples / 4; ++s) {
      Word wg;
      do {
        wg = random_reduced_word(rng, alphabets::surface_w, 2 * genus, 4);
      } while (S.is_trivial(wg));
      std::vector<SurfaceElem> hs;
      const int count = rng.range(1, 3);
      for (int t = 0; t < count; ++t)
        hs.push_back(S.element(
            random_reduced_word(rng, alphabets::surface_w, 2 * genus, 3)));
      ++r.report.checked;
      try {
        if (!check_gt_absence<SurfaceElem>(OG, S.element(wg), hs))
          r.report.note("genus=" + std::to_string(genus) + " g=" + to_text(wg),
                        "sign invariant holds in surface group", "failed");
      } catch (const UndecidedAtCap&) {
        ++undecided;
        --r.report.checked;
      }
    }
  }

  // The contrast: the braid-word data is generalized torsion.
  for (int n = 2; n <= 4; ++n) {
    ++r.report.checked;
    const BraidWord g = BraidWord::sigma_power(n, 1, 2);
    const std::vector<ModelConjugator> conjs{ModelConjugator::trivial,
                                             ModelConjugator::gamma_delta};
    std::function<BraidWord(const ModelConjugator&, const BraidWord&)> conj =
        [](const ModelConjugator& c, const BraidWord& b) {
          return apply_model_conjugator(c, b);
        };
    std::function<BraidWord(const BraidWord&, const BraidWord&)> mult =
        [](const BraidWord& a, const BraidWord& b) { return a * b; };
    std::function<bool(const BraidWord&)> is_id = [n](const BraidWord& b) {
      return braid_equal(b, BraidWord(n));
    };
    if (!verify_generalized_torsion<BraidWord, ModelConjugator>(
            g, conjs, conj, mult, is_id))
      r.report.note("n=" + std::to_string(n),
                    "braid data is generalized torsion", "verification false");
  }

  // And a positive free-group element never is.
  for (long s = 0; s < 20; ++s) {
    Word g = random_nonidentity_word(rng, alphabets::free_x, 2, 4);
    if (G.sign_of_element(g) == Ordering::greater) g = invert(g);
    std::vector<Word> hs;
    const int count = rng.range(1, 3);
    for (int t = 0; t < count; ++t)
      hs.push_back(random_reduced_word(rng, alphabets::free_x, 2, 4));
    std::function<Word(const Word&, const Word&)> conj =
        [](const Word& h, const Word& x) { return conjugate(h, x); };
    std::function<Word(const Word&, const Word&)> mult =
        [](const Word& a, const Word& b) { return multiply(a, b); };
    std::function<bool(const Word&)> is_id = [](const Word& w) {
      return w.is_identity();
    };
    ++r.report.checked;
    if (verify_generalized_torsion<Word, Word>(g, hs, conj, mult, is_id))
      r.report.note("g=" + to_text(g),
                    "no generalized torsion witness in a bi-ordered group",
                    "witness accepted");
  }

  r.stats["undecided"] = undecided;
  r.passed = r.report.ok();
  return r;
}

// ---- negative-controls -----------------------------------------------------------

SuiteResult suite_negative_controls(const SuiteConfig& cfg) {
  SuiteResult r = make_result("negative-controls", cfg);
  Rng rng(cfg.seed);
  long triggered = 0;
  const long expected = 3;

  {
    // Lexicographic comparison of letter strings: a total order on words,
    // but not right-invariant, so the cone axioms must fail.
    OrderedGroup<Word> broken;
    broken.identity = Word{};
    broken.multiply = [](const Word& a, const Word& b) { return multiply(a, b); };
    broken.invert = [](const Word& a) { return invert(a); };
    broken.describe = [](const Word& w) { return to_text(w); };
    broken.compare = [](const Word& a, const Word& b) {
      const auto& la = a.letters();
      const auto& lb = b.letters();
      for (std::size_t k = 0; k < std::min(la.size(), lb.size()); ++k) {
        if (la[k].gen != lb[k].gen)
          return la[k].gen < lb[k].gen ? Ordering::less : Ordering::greater;
        if (la[k].sign != lb[k].sign)
          return la[k].sign < lb[k].sign ? Ordering::less : Ordering::greater;
      }
      if (la.size() != lb.size())
        return la.size() < lb.size() ? Ordering::less : Ordering::greater;
      return Ordering::equal;
    };
    std::vector<Word> sample{Word{}};
    for (int t = 0; t < 12; ++t)
      sample.push_back(random_nonidentity_word(rng, alphabets::free_x, 2, 5));
    CheckReport rep = check_cone_axioms<Word>(broken, sample, true);
    r.report.checked += rep.checked;
    r.stats["broken_comparator_violations"] =
        static_cast<std::int64_t>(rep.violations.size());
    if (!rep.ok()) ++triggered;
    for (std::size_t k = 0; k < std::min<std::size_t>(rep.violations.size(), 5); ++k)
      r.report.violations.push_back(rep.violations[k]);
  }

  {
    // Abelianization-changing map; (1, x_1) is a guaranteed witness.
    GeneratorMap phi;
    phi.set({alphabets::free_x, 1},
            invert(Word::generator({alphabets::free_x, 1})));
    std::vector<std::pair<Word, Word>> pairs{
        {Word{}, Word::generator({alphabets::free_x, 1})}};
    for (int t = 0; t < 50; ++t)
      pairs.push_back({random_reduced_word(rng, alphabets::free_x, 2, 5),
                       random_reduced_word(rng, alphabets::free_x, 2, 5)});
    CheckReport rep = check_order_preserved_by(
        phi, magnus_ordered_group({}, cfg.params), pairs);
    r.report.checked += rep.checked;
    r.stats["h1_control_violations"] =
        static_cast<std::int64_t>(rep.violations.size());
    if (!rep.ok()) ++triggered;
    for (std::size_t k = 0; k < std::min<std::size_t>(rep.violations.size(), 5); ++k)
      r.report.violations.push_back(rep.violations[k]);
  }

  {
    // Non-monotone variable swap; (x_2, x_1) is the witness pair.
    GeneratorMap swap_map;
    swap_map.set({alphabets::free_x, 1},
                 Word::generator({alphabets::free_x, 2}));
    swap_map.set({alphabets::free_x, 2},
                 Word::generator({alphabets::free_x, 1}));
    std::vector<std::pair<Word, Word>> pairs{
        {Word::generator({alphabets::free_x, 2}),
         Word::generator({alphabets::free_x, 1})}};
    CheckReport rep = check_order_preserved_by(
        swap_map, magnus_ordered_group({}, cfg.params), pairs);
    r.report.checked += rep.checked;
    r.stats["swap_control_violations"] =
        static_cast<std::int64_t>(rep.violations.size());
    if (!rep.ok()) ++triggered;
    for (const auto& v : rep.violations) r.report.violations.push_back(v);
  }

  r.stats["controls_expected"] = expected;
  r.stats["controls_triggered"] = triggered;
  r.passed = triggered == expected;
  return r;
}

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table = {
      {"magnus-homomorphism", suite_magnus_homomorphism},
      {"cone-axioms", suite_cone_axioms},
      {"bi-invariance", suite_bi_invariance},
      {"h1-preserves", suite_h1_preserves},
      {"perm-preserves", suite_perm_preserves},
      {"surface-word-problem", suite_surface_word_problem},
      {"surface-order", suite_surface_order},
      {"psi-order", suite_psi_order},
      {"kn-tuple", suite_kn_tuple},
      {"delta-relation", suite_delta_relation},
      {"gt-certificates", suite_gt_certificates},
      {"gt-absence", suite_gt_absence},
      {"negative-controls", suite_negative_controls},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite_name(const std::string& name) {
  return suite_table().count(name) > 0;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  auto it = suite_table().find(name);
  if (it == suite_table().end())
    throw std::invalid_argument("unknown suite: " + name);
  config.params.validate();
  return it->second(config);
}

std::string SuiteResult::to_json_text(int indent) const {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations)
    violations.push_back(
        {{"inputs", v.inputs}, {"expected", v.expected}, {"got", v.got}});
  nlohmann::json stats_json = nlohmann::json::object();
  for (const auto& [k, v] : stats) stats_json[k] = v;
  nlohmann::json j{
      {"schema", "proptest-report/1"},
      {"suite", suite},
      {"config",
       {{"seed", config.seed},
        {"samples", config.samples},
        {"strands", config.strands},
        {"genus", config.genus},
        {"d0", config.params.initial_degree},
        {"cap", config.params.degree_cap}}},
      {"checked", report.checked},
      {"violations", violations},
      {"stats", stats_json},
      {"passed", passed}};
  return j.dump(indent);
}

}  // namespace braidorder
