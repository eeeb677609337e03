// Seeded property suites over all modules; the CLI's proptest verb and the
// acceptance runner both delegate here. Identical config and seed give
// byte-identical JSON.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "braidorder/check.hpp"
#include "braidorder/order.hpp"
#include "braidorder/words.hpp"

namespace braidorder {

// Deterministic source: mt19937_64 is fully specified by the standard, and
// bounded draws avoid distribution objects, whose output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 eng_;
};

// Uniform length in [min_len, max_len], letters never cancelling.
Word random_reduced_word(Rng& rng, AlphabetId alphabet, int num_generators,
                         int max_len, int min_len = 0);
Word random_nonidentity_word(Rng& rng, AlphabetId alphabet,
                             int num_generators, int max_len);

// Composition of 1..3 elementary H1-trivial automorphisms: partial
// conjugations x -> w x w^-1, and (with >= 3 generators) commutator
// multipliers x -> x [u, v] with u, v over the other generators.
GeneratorMap random_h1_trivial_automorphism(Rng& rng,
                                            const std::vector<Generator>& gens);

struct SuiteConfig {
  std::uint64_t seed = 7;
  long samples = 1000;
  int strands = 4;
  int genus = 2;
  CompareParams params{};
};

struct SuiteResult {
  std::string suite;
  SuiteConfig config;
  CheckReport report;
  std::map<std::string, std::int64_t> stats;
  bool passed = false;

  std::string to_json_text(int indent = -1) const;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Throws std::invalid_argument for unknown names; UndecidedAtCap escapes
// only from suites where it is a failure rather than a counted statistic.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

// Exhaustive cross-validation used by the acceptance gate: for every
// reduced word of length <= max_len, Dehn triviality must agree with
// quotient-expansion triviality.
CheckReport surface_cross_validation_exhaustive(int genus, int max_len,
                                                const CompareParams& params);

// All reduced words of length <= max_len over the first num_generators
// letters of the alphabet.
std::vector<Word> enumerate_reduced_words(AlphabetId alphabet,
                                          int num_generators, int max_len);

}  // namespace braidorder
