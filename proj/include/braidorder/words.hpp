// Freely reduced words over indexed alphabets: the free-group layer.
// All values are immutable after construction and all operations are pure.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidorder/order.hpp"

namespace braidorder {

using AlphabetId = std::int32_t;

// Conventional alphabets. Generators of infinite structured families
// (the knorder module) use their own letter type instead.
namespace alphabets {
inline constexpr AlphabetId free_x = 0;    // x_1, x_2, ...
inline constexpr AlphabetId surface_w = 1; // w_1, ..., w_2g
}  // namespace alphabets

std::string_view alphabet_display_name(AlphabetId id);

struct Generator {
  AlphabetId alphabet = alphabets::free_x;
  std::int64_t index = 1;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

template <class G>
struct Letter {
  G gen;
  int sign = +1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Free reduction of a letter sequence, generic over the letter identity
// predicate (knorder cancels letters equal only up to group equality of
// their gamma tags).
template <class G, class Eq>
std::vector<Letter<G>> free_reduce(std::span<const Letter<G>> letters, Eq eq) {
  std::vector<Letter<G>> out;
  out.reserve(letters.size());
  for (const auto& l : letters) {
    if (!out.empty() && out.back().sign == -l.sign && eq(out.back().gen, l.gen))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

template <class G>
std::vector<Letter<G>> invert_letters(std::span<const Letter<G>> letters) {
  std::vector<Letter<G>> out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.push_back({it->gen, -it->sign});
  return out;
}

// A freely reduced word; the empty word is the identity. Equality is by
// reduced form, which is the free group's canonical form.
class Word {
 public:
  Word() = default;

  // Reduces the input; the only way to build a Word from raw letters.
  static Word reduce(std::span<const Letter<Generator>> letters);
  static Word generator(Generator g, int sign = +1);

  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  const std::vector<Letter<Generator>>& letters() const { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter<Generator>> letters_;
};

Word multiply(const Word& a, const Word& b);
Word invert(const Word& a);
inline Word conjugate(const Word& h, const Word& g) {  // h g h^-1
  return multiply(multiply(h, g), invert(h));
}
inline Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

// Image in the free abelian group; entries with value 0 are absent.
class ExponentVector {
 public:
  ExponentVector() = default;

  void add(Generator g, std::int64_t e);
  std::int64_t at(Generator g) const;
  bool is_zero() const { return entries_.empty(); }
  const std::map<Generator, std::int64_t>& entries() const { return entries_; }

  ExponentVector& operator+=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
    a += b;
    return a;
  }
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::map<Generator, std::int64_t> entries_;
};

ExponentVector abelianize(const Word& a);

// Finite map Generator -> Word; generators not listed map to themselves.
// Invertibility, when an automorphism is intended, is the caller's
// responsibility; is_h1_trivial checks the testable part.
class GeneratorMap {
 public:
  GeneratorMap() = default;

  void set(Generator g, Word image);
  const Word* find(Generator g) const;
  Word image_of(Generator g, int sign) const;
  const std::map<Generator, Word>& images() const { return images_; }

 private:
  std::map<Generator, Word> images_;
};

Word apply_map(const GeneratorMap& phi, const Word& a);

// Substitution composition: apply_map(compose(phi, psi), a) ==
// apply_map(phi, apply_map(psi, a)).
GeneratorMap compose(const GeneratorMap& phi, const GeneratorMap& psi);

// True iff abelianize(phi(g)) is the unit vector of g for every listed g.
bool is_h1_trivial(const GeneratorMap& phi, std::span<const Generator> gens);

// Text form: generators as `name_index`, inverses `^-1`, juxtaposition for
// the product, `1` for the identity. Runs of a letter print as `x_1^3`.
std::string to_text(const Word& w);
Word parse_word(std::string_view text, AlphabetId alphabet);

}  // namespace braidorder
