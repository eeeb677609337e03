#include "braidorder/words.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace braidorder {

std::string_view alphabet_display_name(AlphabetId id) {
  switch (id) {
    case alphabets::free_x: return "x";
    case alphabets::surface_w: return "w";
    default: return "g";
  }
}

Word Word::reduce(std::span<const Letter<Generator>> letters) {
  Word w;
  w.letters_ = free_reduce(letters, std::equal_to<Generator>{});
  return w;
}

Word Word::generator(Generator g, int sign) {
  Letter<Generator> l{g, sign};
  return Word::reduce({&l, 1});
}

Word multiply(const Word& a, const Word& b) {
  std::vector<Letter<Generator>> all = a.letters();
  all.insert(all.end(), b.letters().begin(), b.letters().end());
  return Word::reduce(all);
}

Word invert(const Word& a) {
  auto inv = invert_letters<Generator>(a.letters());
  return Word::reduce(inv);  // already reduced; reduce keeps the invariant
}

void ExponentVector::add(Generator g, std::int64_t e) {
  if (e == 0) return;
  auto it = entries_.find(g);
  if (it == entries_.end()) {
    entries_.emplace(g, e);
  } else {
    it->second += e;
    if (it->second == 0) entries_.erase(it);
  }
}

std::int64_t ExponentVector::at(Generator g) const {
  auto it = entries_.find(g);
  return it == entries_.end() ? 0 : it->second;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  for (const auto& [g, e] : other.entries_) add(g, e);
  return *this;
}

ExponentVector abelianize(const Word& a) {
  ExponentVector v;
  for (const auto& l : a.letters()) v.add(l.gen, l.sign);
  return v;
}

void GeneratorMap::set(Generator g, Word image) {
  images_.insert_or_assign(g, std::move(image));
}

const Word* GeneratorMap::find(Generator g) const {
  auto it = images_.find(g);
  return it == images_.end() ? nullptr : &it->second;
}

Word GeneratorMap::image_of(Generator g, int sign) const {
  const Word* im = find(g);
  Word positive = im ? *im : Word::generator(g);
  return sign > 0 ? positive : invert(positive);
}

Word apply_map(const GeneratorMap& phi, const Word& a) {
  std::vector<Letter<Generator>> out;
  for (const auto& l : a.letters()) {
    Word im = phi.image_of(l.gen, l.sign);
    out.insert(out.end(), im.letters().begin(), im.letters().end());
  }
  return Word::reduce(out);
}

GeneratorMap compose(const GeneratorMap& phi, const GeneratorMap& psi) {
  GeneratorMap out;
  for (const auto& [g, w] : psi.images()) out.set(g, apply_map(phi, w));
  for (const auto& [g, w] : phi.images())
    if (!psi.find(g)) out.set(g, w);
  return out;
}

bool is_h1_trivial(const GeneratorMap& phi, std::span<const Generator> gens) {
  for (Generator g : gens) {
    ExponentVector unit;
    unit.add(g, 1);
    if (!(abelianize(phi.image_of(g, +1)) == unit)) return false;
  }
  return true;
}

std::string to_text(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    std::int64_t exp = static_cast<std::int64_t>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += alphabet_display_name(ls[i].gen.alphabet);
    out += '_';
    out += std::to_string(ls[i].gen.index);
    if (exp != 1) {
      out += '^';
      out += std::to_string(exp);
    }
    i = j;
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  std::int64_t value = 0;
  auto res = std::from_chars(text.data() + start, text.data() + pos, value);
  if (res.ec != std::errc{} || res.ptr != text.data() + pos || pos == start)
    throw ParseError(start, "expected an integer");
  return value;
}

}  // namespace

Word parse_word(std::string_view text, AlphabetId alphabet) {
  const std::string_view name = alphabet_display_name(alphabet);
  std::vector<Letter<Generator>> letters;
  std::size_t pos = 0;
  bool saw_token = false;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    saw_token = true;
    if (text[pos] == '1') {
      ++pos;
      continue;  // identity token
    }
    if (text.compare(pos, name.size(), name) != 0)
      throw ParseError(pos, "expected generator name '" + std::string(name) + "'");
    pos += name.size();
    if (pos >= text.size() || text[pos] != '_')
      throw ParseError(pos, "expected '_' after generator name");
    ++pos;
    std::int64_t index = parse_int(text, pos);
    if (index < 1) throw ParseError(pos, "generator index must be >= 1");
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = parse_int(text, pos);
      if (exp == 0) throw ParseError(pos, "exponent must be nonzero");
    }
    Generator g{alphabet, index};
    int sign = exp > 0 ? +1 : -1;
    for (std::int64_t k = 0; k < (exp > 0 ? exp : -exp); ++k)
      letters.push_back({g, sign});
  }
  if (!saw_token && !text.empty()) {
    // whitespace-only input is accepted as the identity
  }
  return Word::reduce(letters);
}

}  // namespace braidorder
