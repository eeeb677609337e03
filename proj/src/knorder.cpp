#include "braidorder/knorder.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "braidorder/magnus.hpp"

namespace braidorder {

KnOrder::KnOrder(int n, std::shared_ptr<const SurfaceGroup> surface,
                 CompareParams params)
    : n_(n), surface_(std::move(surface)), params_(params) {
  if (n < 1) throw std::invalid_argument("KnOrder: need n >= 1");
  if (!surface_) throw std::invalid_argument("KnOrder: null surface group");
  params_.validate();
}

FGen KnOrder::fgen(int i, int j, SurfaceElem gamma) const {
  if (!(1 <= i && i < j && j <= n_))
    throw std::invalid_argument("FGen: need 1 <= i < j <= n");
  if (gamma.genus() != surface_->genus())
    throw std::invalid_argument("FGen: gamma genus mismatch");
  return FGen(i, j, std::move(gamma));
}

bool KnOrder::fgen_equal(const FGen& a, const FGen& b) const {
  return a.i == b.i && a.j == b.j && surface_->equal(a.gamma, b.gamma);
}

Ordering KnOrder::fgen_compare(const FGen& a, const FGen& b) const {
  if (a.i != b.i)
    throw std::invalid_argument(
        "fgen_compare: generators from different families");
  if (a.j != b.j) return a.j < b.j ? Ordering::less : Ordering::greater;
  return surface_->compare(a.gamma, b.gamma, params_);
}

FWord KnOrder::word(std::span<const FLetter> letters) const {
  auto eq = [this](const FGen& a, const FGen& b) { return fgen_equal(a, b); };
  return FWord{free_reduce(letters, eq)};
}

FWord KnOrder::word(std::initializer_list<FLetter> letters) const {
  return word(std::span<const FLetter>(letters.begin(), letters.size()));
}

FWord KnOrder::multiply(const FWord& u, const FWord& v) const {
  std::vector<FLetter> all = u.letters;
  all.insert(all.end(), v.letters.begin(), v.letters.end());
  return word(all);
}

FWord KnOrder::invert(const FWord& u) const {
  return FWord{invert_letters<FGen>(u.letters)};
}

bool KnOrder::words_equal(const FWord& u, const FWord& v) const {
  if (u.letters.size() != v.letters.size()) return false;
  for (std::size_t k = 0; k < u.letters.size(); ++k) {
    if (u.letters[k].sign != v.letters[k].sign ||
        !fgen_equal(u.letters[k].gen, v.letters[k].gen))
      return false;
  }
  return true;
}

Ordering KnOrder::factor_compare(const FWord& u, const FWord& v) const {
  for (const FWord* w : {&u, &v}) {
    for (std::size_t k = 1; k < w->letters.size(); ++k)
      if (w->letters[k].gen.i != w->letters[0].gen.i)
        throw std::invalid_argument("factor_compare: mixed families");
  }
  if (!u.letters.empty() && !v.letters.empty() &&
      u.letters[0].gen.i != v.letters[0].gen.i)
    throw std::invalid_argument("factor_compare: words from different families");
  if (words_equal(u, v)) return Ordering::equal;

  // The finitely many distinct generators in play, in the generator order.
  std::vector<const FGen*> distinct;
  auto note = [&](const FGen& f) {
    for (const FGen* seen : distinct)
      if (fgen_equal(*seen, f)) return;
    distinct.push_back(&f);
  };
  for (const auto& l : u.letters) note(l.gen);
  for (const auto& l : v.letters) note(l.gen);
  std::sort(distinct.begin(), distinct.end(),
            [this](const FGen* a, const FGen* b) {
              return fgen_compare(*a, *b) == Ordering::less;
            });

  // Variables ranked in reverse so that single-letter words order like the
  // generators themselves.
  auto var_of = [&](const FGen& f) {
    for (std::size_t t = 0; t < distinct.size(); ++t)
      if (fgen_equal(*distinct[t], f))
        return static_cast<VarId>(distinct.size() - 1 - t);
    throw std::logic_error("factor_compare: unranked generator");
  };
  auto to_letters = [&](const FWord& w) {
    std::vector<std::pair<VarId, int>> out;
    out.reserve(w.letters.size());
    for (const auto& l : w.letters) out.push_back({var_of(l.gen), l.sign});
    return out;
  };
  const auto lu = to_letters(u);
  const auto lv = to_letters(v);

  int d = params_.initial_degree;
  while (true) {
    switch (series_compare(expand_letters(lu, d), expand_letters(lv, d))) {
      case SeriesOrdering::less: return Ordering::less;
      case SeriesOrdering::greater: return Ordering::greater;
      case SeriesOrdering::equal_at_degree: break;
    }
    if (d >= params_.degree_cap) throw UndecidedAtCap(params_.degree_cap);
    d = std::min(d * 2, params_.degree_cap);
  }
}

KnElement KnOrder::element(std::vector<FWord> components) const {
  if (static_cast<int>(components.size()) != n_ - 1)
    throw std::invalid_argument("KnElement: need n-1 components");
  for (std::size_t p = 0; p < components.size(); ++p) {
    for (const auto& l : components[p].letters)
      if (l.gen.i != static_cast<int>(p) + 1)
        throw std::invalid_argument(
            "KnElement: component " + std::to_string(p + 1) +
            " contains a generator of family " + std::to_string(l.gen.i));
  }
  return KnElement{std::move(components)};
}

KnElement KnOrder::identity() const {
  return KnElement{std::vector<FWord>(static_cast<std::size_t>(n_ - 1))};
}

bool KnOrder::elements_equal(const KnElement& a, const KnElement& b) const {
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t p = 0; p < a.components.size(); ++p)
    if (!words_equal(a.components[p], b.components[p])) return false;
  return true;
}

Ordering KnOrder::kn_compare(const KnElement& a, const KnElement& b) const {
  if (a.strands() != n_ || b.strands() != n_)
    throw std::invalid_argument("kn_compare: strand count mismatch");
  for (std::size_t p = a.components.size(); p-- > 0;) {
    if (!words_equal(a.components[p], b.components[p]))
      return factor_compare(a.components[p], b.components[p]);
  }
  return Ordering::equal;
}

FGen KnOrder::psi_action(const ActionLabel& l, const FGen& f,
                         bool inverse) const {
  if (l.i < 1 || l.i > n_)
    throw std::invalid_argument("psi_action: strand index out of range");
  if (l.r < 1 || l.r > 2 * surface_->genus())
    throw std::invalid_argument("psi_action: wall index out of range");
  if (l.i != f.i && l.i != f.j) return f;
  const Word wall = Word::generator(surface_->presentation().generator(l.r));
  Word rep = f.gamma.representative();
  Word image;
  if (l.i == f.i) {
    Word left = inverse ? braidorder::invert(wall) : wall;
    image = braidorder::multiply(left, rep);
  } else {
    Word right = inverse ? wall : braidorder::invert(wall);
    image = braidorder::multiply(rep, right);
  }
  return FGen(f.i, f.j, SurfaceElem(image, surface_->genus()));
}

KnElement KnOrder::psi_extend(const ActionLabel& l, const KnElement& k,
                              bool inverse) const {
  std::vector<FWord> components;
  components.reserve(k.components.size());
  for (const auto& comp : k.components) {
    std::vector<FLetter> letters;
    letters.reserve(comp.letters.size());
    for (const auto& fl : comp.letters)
      letters.push_back({psi_action(l, fl.gen, inverse), fl.sign});
    components.push_back(word(letters));
  }
  return KnElement{std::move(components)};
}

void require_h1_trivial_twists(std::span<const SemidirectTwist> twists) {
  for (const auto& t : twists) {
    if (!is_h1_trivial(t.map, t.domain))
      throw std::invalid_argument(
          "semidirect action twist is not H1-trivial on its domain");
  }
}

BraidWord t_word(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("t_word: need 1 <= i < j <= n");
  std::vector<BraidLetter> ls;
  for (int k = i; k <= j - 2; ++k) ls.push_back({k, +1});
  ls.push_back({j - 1, +1});
  ls.push_back({j - 1, +1});
  for (int k = j - 2; k >= i; --k) ls.push_back({k, -1});
  return BraidWord(n, std::move(ls));
}

std::string KnOrder::to_text(const FGen& f) const {
  return "f[" + std::to_string(f.i) + "," + std::to_string(f.j) + "," +
         braidorder::to_text(f.gamma.representative()) + "]";
}

std::string KnOrder::to_text(const FWord& u) const {
  if (u.letters.empty()) return "1";
  std::string out;
  std::size_t k = 0;
  const auto& ls = u.letters;
  while (k < ls.size()) {
    std::size_t j = k;
    while (j < ls.size() && ls[j].sign == ls[k].sign &&
           fgen_equal(ls[j].gen, ls[k].gen))
      ++j;
    std::int64_t exp = static_cast<std::int64_t>(j - k) * ls[k].sign;
    if (!out.empty()) out += ' ';
    out += to_text(ls[k].gen);
    if (exp != 1) out += '^' + std::to_string(exp);
    k = j;
  }
  return out;
}

std::string KnOrder::to_text(const KnElement& k) const {
  std::string out;
  for (std::size_t p = 0; p < k.components.size(); ++p) {
    if (p > 0) out += " ; ";
    out += to_text(k.components[p]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::int64_t parse_int_at(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  std::int64_t value = 0;
  auto res = std::from_chars(text.data() + start, text.data() + pos, value);
  if (res.ec != std::errc{} || pos == start)
    throw ParseError(start, "expected an integer");
  return value;
}

}  // namespace

KnElement KnOrder::parse_element(std::string_view text) const {
  std::vector<FWord> components(static_cast<std::size_t>(n_ - 1));
  std::size_t component = 0;
  std::size_t pos = 0;
  std::vector<FLetter> letters;

  auto flush = [&]() {
    if (component >= components.size()) {
      if (!letters.empty()) throw ParseError(pos, "more components than n-1");
      return;
    }
    components[component] = word(letters);
    letters.clear();
  };

  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == ';') {
      flush();
      ++component;
      ++pos;
      continue;
    }
    if (c == '1') {
      ++pos;
      continue;
    }
    if (c != 'f' || pos + 1 >= text.size() || text[pos + 1] != '[')
      throw ParseError(pos, "expected 'f[i,j,<word>]'");
    pos += 2;
    std::int64_t i = parse_int_at(text, pos);
    if (pos >= text.size() || text[pos] != ',')
      throw ParseError(pos, "expected ',' after first index");
    ++pos;
    std::int64_t j = parse_int_at(text, pos);
    if (pos >= text.size() || text[pos] != ',')
      throw ParseError(pos, "expected ',' after second index");
    ++pos;
    std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos)
      throw ParseError(pos, "missing ']'");
    Word gamma = parse_word(text.substr(pos, close - pos),
                            alphabets::surface_w);
    pos = close + 1;
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = parse_int_at(text, pos);
      if (exp == 0) throw ParseError(pos, "exponent must be nonzero");
    }
    FGen f = fgen(static_cast<int>(i), static_cast<int>(j),
                  SurfaceElem(gamma, surface_->genus()));
    const int sign = exp > 0 ? +1 : -1;
    for (std::int64_t k = 0; k < (exp > 0 ? exp : -exp); ++k)
      letters.push_back({f, sign});
  }
  flush();
  return element(std::move(components));
}

}  // namespace braidorder
