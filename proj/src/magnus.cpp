#include "braidorder/magnus.hpp"

#include <stdexcept>

namespace braidorder {

Series generator_series(VarId v, int sign, int degree) {
  Series s = Series::one(degree);
  if (sign > 0) {
    s.accumulate(Monomial{{v}}, Rational(1));
    return s;
  }
  Monomial power;
  Rational coeff(1);
  for (int k = 1; k <= degree; ++k) {
    power.vars.push_back(v);
    coeff = -coeff;
    s.accumulate(power, coeff);
  }
  return s;
}

Series expand_letters(std::span<const std::pair<VarId, int>> letters,
                      int degree) {
  Series acc = Series::one(degree);
  for (const auto& [v, sign] : letters)
    acc = mul(acc, generator_series(v, sign, degree));
  return acc;
}

Series magnus_expand(const Word& w, int degree) {
  std::vector<std::pair<VarId, int>> letters;
  letters.reserve(w.length());
  for (const auto& l : w.letters())
    letters.push_back({static_cast<VarId>(l.gen.index), l.sign});
  return expand_letters(letters, degree);
}

Ordering magnus_compare(const Word& a, const Word& b, const VariableOrder& vo,
                        const CompareParams& params) {
  params.validate();
  if (a == b) return Ordering::equal;
  int d = params.initial_degree;
  while (true) {
    switch (series_compare(magnus_expand(a, d), magnus_expand(b, d), vo)) {
      case SeriesOrdering::less: return Ordering::less;
      case SeriesOrdering::greater: return Ordering::greater;
      case SeriesOrdering::equal_at_degree: break;
    }
    if (d >= params.degree_cap) throw UndecidedAtCap(params.degree_cap);
    d = std::min(d * 2, params.degree_cap);
  }
}

OrderedGroup<Word> magnus_ordered_group(VariableOrder vo,
                                        CompareParams params) {
  OrderedGroup<Word> G;
  G.identity = Word{};
  G.multiply = [](const Word& a, const Word& b) { return multiply(a, b); };
  G.invert = [](const Word& a) { return invert(a); };
  G.compare = [vo, params](const Word& a, const Word& b) {
    return magnus_compare(a, b, vo, params);
  };
  G.describe = [](const Word& w) { return to_text(w); };
  return G;
}

CheckReport check_order_preserved_by(
    const GeneratorMap& phi, const OrderedGroup<Word>& G,
    std::span<const std::pair<Word, Word>> pairs) {
  CheckReport report;
  for (const auto& [a, b] : pairs) {
    Ordering o = G.compare(a, b);
    if (o == Ordering::equal) continue;
    const Word& lo = o == Ordering::less ? a : b;
    const Word& hi = o == Ordering::less ? b : a;
    ++report.checked;
    Ordering image = G.compare(apply_map(phi, lo), apply_map(phi, hi));
    if (image != Ordering::less)
      report.note("a=" + to_text(lo) + ", b=" + to_text(hi),
                  "phi(a) < phi(b)", to_string(image));
  }
  return report;
}

}  // namespace braidorder
