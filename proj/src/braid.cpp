#include "braidorder/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <nlohmann/json.hpp>
#include <numeric>

namespace braidorder {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 2)
    throw std::invalid_argument("BraidWord: need at least 2 strands");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands - 1)
      throw std::invalid_argument("BraidWord: generator index out of range");
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("BraidWord: sign must be +1 or -1");
  }
}

BraidWord BraidWord::sigma(int strands, int index, int sign) {
  return BraidWord(strands, {{index, sign}});
}

BraidWord BraidWord::sigma_power(int strands, int index, int exponent) {
  std::vector<BraidLetter> ls;
  const int sign = exponent >= 0 ? +1 : -1;
  for (int k = 0; k < std::abs(exponent); ++k) ls.push_back({index, sign});
  return BraidWord(strands, std::move(ls));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> ls;
  ls.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    ls.push_back({it->index, -it->sign});
  return BraidWord(strands_, std::move(ls));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("braid product: strand counts differ");
  std::vector<BraidLetter> ls = a.letters_;
  ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.strands(), std::move(ls));
}

namespace {

Generator strand_gen(int k) { return Generator{alphabets::free_x, k}; }

// One elementary substitution, applied to every letter of w.
Word apply_sigma(int i, int sign, const Word& w) {
  std::vector<Letter<Generator>> out;
  out.reserve(3 * w.length());
  const Generator xi = strand_gen(i);
  const Generator xj = strand_gen(i + 1);
  for (const auto& l : w.letters()) {
    if (sign > 0 && l.gen == xi) {
      // x_i -> x_i x_{i+1} x_i^-1
      if (l.sign > 0) {
        out.push_back({xi, +1});
        out.push_back({xj, +1});
        out.push_back({xi, -1});
      } else {
        out.push_back({xi, +1});
        out.push_back({xj, -1});
        out.push_back({xi, -1});
      }
    } else if (sign > 0 && l.gen == xj) {
      out.push_back({xi, l.sign});  // x_{i+1} -> x_i
    } else if (sign < 0 && l.gen == xi) {
      out.push_back({xj, l.sign});  // x_i -> x_{i+1}
    } else if (sign < 0 && l.gen == xj) {
      // x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
      if (l.sign > 0) {
        out.push_back({xj, -1});
        out.push_back({xi, +1});
        out.push_back({xj, +1});
      } else {
        out.push_back({xj, -1});
        out.push_back({xi, -1});
        out.push_back({xj, +1});
      }
    } else {
      out.push_back(l);
    }
  }
  return Word::reduce(out);
}

}  // namespace

Word artin_apply(const BraidWord& b, const Word& w) {
  // Action of a product composes left over right.
  Word cur = w;
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it)
    cur = apply_sigma(it->index, it->sign, cur);
  return cur;
}

GeneratorMap artin_action(const BraidWord& b) {
  GeneratorMap phi;
  for (int k = 1; k <= b.strands(); ++k)
    phi.set(strand_gen(k), artin_apply(b, Word::generator(strand_gen(k))));
  return phi;
}

bool braid_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("braid_equal: strand counts differ");
  for (int k = 1; k <= u.strands(); ++k) {
    Word x = Word::generator(strand_gen(k));
    if (!(artin_apply(u, x) == artin_apply(v, x))) return false;
  }
  return true;
}

BraidWord delta_word(int n) {
  if (n < 2) throw std::invalid_argument("delta_word: need n >= 2");
  std::vector<BraidLetter> ls;
  for (int block = n - 1; block >= 1; --block)
    for (int i = 1; i <= block; ++i) ls.push_back({i, +1});
  return BraidWord(n, std::move(ls));
}

BraidWord mirror(const BraidWord& b) {
  std::vector<BraidLetter> ls;
  ls.reserve(b.length());
  for (const auto& l : b.letters())
    ls.push_back({b.strands() - l.index, -l.sign});
  return BraidWord(b.strands(), std::move(ls));
}

BraidWord gamma_conjugate(const BraidWord& b) { return mirror(b); }

std::vector<int> permutation_of(const BraidWord& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.strands()));
  std::iota(perm.begin(), perm.end(), 1);
  for (const auto& l : b.letters())
    std::swap(perm[static_cast<std::size_t>(l.index - 1)],
              perm[static_cast<std::size_t>(l.index)]);
  return perm;
}

bool is_pure(const BraidWord& b) {
  std::vector<int> perm = permutation_of(b);
  for (std::size_t p = 0; p < perm.size(); ++p)
    if (perm[p] != static_cast<int>(p) + 1) return false;
  return true;
}

CheckReport check_delta_relation(int n) {
  CheckReport report;
  const BraidWord delta = delta_word(n);
  for (int i = 1; i <= n - 1; ++i) {
    ++report.checked;
    BraidWord lhs = delta * BraidWord::sigma(n, i) * delta.inverse();
    BraidWord rhs = BraidWord::sigma(n, n - i);
    if (!braid_equal(lhs, rhs))
      report.note("n=" + std::to_string(n) + ", i=" + std::to_string(i),
                  "Delta s_i Delta^-1 = s_" + std::to_string(n - i),
                  "not equal");
  }
  return report;
}

CheckReport mirror_respects_relations(int n) {
  CheckReport report;
  for (int i = 1; i + 1 <= n - 1; ++i) {
    ++report.checked;
    BraidWord lhs = BraidWord::sigma(n, i) * BraidWord::sigma(n, i + 1) *
                    BraidWord::sigma(n, i);
    BraidWord rhs = BraidWord::sigma(n, i + 1) * BraidWord::sigma(n, i) *
                    BraidWord::sigma(n, i + 1);
    if (!braid_equal(mirror(lhs), mirror(rhs)))
      report.note("braid relation i=" + std::to_string(i),
                  "mirror(lhs) = mirror(rhs)", "not equal");
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      ++report.checked;
      BraidWord lhs = BraidWord::sigma(n, i) * BraidWord::sigma(n, j);
      BraidWord rhs = BraidWord::sigma(n, j) * BraidWord::sigma(n, i);
      if (!braid_equal(mirror(lhs), mirror(rhs)))
        report.note("far commutation (" + std::to_string(i) + "," +
                        std::to_string(j) + ")",
                    "mirror(lhs) = mirror(rhs)", "not equal");
    }
  }
  return report;
}

BraidWord apply_model_conjugator(ModelConjugator c, const BraidWord& b) {
  switch (c) {
    case ModelConjugator::trivial: return b;
    case ModelConjugator::gamma_delta: {
      const BraidWord delta = delta_word(b.strands());
      return gamma_conjugate(delta * b * delta.inverse());
    }
  }
  throw std::logic_error("unknown conjugator");
}

namespace {

struct StepOutcome {
  CertStep step;
  bool passed;
};

std::vector<StepOutcome> gt_certificate_steps(int n, int i) {
  std::vector<StepOutcome> out;
  const BraidWord delta = delta_word(n);
  const BraidWord g = BraidWord::sigma_power(n, i, 2);
  const BraidWord mirrored = BraidWord::sigma_power(n, n - i, 2);
  const BraidWord empty(n);

  {
    bool ok = braid_equal(delta * g * delta.inverse(), mirrored);
    out.push_back({{"Delta s_i^2 Delta^-1 = s_{n-i}^2 in B_n(D)", true,
                    to_text(delta * g * delta.inverse()) + " = " +
                        to_text(mirrored)},
                   ok});
  }
  {
    bool ok = braid_equal(apply_model_conjugator(ModelConjugator::gamma_delta, g),
                          BraidWord::sigma_power(n, i, -2));
    out.push_back(
        {{"(GammaDelta) s_i^2 (GammaDelta)^-1 = mirror(Delta s_i^2 Delta^-1) "
          "= s_i^-2",
          true,
          "mirror(" + to_text(mirrored) + ") = " +
              to_text(BraidWord::sigma_power(n, i, -2))},
         ok});
  }
  {
    BraidWord product =
        g * apply_model_conjugator(ModelConjugator::gamma_delta, g);
    bool ok = braid_equal(product, empty);
    out.push_back({{"s_i^2 * [(GammaDelta) s_i^2 (GammaDelta)^-1] = 1", true,
                    to_text(product) + " = 1"},
                   ok});
  }
  {
    bool ok = !braid_equal(g, empty);
    out.push_back(
        {{"s_i^2 != 1 in B_n(D), via the Artin action", true, to_text(g)},
         ok});
  }
  {
    bool ok = is_pure(g);
    out.push_back({{"s_i^2 is a pure braid", true, to_text(g)}, ok});
  }
  {
    // Delta induces the order-reversing permutation; composed with the
    // wall-crossing reversal the modelled conjugator GammaDelta is pure.
    std::vector<int> perm = permutation_of(delta);
    bool ok = true;
    for (std::size_t p = 0; p < perm.size(); ++p)
      ok = ok && perm[p] == n - static_cast<int>(p);
    out.push_back({{"Delta induces the order-reversing permutation, so the "
                    "GammaDelta conjugator is pure",
                    true, to_text(delta)},
                   ok});
  }
  out.push_back(
      {{"identities verified in B_n(D) hold in B_n(N) and B_n(M): isotopies "
        "extend by the identity outside the disc",
        false, "assumed (cited)"},
       true});
  out.push_back(
      {{"B_n(D) embeds in B_n(M) for closed M other than the sphere and the "
        "projective plane, so s_i^2 != 1 transfers to PB_n(M)",
        false, "assumed (cited)"},
       true});
  return out;
}

}  // namespace

bool GtCertificate::verify() const {
  auto outcomes = gt_certificate_steps(n, i);
  for (const auto& o : outcomes)
    if (o.step.checked && !o.passed) return false;
  return true;
}

std::string GtCertificate::to_json_text(int indent) const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps)
    steps_json.push_back({{"claim", s.claim},
                          {"status", s.checked ? "checked" : "assumed"},
                          {"detail", s.detail}});
  nlohmann::json j{{"schema", "gt-certificate/1"},
                   {"n", n},
                   {"i", i},
                   {"surface", surface},
                   {"g_word", to_text(g_word)},
                   {"conjugators", conjugators},
                   {"steps", steps_json},
                   {"valid", valid}};
  return j.dump(indent);
}

GtCertificate make_gt_certificate(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1)
    throw std::invalid_argument("make_gt_certificate: need n >= 2, 1 <= i <= n-1");
  GtCertificate cert{.n = n,
                     .i = i,
                     .surface = "nonorientable",
                     .g_word = BraidWord::sigma_power(n, i, 2),
                     .conjugators = {"1", "GammaDelta"},
                     .steps = {},
                     .valid = false};
  for (auto& outcome : gt_certificate_steps(n, i)) {
    cert.steps.push_back(outcome.step);
    if (outcome.step.checked && !outcome.passed)
      throw std::runtime_error("gt certificate check failed: " +
                               outcome.step.claim);
  }
  cert.valid = true;
  return cert;
}

std::string to_text(const BraidWord& b) {
  if (b.letters().empty()) return "1";
  std::string out;
  const auto& ls = b.letters();
  std::size_t k = 0;
  while (k < ls.size()) {
    std::size_t j = k;
    while (j < ls.size() && ls[j] == ls[k]) ++j;
    std::int64_t exp = static_cast<std::int64_t>(j - k) * ls[k].sign;
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(ls[k].index);
    if (exp != 1) out += '^' + std::to_string(exp);
    k = j;
  }
  return out;
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  std::vector<BraidLetter> letters;
  std::size_t pos = 0;
  auto parse_int = [&](std::size_t at) {
    std::size_t p = at;
    if (p < text.size() && (text[p] == '-' || text[p] == '+')) ++p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
      ++p;
    std::int64_t value = 0;
    auto res = std::from_chars(text.data() + at, text.data() + p, value);
    if (res.ec != std::errc{} || p == at)
      throw ParseError(at, "expected an integer");
    pos = p;
    return value;
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] == '1') {
      ++pos;
      continue;
    }
    if (text[pos] != 's') throw ParseError(pos, "expected 's<index>'");
    std::int64_t index = parse_int(pos + 1);
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      exp = parse_int(pos + 1);
      if (exp == 0) throw ParseError(pos, "exponent must be nonzero");
    }
    if (index < 1 || index > strands - 1)
      throw ParseError(pos, "braid generator index out of range");
    const int sign = exp > 0 ? +1 : -1;
    for (std::int64_t k = 0; k < (exp > 0 ? exp : -exp); ++k)
      letters.push_back({static_cast<int>(index), sign});
  }
  return BraidWord(strands, std::move(letters));
}

}  // namespace braidorder
