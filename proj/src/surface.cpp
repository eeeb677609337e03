#include "braidorder/surface.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace braidorder {

namespace {

using Letters = std::vector<Letter<Generator>>;

Letters cyclic_reduce(Letters w) {
  while (w.size() >= 2 && w.front().gen == w.back().gen &&
         w.front().sign == -w.back().sign) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

}  // namespace

SurfacePresentation::SurfacePresentation(int genus) : genus_(genus) {
  if (genus < 1)
    throw std::invalid_argument("SurfacePresentation: genus must be >= 1");
  Letters letters;
  for (int r = 1; r <= 2 * genus; ++r) letters.push_back({generator(r), +1});
  for (int r = 1; r <= 2 * genus; ++r) letters.push_back({generator(r), -1});
  relator_ = Word::reduce(letters);
}

Generator SurfacePresentation::generator(int r) const {
  if (r < 1 || r > 2 * genus_)
    throw std::invalid_argument("surface generator index out of range");
  return Generator{alphabets::surface_w, r};
}

std::vector<Generator> SurfacePresentation::generators() const {
  std::vector<Generator> gens;
  for (int r = 1; r <= 2 * genus_; ++r) gens.push_back(generator(r));
  return gens;
}

SurfaceElem::SurfaceElem(Word representative, int genus)
    : rep_(std::move(representative)), genus_(genus) {
  for (const auto& l : rep_.letters()) {
    if (l.gen.alphabet != alphabets::surface_w || l.gen.index < 1 ||
        l.gen.index > 2 * genus)
      throw std::invalid_argument("SurfaceElem: letter outside the alphabet");
  }
}

bool is_trivial(const Word& w, const SurfacePresentation& p) {
  if (p.genus() == 1) return abelianize(w).is_zero();

  // Dehn's algorithm. The symmetrized relator set: all cyclic conjugates of
  // r and r^-1; any subword strictly longer than half of one gets replaced
  // by the inverted complement, which strictly shortens the word.
  const int relator_len = 4 * p.genus();
  const int half = 2 * p.genus();
  std::vector<Letters> conjugates;
  {
    Letters base = p.relator().letters();
    Letters base_inv = invert_letters<Generator>(base);
    for (const Letters* side : {&base, &base_inv}) {
      for (int shift = 0; shift < relator_len; ++shift) {
        Letters rot(side->begin() + shift, side->end());
        rot.insert(rot.end(), side->begin(), side->begin() + shift);
        conjugates.push_back(std::move(rot));
      }
    }
  }

  Letters cur = w.letters();
  while (true) {
    cur = free_reduce(std::span<const Letter<Generator>>(cur),
                      std::equal_to<Generator>{});
    cur = cyclic_reduce(std::move(cur));
    if (cur.empty()) return true;

    const int n = static_cast<int>(cur.size());
    Letters doubled = cur;
    doubled.insert(doubled.end(), cur.begin(), cur.end());

    // Wraps are found in the doubled word; the word is then rotated (a
    // conjugation, preserving triviality) to make the match a prefix.
    bool replaced = false;
    for (int pos = 0; pos < n && !replaced; ++pos) {
      for (const Letters& s : conjugates) {
        const int limit = std::min(relator_len, n);
        int match = 0;
        while (match < limit && s[static_cast<std::size_t>(match)] ==
                                    doubled[static_cast<std::size_t>(pos + match)])
          ++match;
        if (match <= half) continue;
        Letters rotated(cur.begin() + pos, cur.end());
        rotated.insert(rotated.end(), cur.begin(), cur.begin() + pos);
        Letters complement(s.begin() + match, s.end());
        Letters next = invert_letters<Generator>(complement);
        next.insert(next.end(), rotated.begin() + match, rotated.end());
        cur = std::move(next);
        replaced = true;
        break;
      }
    }
    if (!replaced) return false;
  }
}

namespace {

Series monomial_series(const Monomial& m, int degree) {
  Series s(degree);
  s.accumulate(m, Rational(1));
  return s;
}

// Leading data for the local orientation: the mono_compare-greatest
// monomial among those of lowest degree.
std::pair<Monomial, Rational> leading_of(const Series& s) {
  auto it = s.terms().begin();  // natural order: first has lowest degree
  const int low = it->first.degree();
  auto best = it;
  for (; it != s.terms().end() && it->first.degree() == low; ++it) best = it;
  return *best;  // last of the lowest-degree block is lex-greatest
}

bool find_subword(const std::vector<VarId>& haystack,
                  const std::vector<VarId>& needle, std::size_t& pos_out) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  auto it = std::search(haystack.begin(), haystack.end(), needle.begin(),
                        needle.end());
  if (it == haystack.end()) return false;
  pos_out = static_cast<std::size_t>(it - haystack.begin());
  return true;
}

}  // namespace

Series reduce_series(std::span<const ReductionRule> rules, const Series& f) {
  const int d = f.truncation_degree();
  Series out(d);
  std::map<Monomial, Rational, MonoNaturalLess> work(f.terms().begin(),
                                                     f.terms().end());
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Monomial& m = node.key();
    const Rational c = node.mapped();
    if (sign_of(c) == 0) continue;

    const ReductionRule* hit = nullptr;
    std::size_t pos = 0;
    for (const auto& rule : rules) {
      if (find_subword(m.vars, rule.lhs.vars, pos)) {
        hit = &rule;
        break;
      }
    }
    if (!hit) {
      out.accumulate(m, c);
      continue;
    }
    Monomial prefix{{m.vars.begin(), m.vars.begin() + pos}};
    Monomial suffix{
        {m.vars.begin() + pos + hit->lhs.vars.size(), m.vars.end()}};
    for (const auto& [mt, ct] : hit->tail.terms()) {
      Monomial replaced = prefix * mt * suffix;
      if (replaced.degree() > d) continue;
      auto [it, inserted] = work.try_emplace(replaced, c * ct);
      if (!inserted) {
        it->second += c * ct;
        if (sign_of(it->second) == 0) work.erase(it);
      }
    }
  }
  return out;
}

ReductionSystem ReductionSystem::build(const SurfacePresentation& p,
                                       int degree) {
  if (degree < 2)
    throw std::invalid_argument("ReductionSystem: degree must be >= 2");
  ReductionSystem system(degree);
  auto& rules = system.rules_;

  std::vector<Series> pending;
  pending.push_back(
      sub(magnus_expand(p.relator(), degree), Series::one(degree)));

  auto requeue_rule = [&](const ReductionRule& r) {
    pending.push_back(sub(monomial_series(r.lhs, degree), r.tail));
  };

  int guard = 0;
  while (!pending.empty()) {
    if (++guard > 10000)
      throw std::runtime_error("reduction-system completion did not settle");
    Series s = reduce_series(rules, pending.back());
    pending.pop_back();
    if (s.is_zero()) continue;

    auto [lhs, coeff] = leading_of(s);
    if (sign_of(coeff) == 0)
      throw std::runtime_error("zero leading coefficient in completion");
    if (lhs.degree() == 0)
      throw std::runtime_error("ideal element with constant leading term");
    Series monic = scale(Rational(1) / coeff, s);
    ReductionRule rule{lhs, sub(monomial_series(lhs, degree), monic)};

    // Keep leading monomials an antichain: demote any rule whose lhs
    // contains the new one.
    for (std::size_t k = rules.size(); k-- > 0;) {
      std::size_t at = 0;
      if (find_subword(rules[k].lhs.vars, rule.lhs.vars, at)) {
        requeue_rule(rules[k]);
        rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(k));
      }
    }

    // Overlap compositions with every kept rule (including itself).
    auto queue_overlaps = [&](const ReductionRule& a, const ReductionRule& b) {
      const auto& u = a.lhs.vars;
      const auto& w = b.lhs.vars;
      const std::size_t max_l = std::min(u.size(), w.size()) - 1;
      for (std::size_t l = 1; l <= max_l; ++l) {
        if (u.size() + w.size() - l > static_cast<std::size_t>(degree))
          continue;
        if (!std::equal(u.end() - static_cast<std::ptrdiff_t>(l), u.end(),
                        w.begin()))
          continue;
        Monomial left{{u.begin(), u.end() - static_cast<std::ptrdiff_t>(l)}};
        Monomial right{{w.begin() + static_cast<std::ptrdiff_t>(l), w.end()}};
        Series via_a = mul(a.tail, monomial_series(right, degree));
        Series via_b = mul(monomial_series(left, degree), b.tail);
        pending.push_back(sub(via_a, via_b));
      }
    };
    for (const auto& other : rules) {
      queue_overlaps(rule, other);
      queue_overlaps(other, rule);
    }
    queue_overlaps(rule, rule);

    rules.push_back(std::move(rule));

    // Keep tails fully reduced.
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (auto& r : rules) {
        Series reduced = reduce_series(rules, r.tail);
        if (!(reduced == r.tail)) {
          r.tail = std::move(reduced);
          dirty = true;
        }
      }
    }
  }
  return system;
}

Series ReductionSystem::reduce(const Series& f) const {
  return reduce_series(rules_, truncate(f, degree_));
}

std::string ReductionSystem::to_json_text(int indent) const {
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& r : rules_) {
    nlohmann::json lhs = nlohmann::json::array();
    for (VarId v : r.lhs.vars) lhs.push_back(v);
    nlohmann::json tail = nlohmann::json::array();
    for (const auto& [m, c] : r.tail.terms()) {
      nlohmann::json mono = nlohmann::json::array();
      for (VarId v : m.vars) mono.push_back(v);
      tail.push_back({{"mono", mono}, {"coeff", to_string(c)}});
    }
    rules.push_back({{"lhs", lhs}, {"tail", tail}});
  }
  nlohmann::json j{
      {"schema", "reduction-system/1"}, {"degree", degree_}, {"rules", rules}};
  return j.dump(indent);
}

SurfaceGroup::SurfaceGroup(int genus) : pres_(genus) {}

SurfaceElem SurfaceGroup::element(const Word& w) const {
  return SurfaceElem(w, genus());
}

SurfaceElem SurfaceGroup::element(std::string_view text) const {
  return element(parse_word(text, alphabets::surface_w));
}

SurfaceElem SurfaceGroup::multiply(const SurfaceElem& a,
                                   const SurfaceElem& b) const {
  return SurfaceElem(braidorder::multiply(a.representative(),
                                          b.representative()),
                     genus());
}

SurfaceElem SurfaceGroup::invert(const SurfaceElem& a) const {
  return SurfaceElem(braidorder::invert(a.representative()), genus());
}

bool SurfaceGroup::is_trivial(const Word& w) const {
  return braidorder::is_trivial(w, pres_);
}

bool SurfaceGroup::equal(const SurfaceElem& a, const SurfaceElem& b) const {
  if (a.genus() != genus() || b.genus() != genus())
    throw std::invalid_argument("SurfaceGroup: genus mismatch");
  return is_trivial(braidorder::multiply(braidorder::invert(a.representative()),
                                         b.representative()));
}

const ReductionSystem& SurfaceGroup::reduction_system(int degree) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = systems_.find(degree);
  if (it == systems_.end()) {
    auto built = std::make_shared<const ReductionSystem>(
        ReductionSystem::build(pres_, degree));
    it = systems_.emplace(degree, std::move(built)).first;
  }
  return *it->second;
}

Series SurfaceGroup::expand(const SurfaceElem& e, int degree) const {
  const std::string key =
      std::to_string(degree) + "|" + to_text(e.representative());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = expand_memo_.find(key);
    if (it != expand_memo_.end()) return it->second;
  }
  const ReductionSystem& system = reduction_system(degree);
  // Reducing after each letter keeps intermediates in normal form; the
  // result equals reducing the full expansion because reduction is modulo
  // a two-sided ideal.
  Series acc = Series::one(degree);
  for (const auto& l : e.representative().letters()) {
    Series gen = generator_series(static_cast<VarId>(l.gen.index), l.sign,
                                  degree);
    acc = system.reduce(mul(acc, gen));
  }
  std::lock_guard<std::mutex> lock(mu_);
  return expand_memo_.emplace(key, std::move(acc)).first->second;
}

Ordering SurfaceGroup::compare(const SurfaceElem& a, const SurfaceElem& b,
                               const CompareParams& params) const {
  params.validate();
  if (equal(a, b)) return Ordering::equal;
  int d = std::max(2, params.initial_degree);
  const int cap = std::max(d, params.degree_cap);
  while (true) {
    switch (series_compare(expand(a, d), expand(b, d))) {
      case SeriesOrdering::less: return Ordering::less;
      case SeriesOrdering::greater: return Ordering::greater;
      case SeriesOrdering::equal_at_degree: break;
    }
    if (d >= cap) throw UndecidedAtCap(cap);
    d = std::min(d * 2, cap);
  }
}

OrderedGroup<SurfaceElem> SurfaceGroup::ordered_group(
    CompareParams params) const {
  return OrderedGroup<SurfaceElem>{
      .identity = identity(),
      .multiply = [this](const SurfaceElem& a,
                         const SurfaceElem& b) { return multiply(a, b); },
      .invert = [this](const SurfaceElem& a) { return invert(a); },
      .compare = [this, params](const SurfaceElem& a, const SurfaceElem& b) {
        return compare(a, b, params);
      },
      .describe =
          [](const SurfaceElem& e) { return to_text(e.representative()); },
  };
}

}  // namespace braidorder
