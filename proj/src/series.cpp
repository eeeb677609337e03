#include "braidorder/series.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace braidorder {

Ordering mono_compare(const Monomial& m1, const Monomial& m2,
                      const VariableOrder& vo) {
  if (m1.degree() != m2.degree())
    return m1.degree() < m2.degree() ? Ordering::less : Ordering::greater;
  for (std::size_t i = 0; i < m1.vars.size(); ++i) {
    Ordering o = vo.compare(m1.vars[i], m2.vars[i]);
    if (o != Ordering::equal) return o;
  }
  return Ordering::equal;
}

Series::Series(int truncation_degree) : degree_(truncation_degree) {
  if (truncation_degree < 0)
    throw std::invalid_argument("Series: truncation degree must be >= 0");
}

Series Series::one(int degree) { return constant(Rational(1), degree); }

Series Series::constant(const Rational& c, int degree) {
  Series s(degree);
  s.accumulate(Monomial{}, c);
  return s;
}

Series Series::variable(VarId v, int degree) {
  Series s(degree);
  s.accumulate(Monomial{{v}}, Rational(1));
  return s;
}

Rational Series::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Series::accumulate(const Monomial& m, const Rational& c) {
  if (sign_of(c) == 0 || m.degree() > degree_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sign_of(it->second) == 0) terms_.erase(it);
  }
}

Series add(const Series& f, const Series& g) {
  Series out(std::min(f.truncation_degree(), g.truncation_degree()));
  for (const auto& [m, c] : f.terms()) out.accumulate(m, c);
  for (const auto& [m, c] : g.terms()) out.accumulate(m, c);
  return out;
}

Series sub(const Series& f, const Series& g) {
  Series out(std::min(f.truncation_degree(), g.truncation_degree()));
  for (const auto& [m, c] : f.terms()) out.accumulate(m, c);
  for (const auto& [m, c] : g.terms()) out.accumulate(m, -c);
  return out;
}

Series scale(const Rational& q, const Series& f) {
  Series out(f.truncation_degree());
  if (sign_of(q) == 0) return out;
  for (const auto& [m, c] : f.terms()) out.accumulate(m, q * c);
  return out;
}

Series mul(const Series& f, const Series& g) {
  const int d = std::min(f.truncation_degree(), g.truncation_degree());
  Series out(d);
  // Terms are degree-sorted, so both loops can stop early.
  for (const auto& [mf, cf] : f.terms()) {
    if (mf.degree() > d) break;
    const int room = d - mf.degree();
    for (const auto& [mg, cg] : g.terms()) {
      if (mg.degree() > room) break;
      out.accumulate(mf * mg, cf * cg);
    }
  }
  return out;
}

Series truncate(const Series& f, int degree) {
  Series out(degree);
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() > degree) break;
    out.accumulate(m, c);
  }
  return out;
}

Series unit_inverse(const Series& f) {
  if (!(f.constant_coeff() == Rational(1)))
    throw std::domain_error("unit_inverse: constant coefficient must be 1");
  const int d = f.truncation_degree();
  Series minus_eta = sub(Series::zero(d), f);
  minus_eta.accumulate(Monomial{}, Rational(1));  // -eta = 1 - f
  Series acc = Series::one(d);
  Series power = Series::one(d);
  for (int k = 1; k <= d && !power.is_zero(); ++k) {
    power = mul(power, minus_eta);
    acc = add(acc, power);
  }
  return acc;
}

std::optional<std::pair<Monomial, Rational>> lowest_term(
    const Series& f, const VariableOrder& vo) {
  if (f.is_zero()) return std::nullopt;
  if (vo.is_natural()) return *f.terms().begin();
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (mono_compare(it->first, best->first, vo) == Ordering::less) best = it;
  return *best;
}

SeriesOrdering series_compare(const Series& f, const Series& g,
                              const VariableOrder& vo) {
  const int d = std::min(f.truncation_degree(), g.truncation_degree());
  Series diff = sub(truncate(g, d), truncate(f, d));
  auto lt = lowest_term(diff, vo);
  if (!lt) return SeriesOrdering::equal_at_degree;
  return sign_of(lt->second) > 0 ? SeriesOrdering::less
                                 : SeriesOrdering::greater;
}

std::string to_text(const Series& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    const int s = sign_of(c);
    Rational abs_c = s < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (s < 0) out += "-";
    } else {
      out += s < 0 ? " - " : " + ";
    }
    const bool unit = abs_c == Rational(1);
    if (!unit || m.is_constant()) out += to_string(abs_c);
    if (!m.is_constant()) {
      for (std::size_t i = 0; i < m.vars.size(); ++i) {
        if (i > 0 || !unit) out += ' ';
        out += "X_" + std::to_string(m.vars[i]);
      }
    }
  }
  return out;
}

std::string to_json_text(const Series& f, int indent) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::json mono = nlohmann::json::array();
    for (VarId v : m.vars) mono.push_back(v);
    terms.push_back({{"mono", mono}, {"coeff", to_string(c)}});
  }
  nlohmann::json j{{"schema", "series/1"},
                   {"degree", f.truncation_degree()},
                   {"terms", terms}};
  return j.dump(indent);
}

}  // namespace braidorder
