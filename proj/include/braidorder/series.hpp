// Truncated non-commutative formal power series over ordered variables,
// with the degree-then-lexicographic monomial order and the series order:
// f comes before g when the lowest term of g - f has positive coefficient.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidorder/order.hpp"
#include "braidorder/rational.hpp"

namespace braidorder {

using VarId = std::int32_t;

// A word in the variables; the empty sequence is the constant monomial.
struct Monomial {
  std::vector<VarId> vars;

  Monomial() = default;
  explicit Monomial(std::vector<VarId> v) : vars(std::move(v)) {}

  int degree() const { return static_cast<int>(vars.size()); }
  bool is_constant() const { return vars.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.vars.reserve(a.vars.size() + b.vars.size());
    m.vars = a.vars;
    m.vars.insert(m.vars.end(), b.vars.begin(), b.vars.end());
    return m;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Total order on variables. The natural order (VarId integer order) is the
// common case and keeps lowest_term O(1); custom comparators serve the
// structured alphabets and the order-preservation harness.
class VariableOrder {
 public:
  using CompareFn = std::function<Ordering(VarId, VarId)>;

  VariableOrder() = default;                      // natural order
  explicit VariableOrder(CompareFn fn) : fn_(std::move(fn)) {}

  bool is_natural() const { return !fn_; }
  Ordering compare(VarId a, VarId b) const {
    if (fn_) return fn_(a, b);
    return a < b ? Ordering::less : a > b ? Ordering::greater : Ordering::equal;
  }

 private:
  CompareFn fn_;
};

// Degree first, then lexicographic in the variable order.
Ordering mono_compare(const Monomial& m1, const Monomial& m2,
                      const VariableOrder& vo = {});

// Strict-weak-order functor for the natural order; Series term storage.
struct MonoNaturalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
    return a.vars < b.vars;
  }
};

// Truncated series: no stored zero coefficients, no monomial of degree
// greater than the truncation degree. Terms are kept sorted in the natural
// monomial order. Two series are comparable only at the min of their
// truncation degrees.
class Series {
 public:
  using TermMap = std::map<Monomial, Rational, MonoNaturalLess>;

  explicit Series(int truncation_degree);
  static Series zero(int degree) { return Series(degree); }
  static Series one(int degree);
  static Series constant(const Rational& c, int degree);
  static Series variable(VarId v, int degree);  // the monomial X_v

  int truncation_degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  Rational constant_coeff() const { return coeff(Monomial{}); }

  // Adds c * m, dropping the term if it exceeds the truncation degree or
  // the accumulated coefficient vanishes.
  void accumulate(const Monomial& m, const Rational& c);

  friend bool operator==(const Series&, const Series&) = default;

 private:
  int degree_;
  TermMap terms_;
};

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series scale(const Rational& q, const Series& f);
Series mul(const Series& f, const Series& g);
Series truncate(const Series& f, int degree);

// Geometric-series inverse of f = 1 + eta with eta(0) = 0:
// sum of (-eta)^k up to the truncation degree. Rejects other constant terms.
Series unit_inverse(const Series& f);

// The mono_compare-least monomial with nonzero coefficient ("smallest
// non-trivial term"); the constant monomial counts when present.
std::optional<std::pair<Monomial, Rational>> lowest_term(
    const Series& f, const VariableOrder& vo = {});

// f before g iff the lowest term of g - f has positive coefficient,
// evaluated at the common truncation degree.
SeriesOrdering series_compare(const Series& f, const Series& g,
                              const VariableOrder& vo = {});

// `3 + X_1 - 2 X_1 X_2` style; terms in the natural monomial order.
std::string to_text(const Series& f);
// {"schema":"series/1","degree":d,"terms":[{"mono":[...],"coeff":"..."}]}
std::string to_json_text(const Series& f, int indent = -1);

}  // namespace braidorder
