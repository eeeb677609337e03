// The Magnus expansion x_i -> 1 + X_i, the induced bi-order on free groups,
// the extension-order combinator, and the positive-cone property harness.
#pragma once

#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "braidorder/check.hpp"
#include "braidorder/order.hpp"
#include "braidorder/series.hpp"
#include "braidorder/words.hpp"

namespace braidorder {

// 1 + X for a positive letter, the geometric series 1 - X + X^2 - ... for a
// negative one.
Series generator_series(VarId v, int sign, int degree);

// Product of per-letter series; the generic core shared with the structured
// alphabets of the knorder module.
Series expand_letters(std::span<const std::pair<VarId, int>> letters,
                      int degree);

// Variables are identified with generator indices (X_i for x_i).
Series magnus_expand(const Word& w, int degree);

// Equal iff a == b as reduced words (exact, no series involved); otherwise
// expands at params.initial_degree, doubling until series_compare decides.
// Throws UndecidedAtCap past the cap, impossible for distinct words in
// exact arithmetic, but the cap bounds resources.
Ordering magnus_compare(const Word& a, const Word& b,
                        const VariableOrder& vo = {},
                        const CompareParams& params = {});

// A group with a strict total order; the contract the harness checks.
// compare(a, b) == equal must mean a and b are equal group elements.
template <class Elem>
struct OrderedGroup {
  Elem identity;
  std::function<Elem(const Elem&, const Elem&)> multiply;
  std::function<Elem(const Elem&)> invert;
  std::function<Ordering(const Elem&, const Elem&)> compare;
  std::function<std::string(const Elem&)> describe;

  Ordering sign_of_element(const Elem& g) const { return compare(identity, g); }
};

OrderedGroup<Word> magnus_ordered_group(VariableOrder vo = {},
                                        CompareParams params = {});

// Order on the middle of a short exact sequence 1 -> A -> B -> C -> 1:
// positives are the elements with positive image in C, plus the kernel
// elements positive in A's order.
template <class B, class C>
struct ExtensionDatum {
  std::function<B(const B&, const B&)> multiply;
  std::function<B(const B&)> invert;
  std::function<C(const B&)> project;                      // the epimorphism
  std::function<bool(const C&)> quotient_is_identity;
  std::function<Ordering(const C&, const C&)> quotient_compare;
  C quotient_identity;
  // Total on kernel elements; applied to b with project(b) trivial.
  std::function<Ordering(const B&, const B&)> kernel_compare;
  B kernel_identity;
};

template <class B, class C>
Ordering extension_compare(const ExtensionDatum<B, C>& ext, const B& a,
                           const B& b) {
  B delta = ext.multiply(b, ext.invert(a));  // a < b iff b a^-1 positive
  C q = ext.project(delta);
  if (!ext.quotient_is_identity(q))
    return ext.quotient_compare(ext.quotient_identity, q);
  return ext.kernel_compare(ext.kernel_identity, delta);
}

// Positive-cone axioms on a finite sample: trichotomy against inverses per
// element, closure of positives under product per ordered pair, and (in
// bi-order mode) stability of positives under sampled conjugation.
template <class Elem>
CheckReport check_cone_axioms(const OrderedGroup<Elem>& G,
                              std::span<const Elem> sample,
                              bool bi_order = true) {
  CheckReport report;
  auto side = [&](const Elem& g) { return G.sign_of_element(g); };
  for (const Elem& g : sample) {
    ++report.checked;
    Ordering sg = side(g);
    Ordering si = side(G.invert(g));
    if (sg != flip(si))
      report.note("g=" + G.describe(g), "sign(g) opposite to sign(g^-1)",
                  std::string(to_string(sg)) + " vs " + to_string(si));
  }
  for (const Elem& g : sample) {
    for (const Elem& h : sample) {
      if (&g == &h) continue;
      ++report.checked;
      if (side(g) == Ordering::less && side(h) == Ordering::less &&
          side(G.multiply(g, h)) != Ordering::less)
        report.note("g=" + G.describe(g) + ", h=" + G.describe(h),
                    "positive * positive positive", "not positive");
      if (bi_order && side(g) == Ordering::less) {
        ++report.checked;
        Elem conj = G.multiply(G.multiply(h, g), G.invert(h));
        if (side(conj) != Ordering::less)
          report.note("g=" + G.describe(g) + ", h=" + G.describe(h),
                      "h g h^-1 positive for positive g", "not positive");
      }
    }
  }
  return report;
}

// The sign argument behind "bi-orderable implies no generalized torsion":
// all conjugates of g keep g's sign, so their product does too and cannot
// be trivial. Returns true when that holds on the given conjugators.
template <class Elem>
bool check_gt_absence(const OrderedGroup<Elem>& G, const Elem& g,
                      std::span<const Elem> conjugators) {
  Ordering sg = G.sign_of_element(g);
  if (sg == Ordering::equal)
    throw std::invalid_argument("check_gt_absence: g must not be the identity");
  Elem product = G.identity;
  for (const Elem& h : conjugators) {
    Elem conj = G.multiply(G.multiply(h, g), G.invert(h));
    if (G.sign_of_element(conj) != sg) return false;
    product = G.multiply(product, conj);
  }
  return conjugators.empty() ? true : G.sign_of_element(product) == sg;
}

// For each strictly ordered pair, the phi-images must compare the same way.
CheckReport check_order_preserved_by(
    const GeneratorMap& phi, const OrderedGroup<Word>& G,
    std::span<const std::pair<Word, Word>> pairs);

}  // namespace braidorder
