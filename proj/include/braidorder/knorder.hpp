// The explicit order on K_n, the kernel of the strand projection of the
// pure braid group of a genus-g surface: generator order on each family
// F_{i,n}, per-factor Magnus orders, the greatest-index tuple rule, the
// wall-crossing conjugation action on generators, and the generic
// semidirect/lexicographic order combinator.
#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "braidorder/braid.hpp"
#include "braidorder/order.hpp"
#include "braidorder/surface.hpp"
#include "braidorder/words.hpp"

namespace braidorder {

// f[i,j,gamma]: the two-strand twist t_{i,j} conjugated by the i-th strand
// running along gamma. Two FGens are equal iff same (i, j) and gamma equal
// in pi_1 (group equality, not representative identity).
struct FGen {
  int i = 1;
  int j = 2;
  SurfaceElem gamma;

  FGen(int i_, int j_, SurfaceElem gamma_)
      : i(i_), j(j_), gamma(std::move(gamma_)) {}
};

using FLetter = Letter<FGen>;

// A word over one family F_{i,n}; freely reduced relative to FGen group
// equality. Built through KnOrder, which maintains the invariant.
struct FWord {
  std::vector<FLetter> letters;

  bool is_identity() const { return letters.empty(); }
};

// (k_1, ..., k_{n-1}); component at position p holds a word over the
// FGens with first index p.
struct KnElement {
  std::vector<FWord> components;

  int strands() const { return static_cast<int>(components.size()) + 1; }
};

// The braid a_{i,r}: strand i crossing wall r of the surface polygon,
// used here purely as a conjugation label.
struct ActionLabel {
  int i = 1;  // strand, 1..n
  int r = 1;  // wall, 1..2g
};

class KnOrder {
 public:
  KnOrder(int n, std::shared_ptr<const SurfaceGroup> surface,
          CompareParams params = {});

  int strands() const { return n_; }
  const SurfaceGroup& surface() const { return *surface_; }
  const CompareParams& params() const { return params_; }

  FGen fgen(int i, int j, SurfaceElem gamma) const;  // validates 1<=i<j<=n
  bool fgen_equal(const FGen& a, const FGen& b) const;

  // The displayed generator order: by second index, then by the surface
  // order on the gamma tags. Requires the same family (same first index).
  Ordering fgen_compare(const FGen& a, const FGen& b) const;

  FWord word(std::span<const FLetter> letters) const;  // freely reduces
  FWord word(std::initializer_list<FLetter> letters) const;
  FWord multiply(const FWord& u, const FWord& v) const;
  FWord invert(const FWord& u) const;
  bool words_equal(const FWord& u, const FWord& v) const;

  // Magnus order on the free factor generated by one family, with the
  // variables ranked so that single-letter words order like the
  // generators themselves.
  Ordering factor_compare(const FWord& u, const FWord& v) const;

  KnElement element(std::vector<FWord> components) const;  // validates
  KnElement identity() const;
  bool elements_equal(const KnElement& a, const KnElement& b) const;

  // k < k' iff k_j < k'_j at the greatest component position where they
  // differ.
  Ordering kn_compare(const KnElement& a, const KnElement& b) const;

  // Conjugation by a_{i,r} on generators: f[j,k,g] is fixed when
  // i is neither j nor k, maps g to w_r * g when i = j, and to g * w_r^-1
  // when i = k. `inverse` applies the inverse label (w_r replaced by its
  // inverse on the matching side).
  FGen psi_action(const ActionLabel& l, const FGen& f,
                  bool inverse = false) const;
  KnElement psi_extend(const ActionLabel& l, const KnElement& k,
                       bool inverse = false) const;

  std::string to_text(const FGen& f) const;
  std::string to_text(const FWord& u) const;
  std::string to_text(const KnElement& k) const;
  KnElement parse_element(std::string_view text) const;

 private:
  int n_;
  std::shared_ptr<const SurfaceGroup> surface_;
  CompareParams params_;
};

// An inner-factor automorphism supplied with the generators it acts on.
// The hypothesis that the twist acts trivially on the abelianization is
// checked, not assumed.
struct SemidirectTwist {
  GeneratorMap map;
  std::vector<Generator> domain;
};

// Throws std::invalid_argument unless every twist is H1-trivial on its
// stated domain.
void require_h1_trivial_twists(std::span<const SemidirectTwist> twists);

// Generic greatest-differing-index order on tuples over ordered factors.
// Actions, when the instantiation multiplies tuples, ride along and must
// pass the H1 gate before the datum is usable.
template <class W>
struct SemidirectOrderDatum {
  std::function<bool(const W&, const W&)> equal;
  // One comparator per component position, innermost first.
  std::vector<std::function<Ordering(const W&, const W&)>> factor_compare;
  std::vector<SemidirectTwist> actions;
};

template <class W>
SemidirectOrderDatum<W> make_semidirect_datum(
    std::function<bool(const W&, const W&)> equal,
    std::vector<std::function<Ordering(const W&, const W&)>> factor_compare,
    std::vector<SemidirectTwist> actions = {}) {
  require_h1_trivial_twists(actions);
  return SemidirectOrderDatum<W>{std::move(equal), std::move(factor_compare),
                                 std::move(actions)};
}

template <class W>
Ordering semidirect_compare(const SemidirectOrderDatum<W>& datum,
                            std::span<const W> a, std::span<const W> b) {
  if (a.size() != b.size() || a.size() != datum.factor_compare.size())
    throw std::invalid_argument("semidirect_compare: tuple size mismatch");
  for (std::size_t p = a.size(); p-- > 0;) {
    if (!datum.equal(a[p], b[p])) return datum.factor_compare[p](a[p], b[p]);
  }
  return Ordering::equal;
}

// t_{i,j} = s_i ... s_{j-2} s_{j-1}^2 s_{j-2}^-1 ... s_i^-1, a pure braid.
BraidWord t_word(int i, int j, int n);

}  // namespace braidorder
