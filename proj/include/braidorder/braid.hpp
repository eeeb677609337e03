// Artin braid groups with an exact word problem through the action on the
// free group, the half-twist Delta, the mirror homomorphism modelling
// conjugation by the Moebius-strip braid, and machine-checkable
// generalized-torsion certificates.
#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidorder/check.hpp"
#include "braidorder/order.hpp"
#include "braidorder/words.hpp"

namespace braidorder {

struct BraidLetter {
  int index;  // 1..n-1
  int sign;   // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// A word in s_1..s_{n-1}; not reduced; equality is semantic, via the
// Artin action.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});
  static BraidWord sigma(int strands, int index, int sign = +1);
  static BraidWord sigma_power(int strands, int index, int exponent);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);

  // Letterwise identity, not group equality.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// Image of a free-group word under the braid's Artin action:
// s_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.
Word artin_apply(const BraidWord& b, const Word& w);

// The action as a generator map on x_1..x_n. Faithful, so comparing
// images decides braid equality.
GeneratorMap artin_action(const BraidWord& b);

bool braid_equal(const BraidWord& u, const BraidWord& v);

// Delta = (s_1...s_{n-1})(s_1...s_{n-2})...(s_1 s_2) s_1.
BraidWord delta_word(int n);

// Letterwise s_j^e -> s_{n-j}^{-e}; an involution on words and a
// homomorphism of the braid group (mirror_respects_relations checks both
// defining relations).
BraidWord mirror(const BraidWord& b);

// Conjugation by the Moebius-strip braid: Gamma b Gamma^-1 equals the
// mirror image. Same output as mirror; the name records the meaning.
BraidWord gamma_conjugate(const BraidWord& b);

// Strand permutation (position p ends carrying the strand perm[p]).
std::vector<int> permutation_of(const BraidWord& b);
bool is_pure(const BraidWord& b);

// Delta s_i Delta^-1 = s_{n-i} for every i, via the Artin action.
CheckReport check_delta_relation(int n);

// mirror maps both braid relations to relations.
CheckReport mirror_respects_relations(int n);

struct CertStep {
  std::string claim;
  bool checked;  // false means assumed (cited), recorded in the trace
  std::string detail;
};

// Witness that s_i^2 is generalized torsion in the pure braid group of a
// closed non-orientable surface: s_i^2 * [(GammaDelta) s_i^2
// (GammaDelta)^-1] = 1 with both factors pure and s_i^2 nontrivial.
struct GtCertificate {
  int n = 2;
  int i = 1;
  std::string surface = "nonorientable";
  BraidWord g_word;                       // s_i^2
  std::vector<std::string> conjugators;   // {"1", "GammaDelta"}
  std::vector<CertStep> steps;
  bool valid = false;

  // Re-runs every checked step from scratch.
  bool verify() const;
  std::string to_json_text(int indent = -1) const;
};

// Builds and verifies the certificate; throws std::runtime_error if any
// checked step fails (which would indicate an implementation error) and
// std::invalid_argument on out-of-range n, i.
GtCertificate make_gt_certificate(int n, int i);

// The conjugators of the certificate, as a model: the trivial conjugator
// and conjugation by GammaDelta, realized as b -> mirror(Delta b Delta^-1).
enum class ModelConjugator { trivial, gamma_delta };
BraidWord apply_model_conjugator(ModelConjugator c, const BraidWord& b);

// Definition check, generic over any group with a word-problem oracle:
// true iff g is nontrivial and the product of its conjugates is trivial.
// Conjugators are opaque; `conjugate` supplies their action.
template <class Elem, class Conj>
bool verify_generalized_torsion(
    const Elem& g, std::span<const Conj> conjugators,
    const std::function<Elem(const Conj&, const Elem&)>& conjugate,
    const std::function<Elem(const Elem&, const Elem&)>& multiply,
    const std::function<bool(const Elem&)>& is_identity) {
  if (conjugators.empty())
    throw std::invalid_argument(
        "verify_generalized_torsion: empty conjugator list");
  if (is_identity(g)) return false;
  bool first = true;
  Elem product = g;  // overwritten before use
  for (const Conj& h : conjugators) {
    Elem term = conjugate(h, g);
    product = first ? term : multiply(product, term);
    first = false;
  }
  return is_identity(product);
}

std::string to_text(const BraidWord& b);
BraidWord parse_braid_word(std::string_view text, int strands);

}  // namespace braidorder
