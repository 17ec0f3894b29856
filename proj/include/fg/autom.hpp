#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fg/rational.hpp"
#include "fg/word.hpp"

namespace fg {

// Automorphism of F_rank given by generator images together with the images
// under the inverse. Both directions are verified at construction.
class Automorphism {
 public:
  Automorphism(std::vector<Word> images, std::vector<Word> inverse_images);

  int rank() const { return rank_; }
  const Word& image(int generator) const { return images_[generator - 1]; }
  const Word& inverse_image(int generator) const {
    return inverse_images_[generator - 1];
  }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  int rank_;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

Word apply(const Automorphism& phi, const Word& g);
Automorphism compose(const Automorphism& phi, const Automorphism& psi);  // phi ∘ psi
Automorphism invert(const Automorphism& phi);
Automorphism identity_automorphism(int rank);
Automorphism conjugation_by(const Word& w);

// permutations (transpositions), inversions, and transvections x_i -> x_i x_j
std::vector<Automorphism> nielsen_generators(int rank);

struct InnerWitness {
  Word conjugator;  // conjugation by it reproduces every generator image
};
std::optional<InnerWitness> is_inner(const Automorphism& phi);

struct StrongCommensurationWitness {
  Word test_word;
  std::optional<std::pair<long long, Word>> witness;  // (m, h): h g^m h^-1 = phi(g^m)
};
struct StrongCommensurationReport {
  bool all_pass = true;
  std::vector<StrongCommensurationWitness> per_word;
};
StrongCommensurationReport is_strongly_commensurating_bounded(
    const Automorphism& phi, const std::vector<Word>& test_words,
    int exponent_budget);

// Certificate that a homogeneous counting quasimorphism separates phi from
// every inner automorphism: value != value_phi, and in strict mode value != 0,
// value_phi = 0, with a pair violating additivity of the difference.
struct NonInnerCertificate {
  Word pattern;
  Word g;
  Rational value;
  Rational value_phi;
  std::optional<std::pair<Word, Word>> violation_pair;
};

// budgeted search in (length, lex) order over g, then over patterns;
// throws std::invalid_argument when phi is inner
std::optional<NonInnerCertificate> find_noninner_witness(
    const Automorphism& phi, int pattern_max_len, int g_max_len,
    int pair_budget, bool strict);

}  // namespace fg
