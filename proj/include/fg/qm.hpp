#pragma once

#include <optional>
#include <utility>

#include "fg/autom.hpp"
#include "fg/rational.hpp"
#include "fg/word.hpp"

namespace fg {

// Counting quasimorphism: occurrences of the pattern in the reduced word
// (overlaps counted) minus occurrences of the inverse pattern. The defect
// bound is configuration, validated empirically, never assumed proven.
struct CountingQM {
  Word pattern;
  Rational defect_bound;

  explicit CountingQM(Word pattern_word);  // default bound 2*(len-1) + 2
  CountingQM(Word pattern_word, Rational bound);
};

Rational evaluate(const CountingQM& q, const Word& g);

// max |q(gh) - q(g) - q(h)| over reduced words of length <= budget;
// throws std::domain_error when the measurement exceeds the configured bound
Rational empirical_defect(const CountingQM& q, int length_budget);

Rational homogenize_numeric(const CountingQM& q, const Word& g, long long n);

// exact homogenization: window count on the cyclic core, zero on the identity
Rational homogenize_exact(const CountingQM& q, const Word& g);

// homogeneous evaluator as a value
struct HomogeneousQM {
  CountingQM base;
  Rational operator()(const Word& g) const { return homogenize_exact(base, g); }
};

Rational compose_with_aut(const CountingQM& q, const Automorphism& phi,
                          const Word& g);

// lexicographically first pair (x, y) with r(xy) != r(x) + r(y) for
// r = homogenize_exact - homogenize_exact ∘ phi, or absent within budget
std::optional<std::pair<Word, Word>> find_additivity_violation(
    const CountingQM& q, const Automorphism& phi, int length_budget);

}  // namespace fg
