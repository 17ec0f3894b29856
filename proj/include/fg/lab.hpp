#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fg/comm.hpp"
#include "fg/rational.hpp"
#include "fg/word.hpp"

namespace fg {

inline constexpr int kMaxSweepLength = 12;

// canonical conjugacy-class representatives: cyclically reduced words equal
// to their least rotation, one per class, in (length, lex) order
template <typename F>
void for_each_conjugacy_class_rep(int rank, int max_len, F&& fn) {
  fn(Word(rank));
  for (int len = 1; len <= max_len; ++len) {
    for_each_reduced_word(rank, len, [&](const Word& w) {
      if (!is_cyclically_reduced(w.letters())) return;
      if (!(CyclicWord(rank, w.letters()).canonical() == w.letters())) return;
      fn(w);
    });
  }
}

struct LabConfig {
  int rank = 2;
  int max_len = 6;
  int budget = 4;
  std::vector<Word> patterns;
};

struct SweepRow {
  Word word;
  int bw = 0;
  ClBounds cl;
  std::optional<int> ab;
  std::vector<Rational> psi;  // one value per configured pattern
};

// enumerates commutator-subgroup class representatives up to max_len;
// throws std::runtime_error naming the counterexample if a row violates
// 2 * (pairs from the rewriting) <= bw or lower > upper
void inequality_sweep(const LabConfig& config,
                      const std::function<void(const SweepRow&)>& emit);

struct SquareCommutatorHit {
  Word g;
  std::pair<Word, Word> square_witness;  // [u, v] = g^2
  ClBounds cl;
  std::vector<Rational> psi;
};

void square_commutator_search(const LabConfig& config,
                              const std::function<void(const SquareCommutatorHit&)>& emit);

struct QmBoundednessRow {
  Word pattern;
  Rational sup_abs;                // one-sided: max over the given finite set
  std::optional<Word> attained_at;
};

std::vector<QmBoundednessRow> qm_boundedness_report(
    const std::vector<Word>& patterns, const std::vector<Word>& words);

}  // namespace fg
