#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fg/binorm.hpp"
#include "fg/word.hpp"

namespace fg {

struct CommutatorDecomposition {
  std::vector<std::pair<Word, Word>> pairs;  // product of [u_i, v_i] equals the target
};

struct ClBounds {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  // true when the reported lower bound rests on a configured defect bound
  // rather than on a proven argument
  bool lower_conditional = false;
};

bool in_commutator_subgroup(const Word& g);

// genus-1 recognition: g is a commutator iff some rotation of its cyclic
// reduction matches a b c a^-1 b^-1 c^-1 with pieces possibly empty;
// returns a verified witness pair, (identity, identity) for the identity
std::optional<std::pair<Word, Word>> is_commutator(const Word& g);

// inductive rewriting of a product of conjugates of generators into at most
// floor(k/2) commutators, preserving the exact product
CommutatorDecomposition bw_to_commutators(const Word& g,
                                          const NormCertificate& cert);

ClBounds cl_bounds(const Word& g, int budget);

// commutator length, certified exact; on the commutator subgroup this equals
// the word length over conjugates of generators together with all commutators
int ab_length(const Word& g, int budget);

}  // namespace fg
