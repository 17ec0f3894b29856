#pragma once

#include <vector>

#include "fg/word.hpp"

namespace fg {

// One factor of a decomposition into conjugates of generators; the factor is
// conjugator * generator * conjugator^-1.
struct NormFactor {
  Letter generator;
  Word conjugator;
};

// Witness that |g|_bw = k: crossing out the listed letter positions of the
// reduced word leaves a word that freely reduces to the identity, and the
// factors re-multiply exactly to g.
struct NormCertificate {
  int k = 0;
  std::vector<std::size_t> crossed_positions;
  std::vector<NormFactor> factors;
};

// Bi-invariant word norm with respect to conjugates of the standard
// generators, computed as the cancellation length by interval dynamic
// programming over [i, j]:
//   cost(i,j) = min( 1 + cost(i+1,j),
//                    min over p in (i,j] with w[p] = w[i]^-1 of
//                        cost(i+1,p-1) + cost(p+1,j) )
NormCertificate binorm(const Word& g);

int bw_distance(const Word& g, const Word& h);

Word factor_product(int rank, const std::vector<NormFactor>& factors);

bool verify_certificate(const Word& g, const NormCertificate& c);

}  // namespace fg
