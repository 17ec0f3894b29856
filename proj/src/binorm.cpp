#include "fg/binorm.hpp"

#include <algorithm>
#include <stdexcept>

namespace fg {

namespace {

struct DpTable {
  int n;
  std::vector<int> cost;  // (n+2) x (n+2), cost(i,j) with empty = 0
  int& at(int i, int j) { return cost[static_cast<std::size_t>(i) * (n + 2) + (j + 1)]; }
};

DpTable build_table(const std::vector<Letter>& w) {
  const int n = static_cast<int>(w.size());
  DpTable t{n, std::vector<int>(static_cast<std::size_t>(n + 2) * (n + 2), 0)};
  for (int len = 1; len <= n; ++len) {
    for (int i = 0; i + len - 1 < n; ++i) {
      int j = i + len - 1;
      int best = 1 + t.at(i + 1, j);
      for (int p = i + 1; p <= j; ++p) {
        if (w[p] != inverse_letter(w[i])) continue;
        best = std::min(best, t.at(i + 1, p - 1) + t.at(p + 1, j));
      }
      t.at(i, j) = best;
    }
  }
  return t;
}

// collect crossed-out positions; ties prefer cancelling w[i] against the
// leftmost matching position rather than crossing it out
void reconstruct(const std::vector<Letter>& w, DpTable& t, int i, int j,
                 std::vector<std::size_t>& crossed) {
  while (i <= j) {
    int target = t.at(i, j);
    int pair_pos = -1;
    for (int p = i + 1; p <= j; ++p) {
      if (w[p] != inverse_letter(w[i])) continue;
      if (t.at(i + 1, p - 1) + t.at(p + 1, j) == target) {
        pair_pos = p;
        break;
      }
    }
    if (pair_pos >= 0) {
      reconstruct(w, t, i + 1, pair_pos - 1, crossed);
      i = pair_pos + 1;
    } else {
      crossed.push_back(static_cast<std::size_t>(i));
      ++i;
    }
  }
}

}  // namespace

NormCertificate binorm(const Word& g) {
  const auto& w = g.letters();
  NormCertificate cert;
  if (w.empty()) return cert;

  DpTable t = build_table(w);
  cert.k = t.at(0, static_cast<int>(w.size()) - 1);
  reconstruct(w, t, 0, static_cast<int>(w.size()) - 1, cert.crossed_positions);
  std::sort(cert.crossed_positions.begin(), cert.crossed_positions.end());

  // g = x0 s1 x1 s2 ... sk xk with the segments x0...xk cancelling;
  // the i-th factor is s_i conjugated by x0 x1 ... x_{i-1}
  std::vector<Letter> prefix;
  std::size_t next = 0;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (next < cert.crossed_positions.size() &&
        pos == cert.crossed_positions[next]) {
      cert.factors.push_back(NormFactor{w[pos], Word(g.rank(), prefix)});
      ++next;
    } else {
      if (!prefix.empty() && prefix.back() == inverse_letter(w[pos]))
        prefix.pop_back();
      else
        prefix.push_back(w[pos]);
    }
  }
  return cert;
}

int bw_distance(const Word& g, const Word& h) {
  if (g.rank() != h.rank())
    throw std::invalid_argument("rank mismatch between words");
  return binorm(multiply(invert(g), h)).k;
}

Word factor_product(int rank, const std::vector<NormFactor>& factors) {
  Word acc(rank);
  for (const NormFactor& f : factors) {
    Word s(rank, std::span<const Letter>(&f.generator, 1));
    acc = multiply(acc, conjugate(s, f.conjugator));
  }
  return acc;
}

bool verify_certificate(const Word& g, const NormCertificate& c) {
  const auto& w = g.letters();
  if (c.k != static_cast<int>(c.crossed_positions.size())) return false;
  if (c.k != static_cast<int>(c.factors.size())) return false;
  std::vector<Letter> remainder;
  std::size_t next = 0;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (next < c.crossed_positions.size() && pos == c.crossed_positions[next]) {
      if (w[pos] != c.factors[next].generator) return false;
      ++next;
    } else {
      remainder.push_back(w[pos]);
    }
  }
  if (next != c.crossed_positions.size()) return false;
  if (!Word(g.rank(), remainder).empty()) return false;
  return factor_product(g.rank(), c.factors) == g;
}

}  // namespace fg
