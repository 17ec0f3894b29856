#include "fg/comm.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "fg/qm.hpp"
#include "fg/rational.hpp"

namespace fg {

namespace {

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

std::string letters_key(const Word& w) {
  return std::string(reinterpret_cast<const char*>(w.letters().data()),
                     w.letters().size());
}

// all commutators [u, v] with |u|, |v| <= budget, keyed by reduced word
struct CommutatorTable {
  std::unordered_map<std::string, std::pair<Word, Word>> by_word;
};

std::shared_ptr<const CommutatorTable> commutator_table(int rank, int budget) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const CommutatorTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(rank, budget);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto table = std::make_shared<CommutatorTable>();
  std::vector<Word> words = reduced_words_upto(rank, budget);
  for (const Word& u : words) {
    for (const Word& v : words) {
      Word c = commutator(u, v);
      table->by_word.emplace(letters_key(c), std::make_pair(u, v));
    }
  }
  cache[key] = table;
  return table;
}

// Bavard-style conditional lower bound from a fixed family of counting
// patterns of length 2 (length-1 patterns are homomorphisms and carry no
// information on the commutator subgroup)
long long bavard_lower(const Word& g) {
  long long best = 0;
  std::vector<Word> patterns;
  for_each_reduced_word(g.rank(), 2, [&](const Word& p) {
    for (const Word& q : patterns)
      if (invert(q) == p) return;
    patterns.push_back(p);
  });
  for (const Word& p : patterns) {
    CountingQM q(p);
    if (q.defect_bound == 0) continue;
    Rational value = homogenize_exact(q, g);
    if (value < 0) value = -value;
    long long candidate =
        ceil_rational(value / (2 * q.defect_bound) + Rational(1, 2));
    best = std::max(best, candidate);
  }
  return best;
}

}  // namespace

bool in_commutator_subgroup(const Word& g) {
  for (long long s : abelianization(g))
    if (s != 0) return false;
  return true;
}

std::optional<std::pair<Word, Word>> is_commutator(const Word& g) {
  if (g.empty()) return std::make_pair(Word(g.rank()), Word(g.rank()));
  if (!in_commutator_subgroup(g)) return std::nullopt;

  CyclicReduction cr = cyclic_reduce(g);
  const auto& canon = cr.core.canonical();
  const std::size_t len = canon.size();
  if (len % 2 != 0) return std::nullopt;
  const std::size_t half = len / 2;

  auto piece = [&](const std::vector<Letter>& w, std::size_t begin,
                   std::size_t count) {
    return Word(g.rank(), std::span<const Letter>(w.data() + begin, count));
  };

  std::vector<Letter> rotated(len);
  for (std::size_t rot = 0; rot < len; ++rot) {
    for (std::size_t i = 0; i < len; ++i) rotated[i] = canon[(rot + i) % len];
    for (std::size_t p = 0; p <= half; ++p) {
      for (std::size_t q = 0; p + q <= half; ++q) {
        const std::size_t r = half - p - q;
        bool hit = true;
        // second half must spell alpha^-1 beta^-1 gamma^-1
        for (std::size_t i = 0; i < p && hit; ++i)
          hit = rotated[half + i] == inverse_letter(rotated[p - 1 - i]);
        for (std::size_t i = 0; i < q && hit; ++i)
          hit = rotated[half + p + i] == inverse_letter(rotated[p + q - 1 - i]);
        for (std::size_t i = 0; i < r && hit; ++i)
          hit = rotated[half + p + q + i] ==
                inverse_letter(rotated[p + q + r - 1 - i]);
        if (!hit) continue;

        Word alpha = piece(rotated, 0, p);
        Word beta = piece(rotated, p, q);
        Word gamma = piece(rotated, p + q, r);
        Word u(g.rank()), v(g.rank());
        if (r == 0) {
          u = alpha;
          v = beta;
        } else if (q == 0) {
          u = alpha;
          v = gamma;
        } else if (p == 0) {
          u = beta;
          v = gamma;
        } else {
          u = multiply(alpha, beta);
          v = multiply(gamma, invert(alpha));
        }
        // undo the rotation and the cyclic reduction
        std::vector<Letter> shift_raw = cr.conjugator.letters();
        shift_raw.insert(shift_raw.end(), canon.begin(), canon.begin() + rot);
        Word shift(g.rank(), shift_raw);
        u = conjugate(u, shift);
        v = conjugate(v, shift);
        if (!(commutator(u, v) == g))
          throw std::logic_error("commutator witness failed re-multiplication");
        return std::make_pair(u, v);
      }
    }
  }
  return std::nullopt;
}

CommutatorDecomposition bw_to_commutators(const Word& g,
                                          const NormCertificate& cert) {
  if (!in_commutator_subgroup(g))
    throw std::invalid_argument("word is not in the commutator subgroup");
  if (!verify_certificate(g, cert))
    throw std::invalid_argument("certificate does not verify for the word");

  CommutatorDecomposition out;
  std::vector<NormFactor> factors = cert.factors;
  while (!factors.empty()) {
    // the exponent sums cancel, so the leading generator recurs inverted
    std::size_t j = 0;
    for (std::size_t i = 1; i < factors.size(); ++i) {
      if (factors[i].generator == inverse_letter(factors[0].generator)) {
        j = i;
        break;
      }
    }
    if (j == 0)
      throw std::logic_error("no matching inverse generator among factors");

    Word s1(g.rank(), std::span<const Letter>(&factors[0].generator, 1));
    Word u = conjugate(s1, factors[0].conjugator);
    Word x(g.rank());
    for (std::size_t i = 1; i < j; ++i) {
      Word si(g.rank(), std::span<const Letter>(&factors[i].generator, 1));
      x = multiply(x, conjugate(si, factors[i].conjugator));
    }
    Word v = multiply(x, multiply(factors[j].conjugator,
                                  invert(factors[0].conjugator)));
    if (!commutator(u, v).empty()) out.pairs.emplace_back(u, v);

    std::vector<NormFactor> rest;
    for (std::size_t i = 1; i < factors.size(); ++i)
      if (i != j) rest.push_back(std::move(factors[i]));
    factors = std::move(rest);
  }
  return out;
}

ClBounds cl_bounds(const Word& g, int budget) {
  if (!in_commutator_subgroup(g))
    throw std::invalid_argument("word is not in the commutator subgroup");
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  if (g.empty()) return ClBounds{0, 0, 0, false};

  if (is_commutator(g)) return ClBounds{1, 1, 1, false};

  // the genus-1 test is exact, so from here cl >= 2
  NormCertificate cert = binorm(g);
  int upper = static_cast<int>(bw_to_commutators(g, cert).pairs.size());
  if (upper > 2) {
    auto table = commutator_table(g.rank(), budget);
    for (const auto& [key, pair] : table->by_word) {
      Word c1 = commutator(pair.first, pair.second);
      Word rest = multiply(invert(c1), g);
      if (table->by_word.count(letters_key(rest))) {
        upper = 2;
        break;
      }
    }
  }

  ClBounds bounds;
  bounds.lower = 2;
  bounds.upper = upper;
  if (bounds.lower == bounds.upper) bounds.exact = bounds.upper;

  long long conditional = bavard_lower(g);
  if (conditional > bounds.lower) {
    if (conditional > bounds.upper)
      throw std::domain_error(
          "configured defect bound refuted by a proven upper bound");
    bounds.lower = static_cast<int>(conditional);
    bounds.lower_conditional = true;
    bounds.exact.reset();
  }
  return bounds;
}

int ab_length(const Word& g, int budget) {
  ClBounds bounds = cl_bounds(g, budget);
  if (!bounds.exact)
    throw std::domain_error(
        "commutator length not certified exact within the budget");
  return *bounds.exact;
}

}  // namespace fg
