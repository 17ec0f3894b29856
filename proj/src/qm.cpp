#include "fg/qm.hpp"

#include <stdexcept>

namespace fg {

namespace {

long long count_occurrences(const std::vector<Letter>& pattern,
                            const std::vector<Letter>& text) {
  if (pattern.empty() || pattern.size() > text.size()) return 0;
  long long count = 0;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < pattern.size() && hit; ++j)
      hit = text[i + j] == pattern[j];
    if (hit) ++count;
  }
  return count;
}

// windows starting inside one period of the bi-infinite word core^∞
long long count_cyclic(const std::vector<Letter>& pattern,
                       const std::vector<Letter>& core) {
  if (core.empty()) return 0;
  const std::size_t n = core.size();
  long long count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < pattern.size() && hit; ++j)
      hit = core[(i + j) % n] == pattern[j];
    if (hit) ++count;
  }
  return count;
}

std::vector<Letter> inverted(const std::vector<Letter>& w) {
  std::vector<Letter> out(w.rbegin(), w.rend());
  for (Letter& l : out) l = inverse_letter(l);
  return out;
}

void require_same_rank(const CountingQM& q, const Word& g) {
  if (q.pattern.rank() != g.rank())
    throw std::invalid_argument("rank mismatch between pattern and word");
}

}  // namespace

CountingQM::CountingQM(Word pattern_word)
    : CountingQM(std::move(pattern_word),
                 Rational(0)) {
  defect_bound = Rational(2 * (static_cast<long long>(pattern.size()) - 1) + 2);
}

CountingQM::CountingQM(Word pattern_word, Rational bound)
    : pattern(std::move(pattern_word)), defect_bound(bound) {
  if (pattern.empty())
    throw std::invalid_argument("counting pattern must be nonempty");
  if (defect_bound < 0)
    throw std::invalid_argument("defect bound must be nonnegative");
}

Rational evaluate(const CountingQM& q, const Word& g) {
  require_same_rank(q, g);
  const auto& p = q.pattern.letters();
  return Rational(count_occurrences(p, g.letters()) -
                  count_occurrences(inverted(p), g.letters()));
}

Rational empirical_defect(const CountingQM& q, int length_budget) {
  if (length_budget < 1)
    throw std::invalid_argument("length budget must be at least 1");
  std::vector<Word> words = reduced_words_upto(q.pattern.rank(), length_budget);
  std::vector<Rational> values;
  values.reserve(words.size());
  for (const Word& w : words) values.push_back(evaluate(q, w));

  Rational best(0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      Rational d = evaluate(q, multiply(words[i], words[j])) - values[i] - values[j];
      if (d < 0) d = -d;
      if (d > best) best = d;
    }
  }
  if (best > q.defect_bound)
    throw std::domain_error("configured defect bound is invalid: empirical defect " +
                            to_string(best) + " exceeds " + to_string(q.defect_bound));
  return best;
}

Rational homogenize_numeric(const CountingQM& q, const Word& g, long long n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return evaluate(q, power(g, n)) / Rational(n);
}

Rational homogenize_exact(const CountingQM& q, const Word& g) {
  require_same_rank(q, g);
  if (g.empty()) return Rational(0);
  const auto& core = cyclic_reduce(g).core.canonical();
  const auto& p = q.pattern.letters();
  return Rational(count_cyclic(p, core) - count_cyclic(inverted(p), core));
}

Rational compose_with_aut(const CountingQM& q, const Automorphism& phi,
                          const Word& g) {
  if (phi.rank() != g.rank() || phi.rank() != q.pattern.rank())
    throw std::invalid_argument("rank mismatch");
  return homogenize_exact(q, apply(phi, g));
}

std::optional<std::pair<Word, Word>> find_additivity_violation(
    const CountingQM& q, const Automorphism& phi, int length_budget) {
  if (length_budget < 1)
    throw std::invalid_argument("length budget must be at least 1");
  std::vector<Word> words = reduced_words_upto(q.pattern.rank(), length_budget);
  auto r = [&](const Word& w) {
    return homogenize_exact(q, w) - compose_with_aut(q, phi, w);
  };
  std::vector<Rational> values;
  values.reserve(words.size());
  for (const Word& w : words) values.push_back(r(w));
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      if (r(multiply(words[i], words[j])) != values[i] + values[j])
        return std::make_pair(words[i], words[j]);
  return std::nullopt;
}

}  // namespace fg
