#include "fg/lab.hpp"

#include <stdexcept>

#include "fg/binorm.hpp"
#include "fg/qm.hpp"

namespace fg {

namespace {

void check_config(const LabConfig& config) {
  if (config.rank < 2 || config.rank > kMaxRank)
    throw std::invalid_argument("rank must be in [2, 26]");
  if (config.max_len < 0 || config.max_len > kMaxSweepLength)
    throw std::invalid_argument("max length exceeds the enumeration cap");
  if (config.budget < 1)
    throw std::invalid_argument("budget must be at least 1");
  for (const Word& p : config.patterns)
    if (p.rank() != config.rank || p.empty())
      throw std::invalid_argument("patterns must be nonempty words of the sweep rank");
}

std::vector<Rational> pattern_values(const LabConfig& config, const Word& g) {
  std::vector<Rational> out;
  out.reserve(config.patterns.size());
  for (const Word& p : config.patterns)
    out.push_back(homogenize_exact(CountingQM(p), g));
  return out;
}

}  // namespace

void inequality_sweep(const LabConfig& config,
                      const std::function<void(const SweepRow&)>& emit) {
  check_config(config);
  for_each_conjugacy_class_rep(config.rank, config.max_len, [&](const Word& g) {
    if (!in_commutator_subgroup(g)) return;

    SweepRow row{g, 0, ClBounds{}, std::nullopt, {}};
    NormCertificate cert = binorm(g);
    row.bw = cert.k;
    int lemma_pairs = static_cast<int>(bw_to_commutators(g, cert).pairs.size());
    if (2 * lemma_pairs > row.bw)
      throw std::runtime_error("sweep invariant violated on " + g.str() +
                               ": rewriting produced too many commutators");
    row.cl = cl_bounds(g, config.budget);
    if (row.cl.lower > row.cl.upper)
      throw std::runtime_error("sweep invariant violated on " + g.str() +
                               ": lower bound exceeds upper bound");
    if (row.cl.exact) row.ab = row.cl.exact;
    row.psi = pattern_values(config, g);
    emit(row);
  });
}

void square_commutator_search(
    const LabConfig& config,
    const std::function<void(const SquareCommutatorHit&)>& emit) {
  check_config(config);
  for_each_conjugacy_class_rep(config.rank, config.max_len, [&](const Word& g) {
    if (g.empty()) return;
    if (!in_commutator_subgroup(g)) return;  // otherwise g^2 has no chance
    Word square = multiply(g, g);
    auto witness = is_commutator(square);
    if (!witness) return;
    SquareCommutatorHit hit{g, *witness, cl_bounds(g, config.budget),
                            pattern_values(config, g)};
    emit(hit);
  });
}

std::vector<QmBoundednessRow> qm_boundedness_report(
    const std::vector<Word>& patterns, const std::vector<Word>& words) {
  std::vector<QmBoundednessRow> out;
  for (const Word& p : patterns) {
    CountingQM q(p);
    QmBoundednessRow row{p, Rational(0), std::nullopt};
    for (const Word& g : words) {
      Rational value = homogenize_exact(q, g);
      if (value < 0) value = -value;
      if (value > row.sup_abs) {
        row.sup_abs = value;
        row.attained_at = g;
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace fg
