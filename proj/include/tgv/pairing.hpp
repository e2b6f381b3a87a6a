#pragma once

#include "tgv/tabular.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tgv {

/// Per-anchor positive sets. For every anchor i, positives[i] holds the
/// indices j != i with S[i][j] >= maxima[i] - threshold, sorted ascending.
/// The argmax index is always a member, so no set is empty.
struct PairAssignment {
  std::vector<std::vector<std::size_t>> positives;
  std::vector<double> maxima;
  double threshold = 0.0;

  std::size_t n() const { return positives.size(); }
};

/// Max over j != i of S[i][j].
double anchor_max(const SimilarityMatrix& s, std::size_t i);

/// Threshold rule: boundary ties are included (>=, exact float comparison).
PairAssignment assign_pairs(const SimilarityMatrix& s, double threshold);

/// Lowest index among the anchors tied at the maximum.
std::size_t best_pair(const SimilarityMatrix& s, std::size_t i);

/// Debug dump: one (anchor, positive, similarity) row per pair.
void write_pairs_csv(const std::string& path, const PairAssignment& pairs,
                     const SimilarityMatrix& s);

}  // namespace tgv
