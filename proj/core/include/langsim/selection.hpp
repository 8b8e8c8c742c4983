#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "langsim/matrix.hpp"

namespace langsim {

enum class RankDirection { ascending_distance, descending_similarity };

const char* to_string(RankDirection direction) noexcept;

struct RankedEntry {
  std::string source;
  double value = 0.0;
  int rank = 0;
};

struct ExcludedCandidate {
  std::string source;
  std::string reason;
};

struct RankedList {
  std::string target;
  std::string metric_provenance;
  RankDirection direction = RankDirection::ascending_distance;
  std::vector<RankedEntry> entries;             // best first, ranks 1..m
  std::vector<ExcludedCandidate> excluded;      // lexicographic by code
};

/// Order candidate sources for a transfer target, best first: smallest
/// value for a distance matrix, largest for a similarity matrix. Ties get
/// distinct consecutive ranks in lexicographic code order. The target is
/// dropped from the candidates; candidates whose cell is missing land in
/// `excluded` with reason "missing-cell".
RankedList rank_sources(const DistanceMatrix& m, const std::string& target,
                        std::span<const std::string> candidates);

std::pair<std::string, double> best_source(const DistanceMatrix& m, const std::string& target,
                                           std::span<const std::string> candidates);

}  // namespace langsim
