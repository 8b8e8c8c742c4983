#include "langsim/selection.hpp"

#include <algorithm>

#include "langsim/error.hpp"

namespace langsim {

const char* to_string(RankDirection direction) noexcept {
  return direction == RankDirection::ascending_distance ? "ascending-distance"
                                                        : "descending-similarity";
}

RankedList rank_sources(const DistanceMatrix& m, const std::string& target,
                        std::span<const std::string> candidates) {
  std::size_t target_idx = m.index_of(target);

  RankedList list;
  list.target = target;
  list.metric_provenance = m.provenance();
  list.direction = m.kind() == MatrixKind::distance ? RankDirection::ascending_distance
                                                    : RankDirection::descending_similarity;

  for (const std::string& code : candidates) {
    std::size_t idx = m.index_of(code);
    if (idx == target_idx) continue;
    auto value = m.cell(idx, target_idx);  // row = source, column = target
    if (!value.has_value()) {
      list.excluded.push_back({code, "missing-cell"});
      continue;
    }
    list.entries.push_back({code, *value, 0});
  }

  bool ascending = list.direction == RankDirection::ascending_distance;
  std::sort(list.entries.begin(), list.entries.end(),
            [ascending](const RankedEntry& a, const RankedEntry& b) {
              if (a.value != b.value) return ascending ? a.value < b.value : a.value > b.value;
              return a.source < b.source;
            });
  for (std::size_t i = 0; i < list.entries.size(); ++i) {
    list.entries[i].rank = static_cast<int>(i + 1);
  }
  std::sort(list.excluded.begin(), list.excluded.end(),
            [](const ExcludedCandidate& a, const ExcludedCandidate& b) {
              return a.source < b.source;
            });

  if (list.entries.empty()) {
    throw Error(ErrorCode::EmptyCandidates,
                "no rankable candidates for target '" + target + "'");
  }
  return list;
}

std::pair<std::string, double> best_source(const DistanceMatrix& m, const std::string& target,
                                           std::span<const std::string> candidates) {
  RankedList list = rank_sources(m, target, candidates);
  return {list.entries.front().source, list.entries.front().value};
}

}  // namespace langsim
