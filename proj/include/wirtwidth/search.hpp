#pragma once

// Wirtinger width and Wirtinger number of a single diagram.
//
// exact_width runs a memoized branch-and-bound over partitions of the strand
// cycle. Future moves and future attached values depend only on which
// strands are colored and which colored strands share a color, so the memo
// key forgets the history and the actual color values.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wirtwidth/coloring.hpp"
#include "wirtwidth/gauss.hpp"

namespace wirtwidth {

/// Canonical signature of a partial coloring. Color classes are arcs of the
/// strand cycle, so the partition is fixed by the colored set together with
/// the set of strands that share a color with their predecessor.
struct PartitionKey {
  std::uint64_t colored = 0;
  std::uint64_t joined = 0;  // bit s: s and its predecessor share a color

  static constexpr int kMaxStrands = 64;

  static PartitionKey of(const Diagram& d, const ColoringState& state);

  /// strand -> class index numbered by first occurrence along the strand
  /// order, -1 for uncolored strands.
  std::vector<int> class_labels(int n_strands) const;

  friend bool operator==(const PartitionKey&, const PartitionKey&) = default;
};

struct PartitionKeyHash {
  std::size_t operator()(const PartitionKey& k) const noexcept {
    std::uint64_t h = k.colored * 0x9E3779B97F4A7C15ULL;
    h ^= k.joined + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

struct WidthReport {
  std::string diagram_id;
  int mu_upper = 0;
  bool mu_exact = false;
  long width_upper = 0;
  bool width_exact = false;
  bool budget_exhausted = false;
  EventLog witness;
  std::chrono::microseconds elapsed{0};
  std::uint64_t nodes_explored = 0;

  int seeds_used() const noexcept { return witness.seed_count(); }
};

inline constexpr std::uint64_t kDefaultExactBudget = 20'000'000;
inline constexpr std::uint64_t kDefaultHeuristicBudget = 20'000;

/// Wirtinger width of d by exhaustive branch-and-bound. When the node budget
/// runs out the report is marked inexact and carries the best witness known.
/// Diagrams with more than 64 strands fall back to the heuristic.
WidthReport exact_width(const Diagram& d, std::uint64_t node_budget = kDefaultExactBudget);

/// The 0-crossing diagram: one seed, width 2, Wirtinger number 1.
WidthReport unknot_width(const Diagram& d);

struct SeedWitness {
  int k = 0;
  std::vector<Strand> seeds;  // ascending
};

/// Smallest k <= k_max such that seeding some k strands up front and then
/// saturating with coloring moves colors the whole diagram. Subsets are tried
/// in lexicographic order. Returns nullopt when no subset of size <= k_max
/// works.
std::optional<SeedWitness> wirtinger_number(const Diagram& d, int k_max);

/// Seed-then-saturate search over ordered seed tuples. Up to
/// `target_seed_count` seeds are chosen freely; a branch still incomplete
/// after that is finished greedily. Pass target_seed_count <= 0 to use the
/// diagram's Wirtinger number. The result is never marked exact.
WidthReport lazy_seed_heuristic(const Diagram& d, int target_seed_count = 0,
                                std::uint64_t enumeration_budget = kDefaultHeuristicBudget);

}  // namespace wirtwidth
