#pragma once

// Brute-force ground truth for tiny diagrams: every legal sequence of seed
// additions and coloring moves is walked depth-first and scored. Nothing is
// pruned unless deduplication is asked for.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "wirtwidth/coloring.hpp"
#include "wirtwidth/gauss.hpp"

namespace wirtwidth {

enum class OracleErrc { TooLarge };

const char* to_string(OracleErrc code) noexcept;

class OracleError : public std::runtime_error {
 public:
  OracleError(OracleErrc code, const std::string& what);
  OracleErrc code() const noexcept { return code_; }

 private:
  OracleErrc code_;
};

struct OracleOptions {
  /// Skip a branch whose full coloring and accumulated total were already
  /// seen. Minima are unaffected; count_of_optimal_logs then counts only
  /// the logs actually walked.
  bool deduplicate = false;
  /// Run audit_completed_log on every completed log.
  bool audit = true;
  /// Called on every completed log with its attached total.
  std::function<void(const EventLog&, long)> visit;
};

struct OracleResult {
  long min_width = 0;
  int min_seed_count = 0;
  std::uint64_t count_of_optimal_logs = 0;
  std::uint64_t logs_enumerated = 0;
  std::uint64_t violations = 0;  // logs failing the audit
  std::string first_violation;
  EventLog witness;  // first log found with min_width
};

inline constexpr int kDefaultOracleGuard = 8;

/// Throws OracleError(TooLarge) when d has more than `max_crossings_guard`
/// crossings.
OracleResult oracle_min_width(const Diagram& d, int max_crossings_guard = kDefaultOracleGuard,
                              const OracleOptions& options = {});

}  // namespace wirtwidth
