#pragma once

// Batch runs over files of "name<TAB>gauss code" lines and re-verification
// of the certificates they produce.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wirtwidth/search.hpp"

namespace wirtwidth {

class CensusIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Strategy { Exact, Heuristic, Auto };

Strategy parse_strategy(std::string_view s);  // throws std::invalid_argument
const char* to_string(Strategy s) noexcept;

struct CensusOptions {
  Strategy strategy = Strategy::Auto;
  int auto_threshold = 12;  // Auto: exact up to this many crossings
  std::uint64_t exact_budget = kDefaultExactBudget;
  std::uint64_t heuristic_budget = kDefaultHeuristicBudget;
  int seeds = 0;  // heuristic seed target, 0 = Wirtinger number
  int workers = 1;
  bool timing = true;  // false writes ms=0 so output is byte-stable
  std::optional<std::filesystem::path> json_path;
};

enum class RowStatus { Exact, HeuristicOnly, Error };

struct CensusRecord {
  std::string name;
  std::string gauss;  // as given, or normalized when it parsed
  int crossings = 0;
  int strands = 0;
  WidthReport report;
  RowStatus status = RowStatus::Error;
  std::string error;  // error code name when status == Error
  std::string detail;

  std::string status_text() const;
};

struct CensusSummary {
  int rows = 0;
  int exact = 0;
  int heuristic_only = 0;
  int errors = 0;
  std::map<long, int> by_width;
  std::vector<std::string> stuck_at_32;  // heuristic rows that never got below 32
};

/// One census row, never throws.
CensusRecord compute_record(const std::string& name, const std::string& code, const CensusOptions& options);

/// Throws CensusIoError when the input cannot be read or the output written.
CensusSummary run_census(const std::filesystem::path& input, const std::filesystem::path& output,
                         const CensusOptions& options = {});

std::string csv_header();
std::string csv_row(const CensusRecord& r, bool timing = true);

struct RowVerdict {
  int line = 0;  // 1-based line in the results file
  std::string name;
  bool pass = false;
  std::string reason;
};

/// Replays every stored witness, recomputes its attached total and lift
/// sweep and compares them with the recorded width. Error rows are skipped.
/// Throws CensusIoError on unreadable files or a bad header.
std::vector<RowVerdict> verify_certificates(const std::filesystem::path& results);

std::string base64_encode(std::string_view bytes);
std::string base64_decode(std::string_view text);  // throws std::invalid_argument

}  // namespace wirtwidth
