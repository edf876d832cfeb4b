#include "wirtwidth/oracle.hpp"

#include <limits>
#include <set>
#include <utility>
#include <vector>

namespace wirtwidth {

const char* to_string(OracleErrc code) noexcept {
  switch (code) {
    case OracleErrc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

OracleError::OracleError(OracleErrc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

namespace {

class Enumerator {
 public:
  Enumerator(const Diagram& d, const OracleOptions& opt) : d_(d), opt_(opt) {}

  OracleResult run() {
    result_.min_width = std::numeric_limits<long>::max();
    result_.min_seed_count = std::numeric_limits<int>::max();
    ColoringState st(d_);
    dfs(st, 0);
    return std::move(result_);
  }

 private:
  void dfs(const ColoringState& st, long total) {
    if (st.complete()) {
      finish(total);
      return;
    }
    if (opt_.deduplicate) {
      std::vector<int> key(st.colors().begin(), st.colors().end());
      for (Crossing c = 0; c < d_.n_crossings(); ++c) key.push_back(st.is_multicolored(c));
      if (!seen_.emplace(std::move(key), total).second) return;
    }
    for (Strand s = 0; s < d_.n_strands(); ++s) {
      if (st.is_colored(s)) continue;
      ColoringState next = st;
      Event e = apply_seed(d_, next, s);
      const long cost = stage_cost(st.level(), true, static_cast<int>(e.newly_multicolored.size()));
      log_.events.push_back(std::move(e));
      dfs(next, total + cost);
      log_.events.pop_back();
    }
    for (const MoveChoice& m : legal_moves(d_, st)) {
      ColoringState next = st;
      Event e = apply_move(d_, next, m.strand, m.crossing);
      const long cost = stage_cost(st.level(), false, static_cast<int>(e.newly_multicolored.size()));
      log_.events.push_back(std::move(e));
      dfs(next, total + cost);
      log_.events.pop_back();
    }
  }

  void finish(long total) {
    ++result_.logs_enumerated;
    if (opt_.audit) {
      LogAudit audit = audit_completed_log(d_, log_);
      if (!audit.ok()) {
        if (result_.violations++ == 0) result_.first_violation = audit.violations.front() + "\n" + to_text(log_);
      }
    }
    if (opt_.visit) opt_.visit(log_, total);
    const int seeds = log_.seed_count();
    if (seeds < result_.min_seed_count) result_.min_seed_count = seeds;
    if (total < result_.min_width) {
      result_.min_width = total;
      result_.count_of_optimal_logs = 0;
      result_.witness = log_;
    }
    if (total == result_.min_width) ++result_.count_of_optimal_logs;
  }

  const Diagram& d_;
  const OracleOptions& opt_;
  OracleResult result_;
  EventLog log_;
  std::set<std::pair<std::vector<int>, long>> seen_;
};

}  // namespace

OracleResult oracle_min_width(const Diagram& d, int max_crossings_guard, const OracleOptions& options) {
  if (d.n_crossings() > max_crossings_guard)
    throw OracleError(OracleErrc::TooLarge, std::to_string(d.n_crossings()) + " crossings exceeds guard " +
                                                std::to_string(max_crossings_guard));
  return Enumerator(d, options).run();
}

}  // namespace wirtwidth
