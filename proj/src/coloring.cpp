#include "wirtwidth/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace wirtwidth {

const char* to_string(ColoringErrc code) noexcept {
  switch (code) {
    case ColoringErrc::AlreadyColored: return "AlreadyColored";
    case ColoringErrc::IneligibleMove: return "IneligibleMove";
    case ColoringErrc::IncompleteSequence: return "IncompleteSequence";
    case ColoringErrc::IllegalEventAtStage: return "IllegalEventAtStage";
    case ColoringErrc::MalformedLog: return "MalformedLog";
  }
  return "Unknown";
}

ColoringError::ColoringError(ColoringErrc code, const std::string& what, int stage)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), stage_(stage) {}

ColoringState::ColoringState(const Diagram& d)
    : color_(static_cast<std::size_t>(d.n_strands()), kUncolored),
      multicolored_(static_cast<std::size_t>(d.n_crossings()), 0) {}

int EventLog::seed_count() const noexcept {
  return static_cast<int>(std::count_if(events.begin(), events.end(),
                                        [](const Event& e) { return e.kind == EventKind::Seed; }));
}

int EventLog::multicolored_count() const noexcept {
  std::size_t n = 0;
  for (const Event& e : events) n += e.newly_multicolored.size();
  return static_cast<int>(n);
}

class ColoringEngine {
 public:
  static void check_strand(const Diagram& d, Strand s) {
    if (s < 0 || s >= d.n_strands())
      throw ColoringError(ColoringErrc::IneligibleMove, "no strand " + std::to_string(s));
  }

  // Colors s and records the crossings that become multi-colored. Only
  // crossings incident to s can change status.
  static std::vector<Crossing> paint(const Diagram& d, ColoringState& st, Strand s, Color color) {
    st.color_[s] = color;
    ++st.colored_count_;
    ++st.stage_;

    std::vector<Crossing> candidates(d.over_crossings(s).begin(), d.over_crossings(s).end());
    if (d.n_crossings() > 0) {
      const auto [from, to] = d.strand_endpoints(s);
      candidates.push_back(from);
      candidates.push_back(to);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Crossing> fresh;
    for (Crossing c : candidates) {
      if (st.multicolored_[c]) continue;
      const auto [a, b] = d.under_pair(c);
      const Strand v = d.over_strand(c);
      if (st.color_[a] == kUncolored || st.color_[b] == kUncolored || st.color_[v] == kUncolored) continue;
      if (st.color_[a] != st.color_[b]) {
        st.multicolored_[c] = 1;
        ++st.multicolored_count_;
        fresh.push_back(c);
      }
    }
    return fresh;
  }

  static Event seed(const Diagram& d, ColoringState& st, Strand s) {
    check_strand(d, s);
    if (st.color_[s] != kUncolored)
      throw ColoringError(ColoringErrc::AlreadyColored, "strand " + std::to_string(s) + " is already colored");
    Event e = Event::seed(s);
    // fresh colors are the stage number of the seed addition
    const Color color = st.stage_ + 1;
    ++st.colors_used_;
    e.newly_multicolored = paint(d, st, s, color);
    return e;
  }

  static Event move(const Diagram& d, ColoringState& st, Strand target, Crossing c) {
    check_strand(d, target);
    if (c < 0 || c >= d.n_crossings())
      throw ColoringError(ColoringErrc::IneligibleMove, "no crossing " + std::to_string(c + 1));
    if (st.color_[target] != kUncolored)
      throw ColoringError(ColoringErrc::AlreadyColored,
                          "strand " + std::to_string(target) + " is already colored");
    const Strand source = d.other_under(c, target);
    if (source == kNoStrand)
      throw ColoringError(ColoringErrc::IneligibleMove, "strand " + std::to_string(target) +
                                                            " is not an under-strand of crossing " +
                                                            std::to_string(c + 1));
    if (st.color_[source] == kUncolored)
      throw ColoringError(ColoringErrc::IneligibleMove,
                          "other under-strand " + std::to_string(source) + " of crossing " +
                              std::to_string(c + 1) + " is uncolored");
    if (st.color_[d.over_strand(c)] == kUncolored)
      throw ColoringError(ColoringErrc::IneligibleMove,
                          "over-strand " + std::to_string(d.over_strand(c)) + " of crossing " +
                              std::to_string(c + 1) + " is uncolored");
    Event e = Event::move(target, source, c);
    e.newly_multicolored = paint(d, st, target, st.color_[source]);
    return e;
  }
};

Event apply_seed(const Diagram& d, ColoringState& state, Strand s) { return ColoringEngine::seed(d, state, s); }

Event apply_move(const Diagram& d, ColoringState& state, Strand target, Crossing c) {
  return ColoringEngine::move(d, state, target, c);
}

Transition seed_addition(const Diagram& d, const ColoringState& state, Strand s) {
  ColoringState next = state;
  Event e = apply_seed(d, next, s);
  return {std::move(next), std::move(e)};
}

Transition coloring_move(const Diagram& d, const ColoringState& state, Strand target, Crossing c) {
  ColoringState next = state;
  Event e = apply_move(d, next, target, c);
  return {std::move(next), std::move(e)};
}

namespace {

// Endpoint crossings of s in ascending order, without repeats.
std::pair<Crossing, Crossing> sorted_endpoints(const Diagram& d, Strand s) {
  auto [a, b] = d.strand_endpoints(s);
  if (b < a) std::swap(a, b);
  if (a == b) b = kNoCrossing;
  return {a, b};
}

bool eligible(const Diagram& d, const ColoringState& st, Strand s, Crossing c) {
  const Strand other = d.other_under(c, s);
  return other != kNoStrand && st.is_colored(other) && st.is_colored(d.over_strand(c));
}

}  // namespace

std::vector<MoveChoice> legal_moves(const Diagram& d, const ColoringState& state) {
  std::vector<MoveChoice> out;
  if (d.n_crossings() == 0) return out;
  for (Strand s = 0; s < d.n_strands(); ++s) {
    if (state.is_colored(s)) continue;
    const auto [a, b] = sorted_endpoints(d, s);
    if (eligible(d, state, s, a)) out.push_back({s, a});
    if (b != kNoCrossing && eligible(d, state, s, b)) out.push_back({s, b});
  }
  return out;
}

int saturate(const Diagram& d, ColoringState& state, EventLog* log) {
  if (d.n_crossings() == 0) return 0;
  int applied = 0;
  for (;;) {
    MoveChoice next{kNoStrand, kNoCrossing};
    for (Strand s = 0; s < d.n_strands() && next.strand == kNoStrand; ++s) {
      if (state.is_colored(s)) continue;
      const auto [a, b] = sorted_endpoints(d, s);
      if (eligible(d, state, s, a))
        next = {s, a};
      else if (b != kNoCrossing && eligible(d, state, s, b))
        next = {s, b};
    }
    if (next.strand == kNoStrand) return applied;
    Event e = apply_move(d, state, next.strand, next.crossing);
    if (log) log->events.push_back(std::move(e));
    ++applied;
  }
}

namespace {

// Color classes must be arcs of the strand cycle.
std::string connectivity_violation(const Diagram& d, const ColoringState& st) {
  const int n = d.n_strands();
  std::vector<Color> seen;
  for (Strand s = 0; s < n; ++s) {
    const Color c = st.color_of(s);
    if (c == kUncolored) continue;
    if (st.color_of(d.prev_strand(s)) != c) {
      auto it = std::find(seen.begin(), seen.end(), c);
      if (it != seen.end())
        return "color " + std::to_string(c) + " is not connected";
      seen.push_back(c);
    }
  }
  return {};
}

}  // namespace

ColoringState replay_and_verify(const Diagram& d, const EventLog& log) {
  ColoringState st(d);
  for (std::size_t i = 0; i < log.events.size(); ++i) {
    const int stage = static_cast<int>(i) + 1;
    const Event& e = log.events[i];
    Event got;
    try {
      if (e.kind == EventKind::Seed) {
        got = apply_seed(d, st, e.strand);
      } else {
        if (e.crossing >= 0 && e.crossing < d.n_crossings() && e.strand >= 0 && e.strand < d.n_strands() &&
            d.other_under(e.crossing, e.strand) != e.source)
          throw ColoringError(ColoringErrc::IneligibleMove,
                              "source strand " + std::to_string(e.source) + " is not the other under-strand");
        got = apply_move(d, st, e.strand, e.crossing);
      }
    } catch (const ColoringError& err) {
      throw ColoringError(ColoringErrc::IllegalEventAtStage,
                          "stage " + std::to_string(stage) + ": " + err.what(), stage);
    }
    std::vector<Crossing> recorded = e.newly_multicolored;
    std::sort(recorded.begin(), recorded.end());
    if (recorded != got.newly_multicolored) {
      std::ostringstream msg;
      msg << "stage " << stage << ": recorded multi-colored crossings {";
      for (Crossing c : recorded) msg << ' ' << c + 1;
      msg << " } but the rules give {";
      for (Crossing c : got.newly_multicolored) msg << ' ' << c + 1;
      msg << " }";
      throw ColoringError(ColoringErrc::IllegalEventAtStage, msg.str(), stage);
    }
    if (auto bad = connectivity_violation(d, st); !bad.empty())
      throw ColoringError(ColoringErrc::IllegalEventAtStage, "stage " + std::to_string(stage) + ": " + bad, stage);
  }
  return st;
}

std::vector<DeltaElement> delta_ordering(const EventLog& log) {
  std::vector<DeltaElement> out;
  for (std::size_t i = 0; i < log.events.size(); ++i) {
    const int stage = static_cast<int>(i) + 1;
    const Event& e = log.events[i];
    out.push_back({DeltaElement::Kind::Strand, e.strand, stage});
    for (Crossing c : e.newly_multicolored) out.push_back({DeltaElement::Kind::Crossing, c, stage});
  }
  return out;
}

std::vector<DeltaSymbol> delta_word(const EventLog& log) {
  std::vector<DeltaSymbol> out;
  for (const Event& e : log.events) {
    if (e.kind == EventKind::Seed) out.push_back(DeltaSymbol::Seed);
    out.insert(out.end(), e.newly_multicolored.size(), DeltaSymbol::Multicolored);
  }
  return out;
}

AttachedSequence attached_sequence(std::span<const DeltaSymbol> word) {
  if (word.empty() || word.front() != DeltaSymbol::Seed)
    throw ColoringError(ColoringErrc::MalformedLog, "attached sequence must open with a seed");
  AttachedSequence seq;
  seq.values.reserve(word.size());
  int level = 0;
  for (DeltaSymbol sym : word) {
    level += sym == DeltaSymbol::Seed ? 2 : -2;
    seq.values.push_back(level);
    seq.total += level;
  }
  return seq;
}

AttachedSequence attached_sequence(const Diagram& d, const EventLog& log) {
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(d.n_strands()), 0);
  for (const Event& e : log.events) {
    if (e.strand < 0 || e.strand >= d.n_strands() || hit[e.strand]++)
      throw ColoringError(ColoringErrc::IncompleteSequence, "log colors a strand twice or names an unknown strand");
  }
  if (log.events.size() != hit.size())
    throw ColoringError(ColoringErrc::IncompleteSequence,
                        std::to_string(log.events.size()) + " of " + std::to_string(hit.size()) +
                            " strands colored");
  const std::vector<DeltaSymbol> word = delta_word(log);
  return attached_sequence(word);
}

long stage_cost(int level, bool seed, int newly_multicolored) noexcept {
  long cost = 0;
  if (seed) {
    level += 2;
    cost += level;
  }
  for (int i = 0; i < newly_multicolored; ++i) {
    level -= 2;
    cost += level;
  }
  return cost;
}

LogAudit audit_completed_log(const Diagram& d, const EventLog& log) {
  LogAudit audit;
  auto fail = [&](std::string msg) { audit.violations.push_back(std::move(msg)); };

  ColoringState final_state(d);
  try {
    final_state = replay_and_verify(d, log);
  } catch (const ColoringError& err) {
    fail(err.what());
    return audit;
  }
  if (!final_state.complete()) {
    fail("log does not color every strand");
    return audit;
  }

  const int n = d.n_strands();
  std::vector<int> strand_h(static_cast<std::size_t>(n), 0);
  std::vector<int> crossing_h(static_cast<std::size_t>(d.n_crossings()), 0);
  const auto order = delta_ordering(log);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int h = -static_cast<int>(i + 1);
    if (order[i].kind == DeltaElement::Kind::Strand)
      strand_h[order[i].id] = h;
    else
      crossing_h[order[i].id] = h;
  }

  const int seeds = log.seed_count();
  const int mc = log.multicolored_count();
  if (seeds >= 2 ? mc != seeds : mc != 0)
    fail("balance: " + std::to_string(seeds) + " seeds but " + std::to_string(mc) + " multi-colored crossings");

  {
    int level = 0;
    for (DeltaSymbol sym : delta_word(log)) {
      level += sym == DeltaSymbol::Seed ? 2 : -2;
      if (level < 0) {
        fail("attached sequence has a negative prefix");
        break;
      }
    }
  }

  // Unique local maximum of h_o on every final color class, ordered along
  // the strand cycle.
  auto color = [&](Strand s) { return final_state.color_of(s); };
  if (n >= 2) {
    std::vector<Color> checked;
    for (Strand s = 0; s < n; ++s) {
      if (color(d.prev_strand(s)) == color(s)) continue;
      std::vector<Strand> arc{s};
      for (Strand t = d.next_strand(s); t != s && color(t) == color(s); t = d.next_strand(t)) arc.push_back(t);
      int peaks = 0;
      const std::size_t m = arc.size();
      for (std::size_t i = 0; i < m; ++i) {
        const int h = strand_h[arc[i]];
        const bool left_ok = i == 0 || h > strand_h[arc[i - 1]];
        const bool right_ok = i + 1 == m || h > strand_h[arc[i + 1]];
        if (left_ok && right_ok) ++peaks;
      }
      if (peaks != 1)
        fail("color " + std::to_string(color(s)) + " has " + std::to_string(peaks) + " local maxima");
      checked.push_back(color(s));
    }
    if (checked.empty()) {
      // a single class covering the whole cycle
      int peaks = 0;
      for (Strand s = 0; s < n; ++s)
        if (strand_h[s] > strand_h[d.prev_strand(s)] && strand_h[s] > strand_h[d.next_strand(s)]) ++peaks;
      if (peaks != 1) fail("the single color class has " + std::to_string(peaks) + " local maxima");
    }
  }

  for (Crossing c = 0; c < d.n_crossings(); ++c) {
    const auto [a, b] = d.under_pair(c);
    const Strand v = d.over_strand(c);
    const int low = std::min(strand_h[a], strand_h[b]);
    if (final_state.is_multicolored(c)) {
      if (!(crossing_h[c] < std::min(low, strand_h[v])))
        fail("multi-colored crossing " + std::to_string(c + 1) + " is not below its three strands");
    } else if (seeds >= 2 && !(strand_h[v] > low)) {
      fail("crossing " + std::to_string(c + 1) + ": over-strand not above the lower under-strand");
    }
  }
  return audit;
}

}  // namespace wirtwidth
