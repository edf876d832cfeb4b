#pragma once

// Partial colorings of a knot diagram and the two rules that extend them.
//
// A seed addition gives an uncolored strand a brand-new color. A coloring
// move lets an uncolored strand inherit the color of the other under-strand
// at one of its endpoint crossings, provided that crossing's over-strand is
// already colored. A crossing is multi-colored once all three of its strands
// are colored and its two under-strands carry different colors.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wirtwidth/gauss.hpp"

namespace wirtwidth {

using Color = std::int32_t;
inline constexpr Color kUncolored = -1;

enum class ColoringErrc {
  AlreadyColored,
  IneligibleMove,
  IncompleteSequence,
  IllegalEventAtStage,
  MalformedLog,
};

const char* to_string(ColoringErrc code) noexcept;

class ColoringError : public std::runtime_error {
 public:
  ColoringError(ColoringErrc code, const std::string& what, int stage = 0);
  ColoringErrc code() const noexcept { return code_; }
  /// 1-based stage of the offending event (IllegalEventAtStage), else 0.
  int stage() const noexcept { return stage_; }

 private:
  ColoringErrc code_;
  int stage_;
};

class ColoringState {
 public:
  /// The vacuous partial coloring of d.
  explicit ColoringState(const Diagram& d);

  Color color_of(Strand s) const { return color_.at(s); }
  bool is_colored(Strand s) const { return color_.at(s) != kUncolored; }
  std::span<const Color> colors() const noexcept { return color_; }

  int colors_used() const noexcept { return colors_used_; }
  int colored_count() const noexcept { return colored_count_; }
  int stage() const noexcept { return stage_; }
  bool complete() const noexcept { return colored_count_ == static_cast<int>(color_.size()); }

  bool is_multicolored(Crossing c) const { return multicolored_.at(c) != 0; }
  int multicolored_count() const noexcept { return multicolored_count_; }

  /// Running value of the attached sequence: 2 * (colors - multi-colored).
  int level() const noexcept { return 2 * (colors_used_ - multicolored_count_); }

  friend bool operator==(const ColoringState&, const ColoringState&) = default;

 private:
  friend class ColoringEngine;

  std::vector<Color> color_;
  std::vector<std::uint8_t> multicolored_;
  int colors_used_ = 0;
  int colored_count_ = 0;
  int multicolored_count_ = 0;
  int stage_ = 0;
};

enum class EventKind : std::uint8_t { Seed, Move };

struct Event {
  EventKind kind = EventKind::Seed;
  Strand strand = kNoStrand;
  Strand source = kNoStrand;       // moves only
  Crossing crossing = kNoCrossing;  // moves only
  /// Crossings that became multi-colored at this stage, ascending.
  std::vector<Crossing> newly_multicolored;

  static Event seed(Strand s) { return Event{EventKind::Seed, s, kNoStrand, kNoCrossing, {}}; }
  static Event move(Strand target, Strand source, Crossing c) {
    return Event{EventKind::Move, target, source, c, {}};
  }

  friend bool operator==(const Event&, const Event&) = default;
};

/// Ordered record of a coloring sequence. The diagram it belongs to is
/// passed alongside wherever it is interpreted.
struct EventLog {
  std::vector<Event> events;

  std::size_t size() const noexcept { return events.size(); }
  int seed_count() const noexcept;
  int multicolored_count() const noexcept;

  friend bool operator==(const EventLog&, const EventLog&) = default;
};

struct Transition {
  ColoringState state;
  Event event;
};

struct MoveChoice {
  Strand strand;
  Crossing crossing;

  friend bool operator==(const MoveChoice&, const MoveChoice&) = default;
};

// In-place rules. They validate preconditions, update `state` and return the
// event with its multi-colored crossings filled in. On error the state is
// left untouched.
Event apply_seed(const Diagram& d, ColoringState& state, Strand s);
Event apply_move(const Diagram& d, ColoringState& state, Strand target, Crossing c);

// Value-returning forms.
Transition seed_addition(const Diagram& d, const ColoringState& state, Strand s);
Transition coloring_move(const Diagram& d, const ColoringState& state, Strand target, Crossing c);

/// Every eligible coloring move, ordered by strand then crossing.
std::vector<MoveChoice> legal_moves(const Diagram& d, const ColoringState& state);

/// Applies eligible moves (always the first in legal_moves order) until none
/// remain, appending the events to `log` when given.
int saturate(const Diagram& d, ColoringState& state, EventLog* log = nullptr);

/// Re-executes `log` from the vacuous coloring. Every event is checked
/// against the rules, recorded multi-colored crossings must match the
/// recomputed ones (as sets), and every color class must stay connected
/// after every stage. Throws ColoringError(IllegalEventAtStage).
ColoringState replay_and_verify(const Diagram& d, const EventLog& log);

// ---------------------------------------------------------------------------
// Delta-orderings and attached sequences

enum class DeltaSymbol : std::uint8_t { Seed, Multicolored };

struct DeltaElement {
  enum class Kind : std::uint8_t { Strand, Crossing } kind;
  std::int32_t id;
  int stage;  // 1-based

  friend bool operator==(const DeltaElement&, const DeltaElement&) = default;
};

/// Each stage's strand followed by the crossings multi-colored at that stage,
/// in recorded order. Position i (0-based) has combinatorial height -(i+1).
std::vector<DeltaElement> delta_ordering(const EventLog& log);

/// The restriction of the Delta-ordering to seeds and multi-colored crossings.
std::vector<DeltaSymbol> delta_word(const EventLog& log);

struct AttachedSequence {
  std::vector<int> values;
  long total = 0;
};

/// One value per symbol: 2 for the first seed, +2 per later seed, -2 per
/// multi-colored crossing. Throws ColoringError(MalformedLog) if the word is
/// empty or does not open with a seed.
AttachedSequence attached_sequence(std::span<const DeltaSymbol> word);

/// Throws ColoringError(IncompleteSequence) unless `log` colors every strand
/// of d exactly once.
AttachedSequence attached_sequence(const Diagram& d, const EventLog& log);

/// Sum of the attached values emitted by one stage that starts at running
/// level `level`, adds a seed when `seed` is set and then multi-colors
/// `newly_multicolored` crossings.
long stage_cost(int level, bool seed, int newly_multicolored) noexcept;

// ---------------------------------------------------------------------------
// Structural checks on completed logs

struct LogAudit {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Replays the log and checks, on the completed coloring:
///  - every color class stays connected at every stage (via replay),
///  - each final class has a unique local maximum of h_o = -(Delta position),
///  - with at least two colors, a crossing that is never multi-colored has
///    h_o(over) > min h_o(unders), and a multi-colored crossing sits below all
///    three of its strands,
///  - #multi-colored equals #seeds (or 0 with a single seed),
///  - every prefix of the attached sequence is non-negative.
LogAudit audit_completed_log(const Diagram& d, const EventLog& log);

// ---------------------------------------------------------------------------
// Certificate text form
//
//   S <strand>
//   M <strand> <source-strand> <crossing>
//   #mc <crossing> ...
//
// Strands are numbered from 0 in the order of their starting under-passes;
// crossings use the 1-based labels of the normalized Gauss code. A `#mc`
// line annotates the event just above it. Other lines starting with '#' and
// blank lines are ignored.

std::string to_text(const EventLog& log);
EventLog parse_event_log(std::string_view text);

}  // namespace wirtwidth
