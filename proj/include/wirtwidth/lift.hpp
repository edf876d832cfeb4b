#pragma once

// Height profile of the knot lifted from a completed coloring.
//
// Each strand and each multi-colored crossing is placed at the height
// h_o = -(its position in the Delta-ordering). Walking the knot strand by
// strand, the lifted curve rises to a maximum on every seed strand, dips to
// a minimum at every multi-colored crossing and is monotone in between. The
// width of that curve is recomputed here by sweeping regular levels, without
// looking at the attached sequence.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wirtwidth/coloring.hpp"
#include "wirtwidth/gauss.hpp"

namespace wirtwidth {

enum class LiftErrc { AlternationViolation, MonotonicityViolation, DegenerateProfile };

const char* to_string(LiftErrc code) noexcept;

class LiftError : public std::runtime_error {
 public:
  LiftError(LiftErrc code, const std::string& what);
  LiftErrc code() const noexcept { return code_; }

 private:
  LiftErrc code_;
};

struct HeightAssignment {
  std::vector<int> strand;                   // h_o of every strand
  std::vector<std::optional<int>> crossing;  // h_o of multi-colored crossings

  static HeightAssignment from_log(const Diagram& d, const EventLog& log);
};

struct CriticalEvent {
  enum class Type : std::uint8_t { Max, Min } type;
  std::int32_t site;  // seed strand for Max, crossing for Min
  int height;

  friend bool operator==(const CriticalEvent&, const CriticalEvent&) = default;
};

/// Critical events in the cyclic order met walking the knot from strand 0.
struct MorseProfile {
  std::vector<CriticalEvent> events;

  int max_count() const noexcept;
  int min_count() const noexcept;
};

/// One sample of the lifted curve along the walk (for plotting).
struct WalkPoint {
  enum class Kind : std::uint8_t { Strand, Crossing } kind;
  std::int32_t id;
  int height;
};

/// Strands and multi-colored crossings in walk order with their heights.
std::vector<WalkPoint> lifted_walk(const Diagram& d, const EventLog& log);

/// Expects a completed, verified log. Throws LiftError when the walk does
/// not alternate between seed maxima and multi-colored minima with strictly
/// monotone runs in between.
MorseProfile build_profile(const Diagram& d, const EventLog& log);

/// Sum over the gaps between consecutive critical heights of the number of
/// profile arcs crossing a level in that gap. A profile with a single
/// maximum and no minimum (one color) has width 2.
long sweep_width(const MorseProfile& profile);

std::string profile_text(const MorseProfile& profile);
std::string polyline_text(const std::vector<WalkPoint>& walk);

}  // namespace wirtwidth
