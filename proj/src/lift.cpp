#include "wirtwidth/lift.hpp"

#include <algorithm>
#include <sstream>

namespace wirtwidth {

const char* to_string(LiftErrc code) noexcept {
  switch (code) {
    case LiftErrc::AlternationViolation: return "AlternationViolation";
    case LiftErrc::MonotonicityViolation: return "MonotonicityViolation";
    case LiftErrc::DegenerateProfile: return "DegenerateProfile";
  }
  return "Unknown";
}

LiftError::LiftError(LiftErrc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

HeightAssignment HeightAssignment::from_log(const Diagram& d, const EventLog& log) {
  HeightAssignment h;
  constexpr int kUnset = 1;  // heights are negative
  h.strand.assign(static_cast<std::size_t>(d.n_strands()), kUnset);
  h.crossing.assign(static_cast<std::size_t>(d.n_crossings()), std::nullopt);
  int position = 0;
  for (const Event& e : log.events) {
    if (e.strand < 0 || e.strand >= d.n_strands() || h.strand[e.strand] != kUnset)
      throw LiftError(LiftErrc::DegenerateProfile, "log colors strand " + std::to_string(e.strand) + " twice or not at all");
    h.strand[e.strand] = -(++position);
    for (Crossing c : e.newly_multicolored) {
      if (c < 0 || c >= d.n_crossings() || h.crossing[c])
        throw LiftError(LiftErrc::DegenerateProfile, "crossing " + std::to_string(c + 1) + " multi-colored twice");
      h.crossing[c] = -(++position);
    }
  }
  if (std::find(h.strand.begin(), h.strand.end(), kUnset) != h.strand.end())
    throw LiftError(LiftErrc::DegenerateProfile, "log leaves strands uncolored");
  return h;
}

int MorseProfile::max_count() const noexcept {
  return static_cast<int>(std::count_if(events.begin(), events.end(),
                                        [](const CriticalEvent& e) { return e.type == CriticalEvent::Type::Max; }));
}

int MorseProfile::min_count() const noexcept { return static_cast<int>(events.size()) - max_count(); }

std::vector<WalkPoint> lifted_walk(const Diagram& d, const EventLog& log) {
  const HeightAssignment h = HeightAssignment::from_log(d, log);
  std::vector<WalkPoint> walk;
  for (Strand s = 0; s < d.n_strands(); ++s) {
    walk.push_back({WalkPoint::Kind::Strand, s, h.strand[s]});
    if (d.n_crossings() == 0) continue;
    const Crossing c = d.strand_endpoints(s).second;
    if (h.crossing[c]) walk.push_back({WalkPoint::Kind::Crossing, c, *h.crossing[c]});
  }
  return walk;
}

MorseProfile build_profile(const Diagram& d, const EventLog& log) {
  const HeightAssignment h = HeightAssignment::from_log(d, log);
  const int n = d.n_strands();

  // final colors: each seed opens a class, each move copies its source
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<std::uint8_t> is_seed(static_cast<std::size_t>(n), 0);
  int seeds = 0;
  for (const Event& e : log.events) {
    if (e.kind == EventKind::Seed) {
      color[e.strand] = seeds++;
      is_seed[e.strand] = 1;
    } else {
      if (e.source < 0 || e.source >= n || color[e.source] < 0)
        throw LiftError(LiftErrc::DegenerateProfile, "move from an uncolored strand");
      color[e.strand] = color[e.source];
    }
  }

  // Peaks of h_o inside each color class must be exactly the seed strands.
  for (Strand s = 0; s < n; ++s) {
    bool peak = true;
    for (Strand t : {d.prev_strand(s), d.next_strand(s)})
      if (t != s && color[t] == color[s] && h.strand[t] >= h.strand[s]) peak = false;
    if (peak != static_cast<bool>(is_seed[s]))
      throw LiftError(LiftErrc::MonotonicityViolation,
                      "strand " + std::to_string(s) + (peak ? " is a class peak but not a seed" : " is a seed but not a class peak"));
  }

  const std::vector<WalkPoint> walk = lifted_walk(d, log);
  MorseProfile profile;

  if (seeds == 1) {
    if (walk.size() != static_cast<std::size_t>(n))
      throw LiftError(LiftErrc::AlternationViolation, "single color but a multi-colored crossing");
    int local_max = 0;
    for (Strand s = 0; s < n; ++s)
      if (n == 1 || (h.strand[s] > h.strand[d.prev_strand(s)] && h.strand[s] > h.strand[d.next_strand(s)])) ++local_max;
    if (local_max != 1)
      throw LiftError(LiftErrc::MonotonicityViolation, "single class is not unimodal along the knot");
    const auto top = std::find(is_seed.begin(), is_seed.end(), 1) - is_seed.begin();
    profile.events.push_back({CriticalEvent::Type::Max, static_cast<std::int32_t>(top), h.strand[top]});
    return profile;
  }

  std::vector<std::size_t> at;  // walk index of each critical event
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const WalkPoint& p = walk[i];
    if (p.kind == WalkPoint::Kind::Crossing) {
      profile.events.push_back({CriticalEvent::Type::Min, p.id, p.height});
      at.push_back(i);
    } else if (is_seed[p.id]) {
      profile.events.push_back({CriticalEvent::Type::Max, p.id, p.height});
      at.push_back(i);
    }
  }

  const std::size_t m = profile.events.size();
  if (m < 2 || m % 2 != 0)
    throw LiftError(LiftErrc::AlternationViolation, std::to_string(m) + " critical events");
  for (std::size_t k = 0; k < m; ++k) {
    const CriticalEvent& a = profile.events[k];
    const CriticalEvent& b = profile.events[(k + 1) % m];
    if (a.type == b.type)
      throw LiftError(LiftErrc::AlternationViolation, "two consecutive critical events of the same type");
    // strictly monotone run from a to b along the walk
    const bool descending = a.type == CriticalEvent::Type::Max;
    std::size_t i = at[k];
    const std::size_t end = at[(k + 1) % m];
    do {
      const std::size_t j = (i + 1) % walk.size();
      const bool ok = descending ? walk[j].height < walk[i].height : walk[j].height > walk[i].height;
      if (!ok)
        throw LiftError(LiftErrc::MonotonicityViolation,
                        "walk is not monotone between heights " + std::to_string(a.height) + " and " +
                            std::to_string(b.height));
      i = j;
    } while (i != end);
  }

  // At a crossing that is never multi-colored the lifted over-strand passes
  // above the lower of the two under-strands.
  for (Crossing c = 0; c < d.n_crossings(); ++c) {
    if (h.crossing[c]) continue;
    const auto [p, q] = d.under_pair(c);
    if (!(h.strand[d.over_strand(c)] > std::min(h.strand[p], h.strand[q])))
      throw LiftError(LiftErrc::MonotonicityViolation,
                      "over-strand of crossing " + std::to_string(c + 1) + " lies below both under-strands");
  }
  return profile;
}

long sweep_width(const MorseProfile& profile) {
  const auto& ev = profile.events;
  const std::size_t n = ev.size();
  if (n == 1 && ev.front().type == CriticalEvent::Type::Max) return 2;
  if (n < 2 || n % 2 != 0)
    throw LiftError(LiftErrc::DegenerateProfile, std::to_string(n) + " critical events");
  for (std::size_t i = 0; i < n; ++i)
    if (ev[i].type == ev[(i + 1) % n].type)
      throw LiftError(LiftErrc::DegenerateProfile, "critical events do not alternate");

  std::vector<int> heights;
  heights.reserve(n);
  for (const auto& e : ev) heights.push_back(e.height);
  std::sort(heights.begin(), heights.end(), std::greater<>());
  if (std::adjacent_find(heights.begin(), heights.end()) != heights.end())
    throw LiftError(LiftErrc::DegenerateProfile, "two critical points share a height");

  long width = 0;
  for (std::size_t g = 0; g + 1 < n; ++g) {
    const long level2 = static_cast<long>(heights[g]) + heights[g + 1];  // twice a regular value
    for (std::size_t i = 0; i < n; ++i) {
      const long a = 2L * ev[i].height;
      const long b = 2L * ev[(i + 1) % n].height;
      if (std::min(a, b) < level2 && level2 < std::max(a, b)) ++width;
    }
  }
  return width;
}

std::string profile_text(const MorseProfile& profile) {
  std::ostringstream out;
  for (const auto& e : profile.events) {
    if (e.type == CriticalEvent::Type::Max)
      out << "max strand " << e.site << ' ' << e.height << '\n';
    else
      out << "min crossing " << e.site + 1 << ' ' << e.height << '\n';
  }
  return out.str();
}

std::string polyline_text(const std::vector<WalkPoint>& walk) {
  std::ostringstream out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const auto& p = walk[i];
    out << i << ' ' << p.height << ' ' << (p.kind == WalkPoint::Kind::Strand ? "strand " : "crossing ")
        << (p.kind == WalkPoint::Kind::Strand ? p.id : p.id + 1) << '\n';
  }
  return out.str();
}

}  // namespace wirtwidth
