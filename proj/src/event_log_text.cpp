#include <charconv>
#include <sstream>

#include "wirtwidth/coloring.hpp"

namespace wirtwidth {

std::string to_text(const EventLog& log) {
  std::ostringstream out;
  for (const Event& e : log.events) {
    if (e.kind == EventKind::Seed)
      out << "S " << e.strand << '\n';
    else
      out << "M " << e.strand << ' ' << e.source << ' ' << e.crossing + 1 << '\n';
    if (!e.newly_multicolored.empty()) {
      out << "#mc";
      for (Crossing c : e.newly_multicolored) out << ' ' << c + 1;
      out << '\n';
    }
  }
  return out.str();
}

namespace {

std::int32_t read_int(std::istringstream& in, int line_no) {
  std::string tok;
  if (!(in >> tok))
    throw ColoringError(ColoringErrc::MalformedLog, "line " + std::to_string(line_no) + ": missing field");
  std::int32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ColoringError(ColoringErrc::MalformedLog, "line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
  return v;
}

std::int32_t read_at_least(std::istringstream& in, int line_no, std::int32_t lo) {
  const std::int32_t v = read_int(in, line_no);
  if (v < lo)
    throw ColoringError(ColoringErrc::MalformedLog, "line " + std::to_string(line_no) + ": " + std::to_string(v) +
                                                        " is out of range");
  return v;
}

}  // namespace

EventLog parse_event_log(std::string_view text) {
  EventLog log;
  std::istringstream lines{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::istringstream in(line);
    std::string head;
    if (!(in >> head)) continue;
    if (head == "S") {
      log.events.push_back(Event::seed(read_at_least(in, line_no, 0)));
    } else if (head == "M") {
      const Strand target = read_at_least(in, line_no, 0);
      const Strand source = read_at_least(in, line_no, 0);
      const Crossing c = read_at_least(in, line_no, 1) - 1;
      log.events.push_back(Event::move(target, source, c));
    } else if (head == "#mc") {
      if (log.events.empty())
        throw ColoringError(ColoringErrc::MalformedLog, "line " + std::to_string(line_no) + ": #mc before any event");
      auto& mc = log.events.back().newly_multicolored;
      std::string tok;
      while (in >> tok) {
        std::istringstream one(tok);
        mc.push_back(read_at_least(one, line_no, 1) - 1);
      }
      continue;
    } else if (head.front() == '#') {
      continue;
    } else {
      throw ColoringError(ColoringErrc::MalformedLog, "line " + std::to_string(line_no) + ": unknown record '" + head + "'");
    }
    std::string extra;
    if (in >> extra)
      throw ColoringError(ColoringErrc::MalformedLog, "line " + std::to_string(line_no) + ": trailing field '" + extra + "'");
  }
  return log;
}

}  // namespace wirtwidth
