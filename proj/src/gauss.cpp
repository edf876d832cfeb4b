#include "wirtwidth/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace wirtwidth {

const char* to_string(GaussErrc code) noexcept {
  switch (code) {
    case GaussErrc::MalformedToken: return "MalformedToken";
    case GaussErrc::LabelCountError: return "LabelCountError";
    case GaussErrc::EmptyRoleError: return "EmptyRoleError";
    case GaussErrc::SelfAdjacentStrand: return "SelfAdjacentStrand";
    case GaussErrc::NotAKnot: return "NotAKnot";
  }
  return "Unknown";
}

GaussError::GaussError(GaussErrc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

namespace {

struct RawEntry {
  long label;
  Role role;
};

long parse_label(std::string_view digits, std::string_view token) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw GaussError(GaussErrc::MalformedToken, "cannot read token '" + std::string(token) + "'");
  return value;
}

RawEntry parse_token(std::string_view token) {
  const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(token.front())));
  if (head == 'U' || head == 'O') {
    std::string_view rest = token.substr(1);
    if (!rest.empty() && (rest.back() == '+' || rest.back() == '-')) rest.remove_suffix(1);
    const long label = parse_label(rest, token);
    if (label <= 0)
      throw GaussError(GaussErrc::MalformedToken, "label must be positive in '" + std::string(token) + "'");
    return {label, head == 'U' ? Role::Under : Role::Over};
  }

  bool negative = false;
  std::string_view digits = token;
  if (digits.front() == '+' || digits.front() == '-') {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  const long label = parse_label(digits, token);
  if (label == 0)
    throw GaussError(GaussErrc::EmptyRoleError, "label 0 cannot carry an over/under role");
  return {label, negative ? Role::Under : Role::Over};
}

}  // namespace

GaussCode parse_gauss(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size() + 8);
  for (char ch : text) {
    switch (ch) {
      case '[': case ']': case '{': case '}': case '(': case ')': case ',':
        cleaned.push_back(' ');
        break;
      case '|': case ';':
        cleaned += " | ";
        break;
      default:
        cleaned.push_back(ch);
    }
  }

  std::vector<RawEntry> raw;
  std::vector<std::size_t> starts;
  bool component_open = false;
  bool saw_separator = false;
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) {
    if (token == "|") {
      if (!component_open)
        throw GaussError(GaussErrc::MalformedToken, "empty component");
      component_open = false;
      saw_separator = true;
      continue;
    }
    if (!component_open && saw_separator) starts.push_back(raw.size());
    component_open = true;
    raw.push_back(parse_token(token));
  }
  if (saw_separator && !component_open)
    throw GaussError(GaussErrc::MalformedToken, "empty component");

  // Renumber labels 1..n by first appearance and check each label occurs
  // exactly once per role.
  std::map<long, int> renumber;
  std::vector<int> over_count, under_count;
  std::vector<long> original;
  GaussCode code;
  code.component_starts = std::move(starts);
  code.entries.reserve(raw.size());
  for (const RawEntry& e : raw) {
    auto [it, inserted] = renumber.try_emplace(e.label, static_cast<int>(renumber.size()) + 1);
    if (inserted) {
      over_count.push_back(0);
      under_count.push_back(0);
      original.push_back(e.label);
    }
    const int label = it->second;
    (e.role == Role::Over ? over_count : under_count)[label - 1]++;
    code.entries.push_back({label, e.role});
  }
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (over_count[i] != 1 || under_count[i] != 1) {
      std::ostringstream msg;
      msg << "label " << original[i] << " appears " << over_count[i] << " time(s) over and "
          << under_count[i] << " time(s) under";
      throw GaussError(GaussErrc::LabelCountError, msg.str());
    }
  }
  return code;
}

std::string serialize_gauss(const GaussCode& code, std::string_view separator) {
  std::string out;
  std::size_t next_break = 0;
  for (std::size_t i = 0; i < code.entries.size(); ++i) {
    if (next_break < code.component_starts.size() && code.component_starts[next_break] == i) {
      out += " | ";
      ++next_break;
    } else if (i > 0) {
      out += separator;
    }
    const GaussEntry& e = code.entries[i];
    out += std::to_string(e.role == Role::Under ? -e.label : e.label);
  }
  return out;
}

Strand Diagram::other_under(Crossing c, Strand s) const noexcept {
  const auto [a, b] = under_pair_[c];
  if (s == a) return b;
  if (s == b) return a;
  return kNoStrand;
}

bool Diagram::is_under_strand(Crossing c, Strand s) const noexcept {
  const auto [a, b] = under_pair_[c];
  return s == a || s == b;
}

Diagram Diagram::build(const GaussCode& code) {
  Diagram d;
  d.code_ = code;
  d.n_crossings_ = code.n_crossings();

  if (d.n_crossings_ == 0) {
    if (code.n_components() > 1)
      throw GaussError(GaussErrc::NotAKnot, "code has several components");
    d.n_strands_ = 1;
    d.endpoints_.assign(1, {kNoCrossing, kNoCrossing});
    d.over_crossings_.assign(1, {});
    return d;
  }

  const int n = d.n_crossings_;
  d.over_strand_.assign(n, kNoStrand);
  d.under_pair_.assign(n, {kNoStrand, kNoStrand});

  std::vector<std::size_t> bounds = code.component_starts;
  bounds.insert(bounds.begin(), 0);
  bounds.push_back(code.entries.size());

  for (std::size_t comp = 0; comp + 1 < bounds.size(); ++comp) {
    const std::size_t begin = bounds[comp];
    const std::size_t len = bounds[comp + 1] - begin;
    std::vector<std::size_t> unders;
    for (std::size_t i = 0; i < len; ++i)
      if (code.entries[begin + i].role == Role::Under) unders.push_back(i);
    if (unders.empty())
      throw GaussError(GaussErrc::NotAKnot, "a component passes under no crossing");

    const Strand first = static_cast<Strand>(d.endpoints_.size());
    const auto m = static_cast<Strand>(unders.size());
    for (Strand j = 0; j < m; ++j) {
      const Strand s = first + j;
      const std::size_t from = unders[j];
      const std::size_t to = unders[(j + 1) % m];
      const Crossing start_c = code.entries[begin + from].label - 1;
      const Crossing end_c = code.entries[begin + to].label - 1;
      d.endpoints_.push_back({start_c, end_c});
      d.over_crossings_.emplace_back();
      // entries strictly between the two under-passes (cyclically) are over-passes
      for (std::size_t k = (from + 1) % len; k != to; k = (k + 1) % len) {
        const Crossing c = code.entries[begin + k].label - 1;
        d.over_strand_[c] = s;
        d.over_crossings_.back().push_back(c);
      }
      d.under_pair_[end_c] = {s, first + (j + 1) % m};
    }
  }
  d.n_strands_ = static_cast<int>(d.endpoints_.size());

  if (code.n_components() > 1)
    throw GaussError(GaussErrc::NotAKnot, "code has " + std::to_string(code.n_components()) + " components");

  // The adjacency relation must be one cycle through every strand.
  int visited = 0;
  Strand s = 0;
  do {
    s = d.under_pair_[d.endpoints_[s].second].second;
    ++visited;
  } while (s != 0 && visited <= d.n_strands_);
  if (visited != d.n_strands_)
    throw GaussError(GaussErrc::NotAKnot, "strand adjacency splits into several cycles");

  for (Crossing c = 0; c < n; ++c) {
    if (d.under_pair_[c].first == d.under_pair_[c].second)
      throw GaussError(GaussErrc::SelfAdjacentStrand,
                       "crossing " + std::to_string(c + 1) + " has the same strand on both under-sides");
  }
  return d;
}

}  // namespace wirtwidth
