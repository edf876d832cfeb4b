#pragma once

// Gauss codes and the strand/crossing incidence structure of a knot diagram.
//
// A strand is a maximal arc between two consecutive under-passes. Strand k
// begins at the k-th under-pass met while walking the code and ends at the
// next one, so with n >= 1 crossings there are exactly n strands and strand k
// is adjacent to strands k-1 and k+1 (mod n). Planar realizability of the
// code is not checked; the coloring rules only consult incidence data.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wirtwidth {

using Strand = std::int32_t;
using Crossing = std::int32_t;

inline constexpr Strand kNoStrand = -1;
inline constexpr Crossing kNoCrossing = -1;

enum class Role : std::uint8_t { Over, Under };

enum class GaussErrc {
  MalformedToken,
  LabelCountError,
  EmptyRoleError,
  SelfAdjacentStrand,
  NotAKnot,
};

const char* to_string(GaussErrc code) noexcept;

class GaussError : public std::runtime_error {
 public:
  GaussError(GaussErrc code, const std::string& what);
  GaussErrc code() const noexcept { return code_; }

 private:
  GaussErrc code_;
};

struct GaussEntry {
  int label;  // 1..n
  Role role;

  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

/// A validated Gauss code with labels renumbered 1..n in first-appearance
/// order. `component_starts` lists the entry index at which each additional
/// component begins; it is empty for a knot.
struct GaussCode {
  std::vector<GaussEntry> entries;
  std::vector<std::size_t> component_starts;

  int n_crossings() const noexcept { return static_cast<int>(entries.size() / 2); }
  int n_components() const noexcept {
    return 1 + static_cast<int>(component_starts.size());
  }

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

/// Accepted grammar (case-insensitive, commas and/or whitespace separate
/// tokens, surrounding brackets are ignored):
///   signed form  : -1,2,-3,1,-2,3     (negative = under, positive = over)
///   letter form  : U1,O2,U3,O1,U2,O3  (a trailing + or - is allowed and ignored)
///   components   : separated by '|' or ';'
/// The empty string is the 0-crossing diagram of the unknot.
GaussCode parse_gauss(std::string_view text);

/// Signed form, joined by `separator`. parse_gauss(serialize_gauss(c)) == c.
std::string serialize_gauss(const GaussCode& code, std::string_view separator = ",");

class Diagram {
 public:
  /// Builds the incidence structure. Throws GaussError with
  /// SelfAdjacentStrand when some crossing's two under-strands coincide and
  /// NotAKnot when the strands do not close up into a single cycle.
  static Diagram build(const GaussCode& code);

  int n_crossings() const noexcept { return n_crossings_; }
  int n_strands() const noexcept { return n_strands_; }

  Strand over_strand(Crossing c) const { return over_strand_.at(c); }

  /// (strand ending at the under-pass of c, strand beginning there)
  std::pair<Strand, Strand> under_pair(Crossing c) const { return under_pair_.at(c); }

  /// (crossing where s begins, crossing where s ends)
  std::pair<Crossing, Crossing> strand_endpoints(Strand s) const { return endpoints_.at(s); }

  /// Crossings whose over-pass lies in the interior of s, in traversal order.
  std::span<const Crossing> over_crossings(Strand s) const { return over_crossings_.at(s); }

  Strand next_strand(Strand s) const noexcept { return n_strands_ == 0 ? s : (s + 1) % n_strands_; }
  Strand prev_strand(Strand s) const noexcept {
    return n_strands_ == 0 ? s : (s + n_strands_ - 1) % n_strands_;
  }

  /// The other under-strand of c, or kNoStrand if s is not an under-strand of c.
  Strand other_under(Crossing c, Strand s) const noexcept;

  bool is_under_strand(Crossing c, Strand s) const noexcept;

  const GaussCode& code() const noexcept { return code_; }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Diagram() = default;

  GaussCode code_;
  int n_crossings_ = 0;
  int n_strands_ = 0;
  std::vector<Strand> over_strand_;
  std::vector<std::pair<Strand, Strand>> under_pair_;
  std::vector<std::pair<Crossing, Crossing>> endpoints_;
  std::vector<std::vector<Crossing>> over_crossings_;
};

inline Diagram build_diagram(const GaussCode& code) { return Diagram::build(code); }

}  // namespace wirtwidth
