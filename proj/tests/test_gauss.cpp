#include <doctest.h>

#include <set>

#include "support.hpp"
#include "wirtwidth/gauss.hpp"

using namespace wirtwidth;

namespace {
constexpr Strand A = 0, B = 1, C = 2;
constexpr const char* kTrefoil = "-1,2,-3,1,-2,3";

GaussErrc error_of(const std::string& text) {
  try {
    build_diagram(parse_gauss(text));
  } catch (const GaussError& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return GaussErrc::MalformedToken;
}
}  // namespace

TEST_CASE("trefoil parses to three crossings") {
  const GaussCode g = parse_gauss(kTrefoil);
  CHECK(g.entries.size() == 6);
  CHECK(g.n_crossings() == 3);
  CHECK(g.entries[0] == GaussEntry{1, Role::Under});
  CHECK(g.entries[1] == GaussEntry{2, Role::Over});
}

TEST_CASE("trefoil incidence") {
  const Diagram d = build_diagram(parse_gauss(kTrefoil));
  REQUIRE(d.n_strands() == 3);
  // crossing labels 1,2,3 are ids 0,1,2
  CHECK(d.under_pair(0) == std::pair{C, A});
  CHECK(d.under_pair(2) == std::pair{A, B});
  CHECK(d.under_pair(1) == std::pair{B, C});
  CHECK(d.over_strand(1) == A);
  CHECK(d.over_strand(0) == B);
  CHECK(d.over_strand(2) == C);
  CHECK(d.strand_endpoints(A) == std::pair<Crossing, Crossing>{0, 2});
  CHECK(d.other_under(0, C) == A);
  CHECK(d.other_under(0, B) == kNoStrand);
}

TEST_CASE("empty code is the round unknot") {
  const GaussCode g = parse_gauss("");
  CHECK(g.entries.empty());
  const Diagram d = build_diagram(g);
  CHECK(d.n_crossings() == 0);
  CHECK(d.n_strands() == 1);
  CHECK(parse_gauss("  ").entries.empty());
}

TEST_CASE("kink parses but is rejected as self-adjacent") {
  CHECK(parse_gauss("-1,1").n_crossings() == 1);
  CHECK(error_of("-1,1") == GaussErrc::SelfAdjacentStrand);
}

TEST_CASE("parse errors") {
  CHECK(error_of("-1,x,1") == GaussErrc::MalformedToken);
  CHECK(error_of("-1,2,-3,1,-2") == GaussErrc::LabelCountError);
  CHECK(error_of("-1,-1") == GaussErrc::LabelCountError);
  CHECK(error_of("-1,2,1,-2,0") == GaussErrc::EmptyRoleError);
  CHECK(error_of("-1,2,-2,1|") == GaussErrc::MalformedToken);
  // Hopf link: two components
  CHECK(error_of("-1,2|1,-2") == GaussErrc::NotAKnot);
  CHECK(error_of("-1,2,-3,1,-2,3;") == GaussErrc::MalformedToken);
}

TEST_CASE("letter form and whitespace") {
  const GaussCode a = parse_gauss(kTrefoil);
  CHECK(parse_gauss("U1 O2 U3 O1 U2 O3") == a);
  CHECK(parse_gauss("[u1, o2+, u3-, o1, u2, o3]") == a);
  CHECK(parse_gauss("-1 2 -3 1 -2 3") == a);
}

TEST_CASE("labels renumber by first appearance") {
  const GaussCode g = parse_gauss("-7,20,-5,7,-20,5");
  CHECK(g == parse_gauss(kTrefoil));
}

TEST_CASE("parse then serialize round trips over the corpus") {
  for (const auto& e : testsupport::load_corpus("rolfsen_le9.tsv")) {
    const GaussCode g = parse_gauss(e.code);
    CHECK(parse_gauss(serialize_gauss(g)) == g);
    CHECK(parse_gauss(serialize_gauss(g, " ")) == g);
    CHECK(build_diagram(g) == build_diagram(parse_gauss(e.code)));
  }
}

TEST_CASE("strand and adjacency structure over the corpus") {
  auto corpus = testsupport::load_corpus("rolfsen_le9.tsv");
  auto ht = testsupport::load_corpus("ht_12_14_sample.tsv");
  corpus.insert(corpus.end(), ht.begin(), ht.end());
  REQUIRE(corpus.size() > 1000);
  for (const auto& e : corpus) {
    const Diagram& d = e.diagram;
    if (d.n_crossings() == 0) continue;
    REQUIRE(d.n_strands() == d.n_crossings());
    // walking under_pair successors visits every strand once
    std::set<Strand> seen;
    Strand s = 0;
    for (int i = 0; i < d.n_strands(); ++i) {
      seen.insert(s);
      const Crossing end = d.strand_endpoints(s).second;
      const auto [in, out] = d.under_pair(end);
      CHECK(in == s);
      CHECK(in != out);
      s = out;
    }
    CHECK(s == 0);
    CHECK(seen.size() == static_cast<std::size_t>(d.n_strands()));
    std::size_t overs = 0;
    for (Strand t = 0; t < d.n_strands(); ++t) overs += d.over_crossings(t).size();
    CHECK(overs == static_cast<std::size_t>(d.n_crossings()));
  }
}
