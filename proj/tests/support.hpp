#pragma once

// Shared test helpers: corpus loading, a random legal-log generator and a
// stand-alone brute-force reference that works straight from the signed
// Gauss code without touching the library's coloring engine.

#include <algorithm>
#include <climits>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wirtwidth/coloring.hpp"
#include "wirtwidth/gauss.hpp"

#ifndef WIRTWIDTH_DATA_DIR
#define WIRTWIDTH_DATA_DIR "data"
#endif

namespace testsupport {

struct CorpusEntry {
  std::string name;
  std::string code;
  wirtwidth::Diagram diagram;
};

inline std::vector<CorpusEntry> load_corpus(const std::string& file, int max_crossings = INT_MAX) {
  std::ifstream in(std::string(WIRTWIDTH_DATA_DIR) + "/" + file);
  std::vector<CorpusEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    std::string name = line.substr(0, tab), code = line.substr(tab + 1);
    auto d = wirtwidth::build_diagram(wirtwidth::parse_gauss(code));
    if (d.n_crossings() <= max_crossings) out.push_back({name, code, std::move(d)});
  }
  return out;
}

inline std::vector<CorpusEntry> small_corpus(int max_crossings = 7) { return load_corpus("rolfsen_le9.tsv", max_crossings); }

/// Uniform choice among every legal seed and move at each stage, with the
/// seeds weighted by `seed_weight`.
inline wirtwidth::EventLog random_log(const wirtwidth::Diagram& d, std::mt19937_64& rng, double seed_weight = 1.0) {
  using namespace wirtwidth;
  ColoringState st(d);
  EventLog log;
  while (!st.complete()) {
    std::vector<Strand> uncolored;
    for (Strand s = 0; s < d.n_strands(); ++s)
      if (!st.is_colored(s)) uncolored.push_back(s);
    const auto moves = legal_moves(d, st);
    const double ws = seed_weight * static_cast<double>(uncolored.size());
    std::uniform_real_distribution<double> pick(0.0, ws + static_cast<double>(moves.size()));
    const double x = pick(rng);
    if (x < ws || moves.empty()) {
      std::uniform_int_distribution<std::size_t> i(0, uncolored.size() - 1);
      log.events.push_back(apply_seed(d, st, uncolored[i(rng)]));
    } else {
      std::uniform_int_distribution<std::size_t> i(0, moves.size() - 1);
      const auto m = moves[i(rng)];
      log.events.push_back(apply_move(d, st, m.strand, m.crossing));
    }
  }
  return log;
}

// Attached total of a word of seeds ('s') and multi-colored crossings ('m'),
// straight from the running-value rule.
inline long word_total(const std::string& word) {
  long level = 0, total = 0;
  for (char ch : word) {
    level += ch == 's' ? 2 : -2;
    total += level;
  }
  return total;
}

namespace ref {

struct Result {
  long min_width = LONG_MAX;
  int min_seeds = INT_MAX;
  std::uint64_t logs = 0;
};

/// Exhaustive minimum over every completed coloring sequence. Input is a
/// single-component signed Gauss code (negative = under).
class BruteForce {
 public:
  explicit BruteForce(const std::string& code) {
    std::stringstream ss(code);
    std::string tok;
    std::vector<int> v;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) v.push_back(std::stoi(tok));
    std::vector<std::size_t> unders;
    for (std::size_t p = 0; p < v.size(); ++p)
      if (v[p] < 0) unders.push_back(p);
    n_ = static_cast<int>(unders.size());
    if (n_ == 0) return;
    auto strand_at = [&](std::size_t p) {
      int k = n_ - 1;  // positions before the first under belong to the last strand
      for (int i = 0; i < n_; ++i)
        if (unders[i] <= p) k = i;
      return k;
    };
    std::map<int, int> id;
    for (int x : v) id.emplace(std::abs(x), static_cast<int>(id.size()));
    over_.assign(n_, -1);
    ua_.assign(n_, -1);
    ub_.assign(n_, -1);
    for (std::size_t p = 0; p < v.size(); ++p) {
      const int c = id.at(std::abs(v[p]));
      if (v[p] > 0) {
        over_[c] = strand_at(p);
      } else {
        const int k = strand_at(p);
        ua_[c] = (k + n_ - 1) % n_;
        ub_[c] = k;
      }
    }
  }

  Result run() {
    if (n_ == 0) return {2, 1, 1};
    std::vector<int> color(n_, -1);
    std::vector<char> mc(n_, 0);
    dfs(color, mc, 0, 0, 0, 0);
    return res_;
  }

 private:
  void dfs(std::vector<int>& color, std::vector<char>& mc, int colored, int next_color, long level, long total) {
    if (colored == n_) {
      ++res_.logs;
      res_.min_width = std::min(res_.min_width, total);
      int seeds = next_color;
      res_.min_seeds = std::min(res_.min_seeds, seeds);
      return;
    }
    for (int s = 0; s < n_; ++s) {
      if (color[s] >= 0) continue;
      step(color, mc, colored, next_color, level, total, s, next_color, true);
    }
    for (int t = 0; t < n_; ++t) {
      if (color[t] >= 0) continue;
      for (int c = 0; c < n_; ++c) {
        int other = -1;
        if (ua_[c] == t) other = ub_[c];
        if (ub_[c] == t) other = ua_[c];
        if (other < 0 || color[other] < 0 || color[over_[c]] < 0) continue;
        step(color, mc, colored, next_color, level, total, t, color[other], false);
      }
    }
  }

  void step(std::vector<int>& color, std::vector<char>& mc, int colored, int next_color, long level, long total,
            int s, int col, bool seed) {
    color[s] = col;
    if (seed) {
      level += 2;
      total += level;
    }
    std::vector<int> fresh;
    for (int c = 0; c < n_; ++c) {
      if (mc[c] || color[ua_[c]] < 0 || color[ub_[c]] < 0 || color[over_[c]] < 0) continue;
      if (color[ua_[c]] != color[ub_[c]]) fresh.push_back(c);
    }
    for (int c : fresh) {
      mc[c] = 1;
      level -= 2;
      total += level;
    }
    dfs(color, mc, colored + 1, next_color + (seed ? 1 : 0), level, total);
    for (int c : fresh) mc[c] = 0;
    color[s] = -1;
  }

  int n_ = 0;
  std::vector<int> over_, ua_, ub_;
  Result res_;
};

inline Result min_width(const std::string& code) { return BruteForce(code).run(); }

}  // namespace ref
}  // namespace testsupport
