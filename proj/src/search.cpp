#include "wirtwidth/search.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace wirtwidth {

PartitionKey PartitionKey::of(const Diagram& d, const ColoringState& state) {
  PartitionKey key;
  const int n = d.n_strands();
  for (Strand s = 0; s < n; ++s) {
    const Color c = state.color_of(s);
    if (c == kUncolored) continue;
    key.colored |= std::uint64_t{1} << s;
    if (state.color_of(d.prev_strand(s)) == c) key.joined |= std::uint64_t{1} << s;
  }
  return key;
}

std::vector<int> PartitionKey::class_labels(int n_strands) const {
  std::vector<int> label(static_cast<std::size_t>(n_strands), -1);
  auto colored_at = [&](int s) { return (colored >> s) & 1U; };
  auto joined_at = [&](int s) { return (joined >> s) & 1U; };

  int start = -1;
  for (int s = 0; s < n_strands && start < 0; ++s)
    if (colored_at(s) && !joined_at(s)) start = s;
  if (start < 0) {
    // nothing colored, or one class around the whole cycle
    if (n_strands > 0 && colored_at(0)) std::fill(label.begin(), label.end(), 0);
    return label;
  }

  std::vector<int> arc(static_cast<std::size_t>(n_strands), -1);
  int arc_id = -1;
  for (int i = 0; i < n_strands; ++i) {
    const int s = (start + i) % n_strands;
    if (!colored_at(s)) continue;
    if (!joined_at(s)) ++arc_id;
    arc[s] = arc_id;
  }
  std::vector<int> renumber(static_cast<std::size_t>(arc_id + 1), -1);
  int next = 0;
  for (int s = 0; s < n_strands; ++s) {
    if (arc[s] < 0) continue;
    if (renumber[arc[s]] < 0) renumber[arc[s]] = next++;
    label[s] = renumber[arc[s]];
  }
  return label;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr long kInfinity = std::numeric_limits<long>::max() / 4;

bool has_legal_move(const Diagram& d, const ColoringState& st) {
  for (Strand s = 0; s < d.n_strands(); ++s) {
    if (st.is_colored(s)) continue;
    const auto [a, b] = d.strand_endpoints(s);
    for (Crossing c : {a, b}) {
      const Strand other = d.other_under(c, s);
      if (other != kNoStrand && st.is_colored(other) && st.is_colored(d.over_strand(c))) return true;
    }
  }
  return false;
}

// Admissible bound on the attached values still to come. The running level
// must come down to 0 (or stay at 2 with a single color) in steps of 2, and
// when no move is available the next event is a seed.
long remaining_lower_bound(const Diagram& d, const ColoringState& st) {
  if (st.complete()) return 0;
  const long half = st.level() / 2;
  if (st.colors_used() == 0 || !has_legal_move(d, st)) return (half + 1) * (half + 2);
  return (half - 1) * half;
}

struct Child {
  ColoringState state;
  Event event;
  long cost;
};

// Coloring moves first (they keep colors_used low), then seeds by strand id.
std::vector<Child> expand(const Diagram& d, const ColoringState& st) {
  std::vector<Child> out;
  std::vector<PartitionKey> seen;
  auto push = [&](ColoringState next, Event e, bool seed) {
    const PartitionKey key = PartitionKey::of(d, next);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
    seen.push_back(key);
    const long cost = stage_cost(st.level(), seed, static_cast<int>(e.newly_multicolored.size()));
    out.push_back({std::move(next), std::move(e), cost});
  };
  for (const MoveChoice& m : legal_moves(d, st)) {
    ColoringState next = st;
    Event e = apply_move(d, next, m.strand, m.crossing);
    push(std::move(next), std::move(e), false);
  }
  for (Strand s = 0; s < d.n_strands(); ++s) {
    if (st.is_colored(s)) continue;
    ColoringState next = st;
    Event e = apply_seed(d, next, s);
    push(std::move(next), std::move(e), true);
  }
  return out;
}

// --------------------------------------------------------------------------

struct BudgetExhausted {};

class ExactSearch {
 public:
  ExactSearch(const Diagram& d, std::uint64_t budget) : d_(d), budget_(budget) {}

  // Returns v with: v <= cutoff means v is the exact minimum remaining cost
  // from `st`; v > cutoff means the minimum is at least v.
  long solve(const ColoringState& st, long cutoff) {
    if (st.complete()) return 0;
    const PartitionKey key = PartitionKey::of(d_, st);
    long bound = remaining_lower_bound(d_, st);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (it->second.exact) return it->second.value;
      bound = std::max(bound, it->second.value);
    }
    if (bound > cutoff) {
      remember_bound(key, bound);
      return bound;
    }
    if (enforce_budget_ && nodes_ >= budget_) throw BudgetExhausted{};
    ++nodes_;

    long best = kInfinity;
    long least_bound = kInfinity;
    for (const Child& child : expand(d_, st)) {
      const long local_cut = std::min(cutoff, best - 1);
      const long child_bound = child.cost + remaining_lower_bound(d_, child.state);
      if (child_bound > local_cut) {
        least_bound = std::min(least_bound, child_bound);
        continue;
      }
      const long r = solve(child.state, local_cut - child.cost);
      if (r <= local_cut - child.cost)
        best = child.cost + r;
      else
        least_bound = std::min(least_bound, child.cost + r);
    }
    if (best <= cutoff) {
      memo_[key] = {best, true};
      return best;
    }
    remember_bound(key, least_bound);
    return least_bound;
  }

  // Follows optimal transitions from the vacuous coloring. `total` must be
  // the exact optimum returned by solve.
  EventLog reconstruct(long total) {
    enforce_budget_ = false;
    EventLog log;
    ColoringState st(d_);
    long remaining = total;
    while (!st.complete()) {
      bool advanced = false;
      for (Child& child : expand(d_, st)) {
        const long cut = remaining - child.cost;
        if (cut < 0 || remaining_lower_bound(d_, child.state) > cut) continue;
        if (solve(child.state, cut) == cut) {
          remaining = cut;
          log.events.push_back(std::move(child.event));
          st = std::move(child.state);
          advanced = true;
          break;
        }
      }
      if (!advanced) break;  // unreachable when total is exact
    }
    return log;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  struct Entry {
    long value;
    bool exact;
  };

  void remember_bound(const PartitionKey& key, long bound) {
    auto [it, inserted] = memo_.try_emplace(key, Entry{bound, false});
    if (!inserted && !it->second.exact) it->second.value = std::max(it->second.value, bound);
  }

  const Diagram& d_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool enforce_budget_ = true;
  std::unordered_map<PartitionKey, Entry, PartitionKeyHash> memo_;
};

// --------------------------------------------------------------------------

struct Partial {
  ColoringState state;
  EventLog log;
  long cost = 0;
};

// Seeds s, then applies every available coloring move.
Partial seed_and_saturate(const Diagram& d, const Partial& from, Strand s) {
  Partial next = from;
  next.log.events.push_back(apply_seed(d, next.state, s));
  saturate(d, next.state, &next.log);
  int running = from.state.level();
  for (std::size_t i = from.log.events.size(); i < next.log.events.size(); ++i) {
    const Event& e = next.log.events[i];
    const bool seed = e.kind == EventKind::Seed;
    const int m = static_cast<int>(e.newly_multicolored.size());
    next.cost += stage_cost(running, seed, m);
    running += (seed ? 2 : 0) - 2 * m;
  }
  return next;
}

// Repeatedly seeds the strand whose saturation multi-colors the most
// crossings, then colors the most strands, then has the smallest id.
Partial greedy_finish(const Diagram& d, Partial p) {
  while (!p.state.complete()) {
    std::optional<Partial> best;
    for (Strand s = 0; s < d.n_strands(); ++s) {
      if (p.state.is_colored(s)) continue;
      Partial cand = seed_and_saturate(d, p, s);
      const int mc = cand.state.multicolored_count();
      if (!best || mc > best->state.multicolored_count() ||
          (mc == best->state.multicolored_count() && cand.state.colored_count() > best->state.colored_count()))
        best = std::move(cand);
    }
    p = std::move(*best);
  }
  return p;
}

class SeedSearch {
 public:
  SeedSearch(const Diagram& d, int target, std::uint64_t budget) : d_(d), target_(target), budget_(budget) {}

  void run() {
    Partial root{ColoringState(d_), {}, 0};
    best_ = greedy_finish(d_, root);
    dfs(root, 0);
  }

  const Partial& best() const noexcept { return *best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  bool exhausted() const noexcept { return exhausted_; }

 private:
  void consider(Partial candidate) {
    if (candidate.cost < best_->cost) best_ = std::move(candidate);
  }

  void dfs(const Partial& p, int seeds) {
    if (p.state.complete()) {
      consider(p);
      return;
    }
    if (seeds >= target_) {
      consider(greedy_finish(d_, p));
      return;
    }
    if (nodes_ >= budget_) {
      exhausted_ = true;
      return;
    }
    ++nodes_;
    for (Strand s = 0; s < d_.n_strands() && !exhausted_; ++s) {
      if (p.state.is_colored(s)) continue;
      Partial child = seed_and_saturate(d_, p, s);
      if (child.cost + remaining_lower_bound(d_, child.state) >= best_->cost) continue;
      const PartitionKey key = PartitionKey::of(d_, child.state);
      if (d_.n_strands() <= PartitionKey::kMaxStrands) {
        auto [it, inserted] = visited_.try_emplace(key, child.cost);
        if (!inserted) {
          if (it->second <= child.cost) continue;
          it->second = child.cost;
        }
      }
      dfs(child, seeds + 1);
    }
  }

  const Diagram& d_;
  int target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::optional<Partial> best_;
  std::unordered_map<PartitionKey, long, PartitionKeyHash> visited_;
};

int mu_or_all(const Diagram& d, bool& exact) {
  const auto mu = wirtinger_number(d, d.n_strands());
  exact = mu.has_value();
  return mu ? mu->k : d.n_strands();
}

}  // namespace

WidthReport unknot_width(const Diagram& d) {
  const auto t0 = Clock::now();
  WidthReport r;
  r.mu_upper = 1;
  r.mu_exact = true;
  r.width_upper = 2;
  r.width_exact = true;
  r.witness.events.push_back(Event::seed(0));
  r.nodes_explored = 1;
  (void)d;
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
  return r;
}

WidthReport exact_width(const Diagram& d, std::uint64_t node_budget) {
  if (d.n_crossings() == 0) return unknot_width(d);
  const auto t0 = Clock::now();

  WidthReport r;
  r.mu_upper = mu_or_all(d, r.mu_exact);

  // An upper bound from a short seed search seeds the cutoff.
  SeedSearch seeds(d, r.mu_upper, std::min<std::uint64_t>(node_budget, kDefaultHeuristicBudget));
  seeds.run();
  r.witness = seeds.best().log;
  r.width_upper = seeds.best().cost;
  r.nodes_explored = seeds.nodes();

  if (d.n_strands() > PartitionKey::kMaxStrands) {
    r.budget_exhausted = true;
  } else {
    ExactSearch search(d, node_budget);
    try {
      const long total = search.solve(ColoringState(d), r.width_upper);
      r.witness = search.reconstruct(total);
      r.width_upper = total;
      r.width_exact = true;
    } catch (const BudgetExhausted&) {
      r.budget_exhausted = true;
    }
    r.nodes_explored += search.nodes();
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
  return r;
}

std::optional<SeedWitness> wirtinger_number(const Diagram& d, int k_max) {
  const int n = d.n_strands();
  k_max = std::min(k_max, n);

  std::vector<std::uint8_t> colored(static_cast<std::size_t>(n));
  auto saturates = [&](const std::vector<Strand>& seeds) {
    std::fill(colored.begin(), colored.end(), 0);
    for (Strand s : seeds) colored[s] = 1;
    int count = static_cast<int>(seeds.size());
    bool changed = true;
    while (changed && count < n) {
      changed = false;
      for (Strand s = 0; s < n; ++s) {
        if (colored[s]) continue;
        const auto [a, b] = d.strand_endpoints(s);
        for (Crossing c : {a, b}) {
          const Strand other = d.other_under(c, s);
          if (other != kNoStrand && colored[other] && colored[d.over_strand(c)]) {
            colored[s] = 1;
            ++count;
            changed = true;
            break;
          }
        }
      }
    }
    return count == n;
  };

  for (int k = 1; k <= k_max; ++k) {
    std::vector<Strand> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      if (saturates(pick)) return SeedWitness{k, pick};
      // next k-subset in lexicographic order
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

WidthReport lazy_seed_heuristic(const Diagram& d, int target_seed_count, std::uint64_t enumeration_budget) {
  if (d.n_crossings() == 0) {
    WidthReport r = unknot_width(d);
    r.width_exact = false;
    return r;
  }
  const auto t0 = Clock::now();
  WidthReport r;
  r.mu_upper = mu_or_all(d, r.mu_exact);
  const int target = target_seed_count > 0 ? target_seed_count : r.mu_upper;

  SeedSearch search(d, target, enumeration_budget);
  search.run();
  r.witness = search.best().log;
  r.width_upper = search.best().cost;
  r.width_exact = false;
  r.budget_exhausted = search.exhausted();
  r.nodes_explored = search.nodes();
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
  return r;
}

}  // namespace wirtwidth
