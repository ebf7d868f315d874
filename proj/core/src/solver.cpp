#include "hunt/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hunt {

SearchLimits SearchLimits::from_environment() {
  SearchLimits limits;
  if (const char* env = std::getenv("HUNT_STATE_CAP"); env != nullptr && *env != '\0') {
    std::size_t cap = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, cap);
    if (ec != std::errc() || ptr != end || cap == 0) {
      throw std::invalid_argument("HUNT_STATE_CAP must be a positive integer");
    }
    limits.max_states = cap;
  }
  return limits;
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

// Orders up to this size use a bitmap of every dominated territory.
constexpr std::size_t kTableMaxOrder = 24;

Mask full_mask(std::size_t n) {
  return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Up-closure of all visited territories as one bit per subset of V. Each
// subset is marked at most once over the whole search.
class ClosureTable {
 public:
  explicit ClosureTable(std::size_t n)
      : full_(full_mask(n)), words_(((std::size_t{1} << n) + 63) / 64, 0) {}

  bool dominated(Mask s) const { return (words_[s >> 6] >> (s & 63)) & 1U; }

  void insert(Mask s) {
    if (dominated(s)) return;
    mark(s);
    stack_.push_back(s);
    while (!stack_.empty()) {
      Mask t = stack_.back();
      stack_.pop_back();
      for (Mask free = full_ & ~t; free != 0; free &= free - 1) {
        Mask u = t | (free & (~free + 1));
        if (!dominated(u)) {
          mark(u);
          stack_.push_back(u);
        }
      }
    }
  }

 private:
  void mark(Mask s) { words_[s >> 6] |= Mask{1} << (s & 63); }

  Mask full_;
  std::vector<Mask> words_;
  std::vector<Mask> stack_;
};

// Minimal visited territories, for orders too large for a table.
class MinimalAntichain {
 public:
  explicit MinimalAntichain(std::size_t) {}

  bool dominated(Mask s) const {
    return std::any_of(sets_.begin(), sets_.end(), [s](Mask m) { return (m & ~s) == 0; });
  }

  void insert(Mask s) {
    std::erase_if(sets_, [s](Mask m) { return (s & ~m) == 0; });
    sets_.push_back(s);
  }

 private:
  std::vector<Mask> sets_;
};

// Calls f(shot) for every k-subset of `reach` in lexicographic order of
// vertex indices, or once with reach itself when |reach| <= k. Stops early
// when f returns false.
template <class F>
void for_each_shot(Mask reach, std::size_t k, F&& f) {
  const auto p = static_cast<std::size_t>(std::popcount(reach));
  if (p <= k) {
    f(reach);
    return;
  }
  int pos[64];
  std::size_t count = 0;
  for (Mask r = reach; r != 0; r &= r - 1) pos[count++] = std::countr_zero(r);
  std::size_t idx[64];
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask shot = 0;
    for (std::size_t i = 0; i < k; ++i) shot |= Mask{1} << pos[idx[i]];
    if (!f(shot)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == p - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Node {
  Mask territory;
  std::uint32_t parent;
  Mask shot;
};

struct Candidate {
  Mask territory;
  std::uint32_t parent;
  Mask shot;
};

enum class Stop { none, win, cap, timeout };

template <class Visited>
class TerritorySearch {
 public:
  TerritorySearch(const Graph& g, Mask start, std::size_t budget,
                  std::optional<std::size_t> limit, const SearchLimits& limits)
      : n_(g.order()),
        neighbors_(neighbor_masks(g)),
        start_(start),
        budget_(budget),
        limit_(limit),
        limits_(limits),
        visited_(g.order()) {
    if (limits_.max_time.count() > 0) deadline_ = Clock::now() + limits_.max_time;
  }

  SolveResult run() {
    SolveResult result;
    result.value = budget_;
    nodes_.push_back({0, 0, 0});  // root: the pre-game position, reach = start
    std::vector<std::uint32_t> frontier{0};
    std::size_t depth = 0;
    Stop stop = Stop::none;
    while (!frontier.empty() && stop == Stop::none) {
      if (limit_ && depth >= *limit_) break;
      std::vector<std::uint32_t> next;
      stop = limits_.threads > 1 && frontier.size() > 1 ? expand_parallel(frontier, next)
                                                        : expand_serial(frontier, next);
      frontier = std::move(next);
      ++depth;
    }
    result.states_explored = nodes_.size() - 1;
    switch (stop) {
      case Stop::win:
        result.outcome = Outcome::win;
        result.strategy = reconstruct();
        break;
      case Stop::cap:
      case Stop::timeout:
        result.outcome = Outcome::unknown;
        break;
      case Stop::none:
        result.outcome = Outcome::no_win;
        break;
    }
    return result;
  }

 private:
  Mask reach_of(std::uint32_t node) const {
    if (node == 0) return start_;
    Mask reach = 0;
    for (Mask r = nodes_[node].territory; r != 0; r &= r - 1) {
      reach |= neighbors_[static_cast<std::size_t>(std::countr_zero(r))];
    }
    return reach;
  }

  bool timed_out() const { return deadline_ && Clock::now() > *deadline_; }

  // Accepts one candidate in merge order.
  Stop merge(const Candidate& c, std::vector<std::uint32_t>& next) {
    if (c.territory == 0) {
      win_ = c;
      return Stop::win;
    }
    if (visited_.dominated(c.territory)) return Stop::none;
    visited_.insert(c.territory);
    if (nodes_.size() > limits_.max_states) return Stop::cap;
    next.push_back(static_cast<std::uint32_t>(nodes_.size()));
    nodes_.push_back({c.territory, c.parent, c.shot});
    return Stop::none;
  }

  Stop expand_serial(const std::vector<std::uint32_t>& frontier,
                     std::vector<std::uint32_t>& next) {
    std::size_t ticks = 0;
    for (std::uint32_t node : frontier) {
      if ((++ticks & 255U) == 0 && timed_out()) return Stop::timeout;
      const Mask reach = reach_of(node);
      Stop stop = Stop::none;
      for_each_shot(reach, budget_, [&](Mask shot) {
        stop = merge({reach & ~shot, node, shot}, next);
        return stop == Stop::none;
      });
      if (stop != Stop::none) return stop;
    }
    return Stop::none;
  }

  // Workers generate candidates for contiguous frontier slices, filtered
  // against the visited set as it stood at the start of the level (read
  // only). The merge then replays them in frontier order, so the outcome is
  // identical to expand_serial.
  Stop expand_parallel(const std::vector<std::uint32_t>& frontier,
                       std::vector<std::uint32_t>& next) {
    const std::size_t workers = std::min<std::size_t>(limits_.threads, frontier.size());
    std::vector<std::vector<Candidate>> buckets(workers);
    std::atomic<bool> expired{false};
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          const std::size_t lo = frontier.size() * w / workers;
          const std::size_t hi = frontier.size() * (w + 1) / workers;
          auto& out = buckets[w];
          for (std::size_t i = lo; i < hi; ++i) {
            if ((i & 255U) == 0 && (expired.load(std::memory_order_relaxed) || timed_out())) {
              expired = true;
              return;
            }
            const std::uint32_t node = frontier[i];
            const Mask reach = reach_of(node);
            bool found_win = false;
            for_each_shot(reach, budget_, [&](Mask shot) {
              const Mask territory = reach & ~shot;
              if (territory != 0 && visited_.dominated(territory)) return true;
              out.push_back({territory, node, shot});
              found_win = territory == 0;
              return !found_win;
            });
            if (found_win) return;
          }
        });
      }
    }
    if (expired) return Stop::timeout;
    for (const auto& bucket : buckets) {
      for (const Candidate& c : bucket) {
        if (Stop stop = merge(c, next); stop != Stop::none) return stop;
      }
    }
    return Stop::none;
  }

  Strategy reconstruct() const {
    std::vector<Mask> shots{win_.shot};
    for (std::uint32_t at = win_.parent; at != 0; at = nodes_[at].parent) {
      shots.push_back(nodes_[at].shot);
    }
    Strategy s(n_, budget_);
    for (auto it = shots.rbegin(); it != shots.rend(); ++it) {
      s.append(VertexSet::from_mask(n_, *it));
    }
    return s;
  }

  std::size_t n_;
  std::vector<Mask> neighbors_;
  Mask start_;
  std::size_t budget_;
  std::optional<std::size_t> limit_;
  SearchLimits limits_;
  std::optional<Clock::time_point> deadline_;
  Visited visited_;
  std::vector<Node> nodes_;
  Candidate win_{};
};

VertexSet resolve_start(const Graph& g, const SolveQuery& q) {
  if (!q.start) return g.vertices();
  if (q.start->universe() != g.order()) {
    throw std::invalid_argument("start set universe does not match graph order");
  }
  return *q.start;
}

void validate(const Graph& g, const SolveQuery& q) {
  if (g.order() > kMaxSolverOrder) {
    throw std::invalid_argument("territory search supports at most " +
                                std::to_string(kMaxSolverOrder) + " vertices, graph has " +
                                std::to_string(g.order()));
  }
  if (q.limit && *q.limit == 0) throw std::invalid_argument("time limit must be at least 1");
}

}  // namespace

SolveResult solve_k(const Graph& g, const SolveQuery& q, const SearchLimits& limits) {
  validate(g, q);
  if (!q.budget) throw std::invalid_argument("solve_k requires a budget");
  const std::size_t k = *q.budget;
  if (k > g.order()) {
    throw std::invalid_argument("budget " + std::to_string(k) + " exceeds graph order " +
                                std::to_string(g.order()));
  }
  const VertexSet start = resolve_start(g, q);
  const auto t0 = Clock::now();

  SolveResult result;
  if (start.empty()) {
    result.outcome = Outcome::win;
    result.value = k;
    result.strategy = Strategy(g.order(), k);
  } else if (g.order() <= kTableMaxOrder) {
    result = TerritorySearch<ClosureTable>(g, start.to_mask(), k, q.limit, limits).run();
  } else {
    result = TerritorySearch<MinimalAntichain>(g, start.to_mask(), k, q.limit, limits).run();
  }
  result.lower = result.upper = k;
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  return result;
}

SolveResult hunting_number(const Graph& g, const SolveQuery& q, const SearchLimits& limits) {
  validate(g, q);
  const VertexSet start = resolve_start(g, q);
  const auto t0 = Clock::now();
  const std::size_t cover = start.size();

  SolveResult result;
  result.upper = cover;
  result.lower = start == g.vertices() ? std::min(degeneracy(g), cover) : 0;

  SolveQuery probe = q;
  probe.start = start;
  for (std::size_t k = result.lower; k < cover; ++k) {
    probe.budget = k;
    SolveResult r = solve_k(g, probe, limits);
    result.states_explored += r.states_explored;
    if (r.outcome == Outcome::unknown) {
      result.outcome = Outcome::unknown;
      result.lower = k;
      result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
      return result;
    }
    if (r.outcome == Outcome::win) {
      result.outcome = Outcome::win;
      result.value = result.lower = result.upper = k;
      result.strategy = std::move(r.strategy);
      result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
      return result;
    }
  }
  // Shooting the whole start set once always wins.
  result.outcome = Outcome::win;
  result.value = result.lower = result.upper = cover;
  Strategy s(g.order(), cover);
  if (cover > 0) s.append(start);
  result.strategy = std::move(s);
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  return result;
}

}  // namespace hunt
