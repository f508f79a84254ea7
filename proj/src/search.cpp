#include "coinage/search.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coinage/orderly.hpp"
#include "coinage/screen.hpp"
#include "search_detail.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coinage {

namespace {

using detail::check_space;

// Captured failure from a worker task; rethrown on the calling thread after
// the parallel region joins.
struct TaskError {
  bool failed = false;
  errc code = errc::bad_parameter;
  std::string message;
};

template <typename Body>
void run_tasks(int ntasks, int jobs, Body&& body) {
  if (jobs < 1) jobs = 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (int i = 0; i < ntasks; ++i) {
    body(i);
  }
#else
  (void)jobs;
  for (int i = 0; i < ntasks; ++i) {
    body(i);
  }
#endif
}

int subtree_task_count(const SearchSpace& space) {
  if (space.max_coin < space.k + 1) return 0;
  return static_cast<int>(space.max_coin - space.k);
}

// Runs `leaf(coins, local)` for every currency in the space.  Work is split
// into one task per second coin; exceptions are captured per task and the
// first one is rethrown after the join.  Task index order equals lexicographic
// order over the space, so merging locals in index order is deterministic.
template <typename Local, typename LeafFn>
std::vector<Local> map_leaves(const SearchSpace& space, int jobs, LeafFn leaf) {
  check_space(space);
  const int k = space.k;
  if (k == 0) {
    std::vector<Local> locals(1);
    std::vector<Coin> coins{1};
    leaf(coins, locals.front());
    return locals;
  }
  const int ntasks = subtree_task_count(space);
  std::vector<Local> locals(static_cast<std::size_t>(ntasks));
  std::vector<TaskError> errors(static_cast<std::size_t>(ntasks));
  run_tasks(ntasks, jobs, [&](int ti) {
    try {
      std::vector<Coin> coins{1, static_cast<Coin>(2 + ti)};
      auto walk = [&](auto&& self, int l) -> void {
        if (l == k) {
          leaf(coins, locals[static_cast<std::size_t>(ti)]);
          return;
        }
        const Coin hi = space.max_coin - static_cast<Coin>(k - l - 1);
        for (Coin next = coins.back() + 1; next <= hi; ++next) {
          coins.push_back(next);
          self(self, l + 1);
          coins.pop_back();
        }
      };
      walk(walk, 1);
    } catch (const Error& e) {
      errors[static_cast<std::size_t>(ti)] = {true, e.code(), e.what()};
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(ti)] = {true, errc::bad_parameter, e.what()};
    }
  });
  for (const auto& e : errors) {
    if (e.failed) throw Error(e.code, e.message);
  }
  return locals;
}

void rethrow_first(const std::vector<TaskError>& errors) {
  for (const auto& e : errors) {
    if (e.failed) throw Error(e.code, e.message);
  }
}

}  // namespace

std::uint64_t space_size(const SearchSpace& space) {
  check_space(space);
  const auto n = static_cast<std::uint64_t>(space.max_coin) - 1;
  const auto k = static_cast<std::uint64_t>(space.k);
  if (k > n) return 0;
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > static_cast<unsigned __int128>(UINT64_MAX)) {
      fail(errc::bound_too_large, "search space size overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

void enumerate(const SearchSpace& space,
               const std::function<void(const Currency&)>& visit) {
  check_space(space);
  const int k = space.k;
  if (k == 0) {
    visit(Currency::from_values({1}));
    return;
  }
  if (space.max_coin < k + 1) return;
  std::vector<Coin> coins(static_cast<std::size_t>(k) + 1);
  coins[0] = 1;
  for (int i = 1; i <= k; ++i) coins[static_cast<std::size_t>(i)] = 1 + i;
  while (true) {
    visit(Currency::from_values(coins));
    // Advance to the next combination of the k upper coins.
    int pos = k;
    while (pos >= 1 &&
           coins[static_cast<std::size_t>(pos)] ==
               space.max_coin - static_cast<Coin>(k - pos)) {
      --pos;
    }
    if (pos == 0) return;
    ++coins[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i <= k; ++i) {
      coins[static_cast<std::size_t>(i)] = coins[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

const char* finding_kind_name(FindingKind kind) noexcept {
  switch (kind) {
    case FindingKind::pattern_member: return "pattern_member";
    case FindingKind::screener_violation: return "screener_violation";
    case FindingKind::conjecture_violation: return "conjecture_violation";
    case FindingKind::hunt_exhausted: return "hunt_exhausted";
  }
  return "unknown";
}

SearchOutcome search_pattern_members(const PlusMinusPattern& pattern,
                                     Coin max_coin, int jobs) {
  if (max_coin < 1) fail(errc::bad_parameter, "max_coin must be positive");
  const int k = static_cast<int>(pattern.size()) - 1;
  const SearchSpace space{k, max_coin};
  SearchOutcome out;
  if (k == 0) {
    out.summary.processed = 1;
    out.summary.orderly = 1;
    out.findings.push_back({FindingKind::pattern_member,
                            Currency::from_values({1}),
                            {{"pattern", pattern.str()}},
                            space});
    detail::finalize(out);
    return out;
  }
  const int ntasks = subtree_task_count(space);
  struct Local {
    SearchSummary sum;
    std::vector<Finding> findings;
  };
  std::vector<Local> locals(static_cast<std::size_t>(ntasks));
  std::vector<TaskError> errors(static_cast<std::size_t>(ntasks));
  run_tasks(ntasks, jobs, [&](int ti) {
    Local& local = locals[static_cast<std::size_t>(ti)];
    try {
      std::vector<Coin> coins{1, static_cast<Coin>(2 + ti)};
      // Prune a subtree as soon as a prefix verdict disagrees with the
      // pattern; leaves are counted only when actually evaluated.
      auto walk = [&](auto&& self, int l) -> void {
        const bool orderly = is_orderly(Currency::from_values(coins)).orderly;
        const char symbol = orderly ? '+' : '-';
        if (l == k) {
          ++local.sum.processed;
          if (orderly) ++local.sum.orderly;
          if (symbol == pattern[static_cast<std::size_t>(l)]) {
            local.findings.push_back({FindingKind::pattern_member,
                                      Currency::from_values(coins),
                                      {{"pattern", pattern.str()}},
                                      space});
          }
          return;
        }
        if (symbol != pattern[static_cast<std::size_t>(l)]) return;
        const Coin hi = max_coin - static_cast<Coin>(k - l - 1);
        for (Coin next = coins.back() + 1; next <= hi; ++next) {
          coins.push_back(next);
          self(self, l + 1);
          coins.pop_back();
        }
      };
      walk(walk, 1);
    } catch (const Error& e) {
      errors[static_cast<std::size_t>(ti)] = {true, e.code(), e.what()};
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(ti)] = {true, errc::bad_parameter, e.what()};
    }
  });
  rethrow_first(errors);
  for (auto& local : locals) {
    out.summary.processed += local.sum.processed;
    out.summary.orderly += local.sum.orderly;
    out.findings.insert(out.findings.end(),
                        std::make_move_iterator(local.findings.begin()),
                        std::make_move_iterator(local.findings.end()));
  }
  detail::finalize(out);
  return out;
}

std::vector<Currency> find_pattern_members(const PlusMinusPattern& pattern,
                                           Coin max_coin, int jobs) {
  const SearchOutcome out = search_pattern_members(pattern, max_coin, jobs);
  std::vector<Currency> members;
  members.reserve(out.findings.size());
  for (const auto& finding : out.findings) {
    if (finding.kind == FindingKind::pattern_member && finding.currency) {
      members.push_back(*finding.currency);
    }
  }
  return members;
}

SearchOutcome search_screener_soundness(const SearchSpace& space, int jobs) {
  struct Local {
    SearchSummary sum;
    std::vector<Finding> findings;
  };
  auto locals = map_leaves<Local>(
      space, jobs, [&](const std::vector<Coin>& coins, Local& local) {
        ++local.sum.processed;
        const Currency currency = Currency::from_values(coins);
        if (!is_orderly(currency).orderly) return;
        ++local.sum.orderly;
        detail::append_soundness_findings(currency, space, local.findings);
      });
  SearchOutcome out;
  for (auto& local : locals) {
    out.summary.processed += local.sum.processed;
    out.summary.orderly += local.sum.orderly;
    out.findings.insert(out.findings.end(),
                        std::make_move_iterator(local.findings.begin()),
                        std::make_move_iterator(local.findings.end()));
  }
  detail::finalize(out);
  return out;
}

SearchOutcome search_hunt_a1_equals_2(const SearchSpace& space, int jobs) {
  check_space(space);
  struct PatternInfo {
    bool has_a1_2 = false;
    std::optional<Currency> representative;
    std::uint64_t count = 0;
  };
  using PatternMap = std::map<std::string, PatternInfo>;
  SearchOutcome out;
  PatternMap merged;
  if (space.k == 0) {
    // Only (1) lives here; it has no second coin, so nothing to track.
    out.summary.processed = 1;
    out.summary.orderly = 1;
    detail::finalize(out);
    return out;
  }
  const int k = space.k;
  const int ntasks = subtree_task_count(space);
  struct Local {
    SearchSummary sum;
    PatternMap patterns;
  };
  std::vector<Local> locals(static_cast<std::size_t>(ntasks));
  std::vector<TaskError> errors(static_cast<std::size_t>(ntasks));
  run_tasks(ntasks, jobs, [&](int ti) {
    Local& local = locals[static_cast<std::size_t>(ti)];
    try {
      std::vector<Coin> coins{1, static_cast<Coin>(2 + ti)};
      std::string symbols(static_cast<std::size_t>(k) + 1, '+');
      // One full-prefix verdict per tree node, amortized over the subtree.
      auto walk = [&](auto&& self, int l) -> void {
        const bool orderly = is_orderly(Currency::from_values(coins)).orderly;
        symbols[static_cast<std::size_t>(l)] = orderly ? '+' : '-';
        if (l == k) {
          ++local.sum.processed;
          if (orderly) {
            ++local.sum.orderly;
            // Only patterns ending '+' are tracked, and the full verdict is
            // exactly the last symbol.
            PatternInfo& info = local.patterns[symbols];
            ++info.count;
            if (coins[1] == 2) info.has_a1_2 = true;
            if (!info.representative) {
              info.representative = Currency::from_values(coins);
            }
          }
          return;
        }
        const Coin hi = space.max_coin - static_cast<Coin>(k - l - 1);
        for (Coin next = coins.back() + 1; next <= hi; ++next) {
          coins.push_back(next);
          self(self, l + 1);
          coins.pop_back();
        }
      };
      walk(walk, 1);
    } catch (const Error& e) {
      errors[static_cast<std::size_t>(ti)] = {true, e.code(), e.what()};
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(ti)] = {true, errc::bad_parameter, e.what()};
    }
  });
  rethrow_first(errors);
  for (auto& local : locals) {
    out.summary.processed += local.sum.processed;
    out.summary.orderly += local.sum.orderly;
    for (auto& [text, info] : local.patterns) {
      PatternInfo& target = merged[text];
      target.count += info.count;
      target.has_a1_2 = target.has_a1_2 || info.has_a1_2;
      // Task order equals lexicographic order, so the first representative
      // seen across tasks is the smallest member.
      if (!target.representative) target.representative = info.representative;
    }
  }
  for (const auto& [text, info] : merged) {
    if (info.has_a1_2) continue;
    out.findings.push_back({FindingKind::conjecture_violation,
                            info.representative,
                            {{"pattern", text},
                             {"realized", info.count},
                             {"a1_equals_2_found", false}},
                            space});
  }
  detail::finalize(out);
  return out;
}

SearchOutcome search_hunt_s_window(const SearchSpace& space, int jobs) {
  check_space(space);
  if (space.k < 3) {
    fail(errc::too_few_coins, "window hunt needs at least four coins");
  }
  struct Local {
    SearchSummary sum;
    std::vector<Finding> findings;
  };
  auto locals = map_leaves<Local>(
      space, jobs, [&](const std::vector<Coin>& coins, Local& local) {
        ++local.sum.processed;
        const Currency currency = Currency::from_values(coins);
        if (!is_orderly(currency).orderly) return;
        ++local.sum.orderly;
        detail::append_swindow_findings(currency, space, local.findings);
      });
  SearchOutcome out;
  for (auto& local : locals) {
    out.summary.processed += local.sum.processed;
    out.summary.orderly += local.sum.orderly;
    out.findings.insert(out.findings.end(),
                        std::make_move_iterator(local.findings.begin()),
                        std::make_move_iterator(local.findings.end()));
  }
  detail::finalize(out);
  return out;
}

SearchOutcome search_hunt_messy(int l_max, Coin max_coin, int jobs) {
  if (l_max < 1) fail(errc::bad_parameter, "l_max must be positive");
  if (max_coin < 1) fail(errc::bad_parameter, "max_coin must be positive");
  SearchOutcome out;
  for (int j = 1; j <= l_max; ++j) {
    const PlusMinusPattern pattern = detail::messy_pattern(j);
    const std::string text = pattern.str();
    const SearchSpace space{static_cast<int>(pattern.size()) - 1, max_coin};
    SearchOutcome sub = search_pattern_members(pattern, max_coin, jobs);
    out.summary.processed += sub.summary.processed;
    out.summary.orderly += sub.summary.orderly;
    const bool any_member = !sub.findings.empty();
    for (auto& finding : sub.findings) {
      finding.detail = detail::messy_detail(text);
      out.findings.push_back(std::move(finding));
    }
    if (!any_member) {
      nlohmann::json payload = detail::messy_detail(text);
      payload["members"] = 0;
      out.findings.push_back(
          {FindingKind::hunt_exhausted, std::nullopt, payload, space});
    }
  }
  detail::finalize(out);
  return out;
}

}  // namespace coinage
