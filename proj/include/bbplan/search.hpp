#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <unordered_map>
#include <vector>

#include "bbplan/core.hpp"

namespace bbplan {

struct SearchResult {
    std::vector<ActionId> plan;
    std::uint64_t generated = 0;  // simulator queries spent by the run
    std::uint64_t expanded = 0;
    bool solved = false;
    std::uint64_t plan_length_primitive = 0;  // plan cost after macro expansion
};

// Key of a freshly generated node; lower expands first. `depth` is the number
// of actions from the root. Keys are computed once, at generation.
using PriorityFn = std::function<std::int64_t(const State& s, std::uint32_t depth)>;
using GoalTest = std::function<bool(const State&)>;

// Key value standing in for an infinite heuristic; large enough that adding
// path lengths cannot overflow.
inline constexpr std::int64_t kInfiniteKey = std::numeric_limits<std::int64_t>::max() / 4;

// Budgeted best-first search.
//
//   - The open list orders by key, breaking ties newest-first (LIFO): equal
//     keys behave like a depth-first dive, which crosses heuristic plateaus
//     far faster than fanning out breadth-first around them.
//   - Goal test happens when a node is popped; a start state satisfying the
//     goal costs zero queries.
//   - Duplicate detection is by exact state value. A successor that was seen
//     before is not re-queued, but its generation still consumed one query
//     and therefore one unit of budget.
//   - The budget caps generation. An expansion may be cut short at the budget
//     boundary; nodes already in the open list are still popped and
//     goal-tested (at zero query cost) before the search gives up.
class BestFirstSearch {
public:
    BestFirstSearch(DomainSimulator& sim, PriorityFn priority, GoalTest goal_test,
                    std::uint64_t budget);

    // Invoked once per newly created node (duplicates and the root excluded).
    using GenerateHook = std::function<void(std::uint32_t node, const State& s, std::uint32_t depth)>;
    void set_generate_hook(GenerateHook hook) { generate_hook_ = std::move(hook); }

    // Invoked when a node is expanded; used by property tests.
    using ExpandHook = std::function<void(const State& s, std::int64_t key)>;
    void set_expand_hook(ExpandHook hook) { expand_hook_ = std::move(hook); }

    SearchResult run(const State& start);

    // Valid after run(); actions from the root to `node`.
    std::vector<ActionId> action_sequence(std::uint32_t node) const;
    const State& node_state(std::uint32_t node) const;

private:
    static constexpr std::uint32_t kNoNode = std::numeric_limits<std::uint32_t>::max();

    struct Node {
        const State* state;  // owned by seen_; stable across rehash
        std::uint32_t parent;
        ActionId action;
        std::uint32_t depth;
    };

    DomainSimulator& sim_;
    PriorityFn priority_;
    GoalTest goal_test_;
    std::uint64_t budget_;
    GenerateHook generate_hook_;
    ExpandHook expand_hook_;

    std::vector<Node> nodes_;
    std::unordered_map<State, std::uint32_t, StateHash> seen_;
};

SearchResult best_first_search(DomainSimulator& sim, const State& start, PriorityFn priority,
                               GoalTest goal_test, std::uint64_t budget);

// Greedy best-first search ordered by the goal-count heuristic alone.
SearchResult gbfs_goal_count(DomainSimulator& sim, const State& start, const Goal& goal,
                             std::uint64_t budget);

}  // namespace bbplan
