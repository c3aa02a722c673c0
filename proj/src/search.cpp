#include "bbplan/search.hpp"

#include <algorithm>
#include <tuple>

namespace bbplan {

namespace {

struct OpenEntry {
    std::int64_t key;
    std::uint64_t serial;
    std::uint32_t node;

    bool operator>(const OpenEntry& o) const {
        // Equal keys pop newest-first. On wide heuristic plateaus this dives
        // along fresh successors instead of fanning out around the plateau's
        // entry point, which is the difference between crossing the plateau
        // and exhausting the budget on it.
        return std::tie(key, o.serial) > std::tie(o.key, serial);
    }
};

using OpenList = std::priority_queue<OpenEntry, std::vector<OpenEntry>, std::greater<OpenEntry>>;

}  // namespace

BestFirstSearch::BestFirstSearch(DomainSimulator& sim, PriorityFn priority, GoalTest goal_test,
                                 std::uint64_t budget)
    : sim_(sim), priority_(std::move(priority)), goal_test_(std::move(goal_test)), budget_(budget) {}

SearchResult BestFirstSearch::run(const State& start) {
    nodes_.clear();
    seen_.clear();

    SearchResult result;
    OpenList open;
    std::uint64_t serial = 0;

    auto root_it = seen_.emplace(start, 0u).first;
    nodes_.push_back({&root_it->first, kNoNode, 0, 0});
    open.push({priority_(start, 0), serial++, 0});

    std::vector<ActionId> actions;
    while (!open.empty()) {
        const OpenEntry entry = open.top();
        open.pop();
        // nodes_ may grow below; take what we need from the entry up front.
        const State& s = *nodes_[entry.node].state;
        const std::uint32_t depth = nodes_[entry.node].depth + 1;

        if (goal_test_(s)) {
            result.solved = true;
            std::uint32_t cur = entry.node;
            while (nodes_[cur].parent != kNoNode) {
                result.plan.push_back(nodes_[cur].action);
                cur = nodes_[cur].parent;
            }
            std::reverse(result.plan.begin(), result.plan.end());
            for (ActionId a : result.plan) {
                result.plan_length_primitive += sim_.primitive_length(a);
            }
            return result;
        }
        if (expand_hook_) {
            expand_hook_(s, entry.key);
        }
        ++result.expanded;
        if (result.generated == budget_) {
            continue;  // out of budget; keep goal-testing what was generated
        }

        sim_.applicable(s, actions);
        for (ActionId a : actions) {
            if (result.generated == budget_) {
                break;  // partial expansion at the budget boundary
            }
            State succ = sim_.step(s, a);
            ++result.generated;
            auto [it, fresh] = seen_.try_emplace(std::move(succ),
                                                 static_cast<std::uint32_t>(nodes_.size()));
            if (!fresh) {
                continue;  // duplicate: the query still counted
            }
            const std::uint32_t id = it->second;
            nodes_.push_back({&it->first, entry.node, a, depth});
            open.push({priority_(it->first, depth), serial++, id});
            if (generate_hook_) {
                generate_hook_(id, it->first, depth);
            }
        }
    }
    return result;
}

std::vector<ActionId> BestFirstSearch::action_sequence(std::uint32_t node) const {
    std::vector<ActionId> seq;
    std::uint32_t cur = node;
    while (nodes_[cur].parent != kNoNode) {
        seq.push_back(nodes_[cur].action);
        cur = nodes_[cur].parent;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

const State& BestFirstSearch::node_state(std::uint32_t node) const {
    return *nodes_[node].state;
}

SearchResult best_first_search(DomainSimulator& sim, const State& start, PriorityFn priority,
                               GoalTest goal_test, std::uint64_t budget) {
    BestFirstSearch search(sim, std::move(priority), std::move(goal_test), budget);
    return search.run(start);
}

SearchResult gbfs_goal_count(DomainSimulator& sim, const State& start, const Goal& goal,
                             std::uint64_t budget) {
    return best_first_search(
        sim, start,
        [&goal](const State& s, std::uint32_t) { return static_cast<std::int64_t>(goal_count(s, goal)); },
        [&goal](const State& s) { return goal.satisfied_by(s); }, budget);
}

}  // namespace bbplan
