#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>
#include <unordered_set>

#include "bbplan/search.hpp"
#include "bbplan/strips.hpp"

using namespace bbplan;

namespace {

const char* kToyDomain = R"(atoms:
  p
  q
  r
action consume:
  pre: p q
  add:
  del: q
action restore:
  pre: p
  add: q
  del:
action swap:
  pre: q
  add: r
  del: q
init:
  p q
goal:
  r
)";

// Exhaustive BFS over the simulator; the optimal-cost oracle.
int bfs_optimal_cost(StripsSimulator& sim, const State& start, const Goal& goal) {
    std::unordered_map<State, int, StateHash> dist;
    std::deque<State> queue;
    dist[start] = 0;
    queue.push_back(start);
    std::vector<ActionId> acts;
    while (!queue.empty()) {
        const State s = queue.front();
        queue.pop_front();
        if (goal.satisfied_by(s)) {
            return dist[s];
        }
        sim.applicable(s, acts);
        for (ActionId a : acts) {
            State next = sim.step(s, a);
            if (dist.emplace(next, dist[s] + 1).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    return -1;
}

std::uint64_t bfs_reachable(StripsSimulator& sim, const State& start) {
    std::unordered_set<State, StateHash> seen;
    std::deque<State> queue;
    seen.insert(start);
    queue.push_back(start);
    std::vector<ActionId> acts;
    while (!queue.empty()) {
        const State s = queue.front();
        queue.pop_front();
        sim.applicable(s, acts);
        for (ActionId a : acts) {
            State next = sim.step(s, a);
            if (seen.insert(next).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    return seen.size();
}

}  // namespace

TEST_CASE("parser accepts the toy domain and rejects malformed input") {
    const GroundStripsDomain d = parse_ground_strips(kToyDomain, "toy");
    CHECK(d.atoms == std::vector<std::string>{"p", "q", "r"});
    CHECK(d.actions.size() == 3);
    CHECK(d.init == std::vector<VarIndex>{0, 1});
    CHECK(d.goal == std::vector<VarIndex>{2});

    // Errors carry line numbers.
    try {
        parse_ground_strips("atoms:\n  p\nnonsense\n");
        CHECK(false);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_ground_strips("atoms:\n  p\ninit:\n  undeclared\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_ground_strips("atoms:\n  p\naction a:\n  pre: p\naction a:\n  pre: p\n"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_ground_strips("atoms:\n  p\n  p\n"), std::runtime_error);
}

TEST_CASE("contradictory effects simplify to their positive part") {
    const GroundStripsDomain d = parse_ground_strips(
        "atoms:\n  a\naction odd:\n  pre:\n  add: a\n  del: a\n");
    CHECK(d.actions[0].add == std::vector<VarIndex>{0});
    CHECK(d.actions[0].del.empty());
}

TEST_CASE("an empty-action domain with init equal to goal has goal count zero") {
    const GroundStripsDomain d = parse_ground_strips("atoms:\n  a\n  b\ninit:\n  a\ngoal:\n  a\n");
    StripsSimulator sim(d);
    CHECK(goal_count(sim.init_state(), sim.default_goal()) == 0);
}

TEST_CASE("canonical text round-trips through the parser") {
    const GroundStripsDomain d = generate_hanoi(3);
    const std::string text = write_ground_strips(d);
    const GroundStripsDomain Reparsed = parse_ground_strips(text, d.name);
    CHECK(Reparsed.atoms == d.atoms);
    CHECK(Reparsed.init == d.init);
    CHECK(Reparsed.goal == d.goal);
    REQUIRE(Reparsed.actions.size() == d.actions.size());
    for (std::size_t i = 0; i < d.actions.size(); ++i) {
        CHECK(Reparsed.actions[i].name == d.actions[i].name);
        CHECK(Reparsed.actions[i].pre == d.actions[i].pre);
        CHECK(Reparsed.actions[i].add == d.actions[i].add);
        CHECK(Reparsed.actions[i].del == d.actions[i].del);
    }
}

TEST_CASE("step semantics: deletes then adds over boolean atoms") {
    StripsSimulator sim(parse_ground_strips(kToyDomain, "toy"));
    const State init = sim.init_state();

    // `restore` adds an already-true atom: no visible change.
    CHECK(sim.step(init, sim.action_from_name("restore")) == init);

    // `consume` clears q.
    const State after = sim.step(init, sim.action_from_name("consume"));
    CHECK(after[0] == 1);
    CHECK(after[1] == 0);

    // An action with unmet precondition is simply not applicable.
    CHECK_FALSE(sim.is_applicable(after, sim.action_from_name("consume")));
    const auto acts = sim.applicable(after);
    CHECK(acts == std::vector<ActionId>{sim.action_from_name("restore")});
}

TEST_CASE("macro summaries: inverse pair, single action, unchainable error") {
    StripsSimulator sim(parse_ground_strips(kToyDomain, "toy"));
    const ActionId consume = sim.action_from_name("consume");
    const ActionId restore = sim.action_from_name("restore");
    const ActionId swap = sim.action_from_name("swap");

    // consume deletes q, restore re-adds it: the pair nets to nothing and
    // keeps consume's precondition.
    const Macro pair = sim.summarize(std::vector<ActionId>{consume, restore});
    CHECK(pair.precondition == std::vector<std::pair<VarIndex, Value>>{{0, 1}, {1, 1}});
    const auto& eff = std::get<StripsSummary>(pair.effect);
    CHECK(eff.add.empty());
    CHECK(eff.del.empty());
    CHECK(pair.effect_size == 0);

    // A single action summarizes to itself.
    const Macro single = sim.summarize(std::vector<ActionId>{swap});
    const auto& seff = std::get<StripsSummary>(single.effect);
    CHECK(single.precondition == std::vector<std::pair<VarIndex, Value>>{{1, 1}});
    CHECK(seff.add == std::vector<VarIndex>{2});
    CHECK(seff.del == std::vector<VarIndex>{1});

    // consume deletes q, and swap then needs it: unchainable.
    try {
        sim.summarize(std::vector<ActionId>{consume, swap});
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position 1") != std::string::npos);
    }
}

TEST_CASE("macro summaries equal stepwise execution, exhaustively on a toy domain") {
    StripsSimulator sim(parse_ground_strips(kToyDomain, "toy"));
    Rng rng(17);
    const std::size_t atoms = sim.num_variables();
    for (int trial = 0; trial < 300; ++trial) {
        // Random chainable sequence, built by walking from a random state.
        State s(atoms);
        for (auto& v : s) {
            v = static_cast<Value>(rng.below(2));
        }
        std::vector<ActionId> seq;
        auto walker = sim.clone();
        for (int i = 0; i < 4; ++i) {
            const auto acts = walker->applicable(s);
            if (acts.empty()) {
                break;
            }
            const ActionId a = acts[rng.below(acts.size())];
            seq.push_back(a);
            s = walker->step(s, a);
        }
        if (seq.empty()) {
            continue;
        }
        const Macro m = sim.summarize(seq);

        // Every state satisfying the summary precondition must run the whole
        // chain stepwise and land exactly on the summary's result.
        for (std::uint64_t bits = 0; bits < (1ull << atoms); ++bits) {
            State start(atoms);
            for (std::size_t i = 0; i < atoms; ++i) {
                start[i] = (bits >> i) & 1;
            }
            if (!macro_applicable(m, start)) {
                continue;
            }
            auto stepper = sim.clone();
            const State stepwise = apply_plan(*stepper, start, m.primitives);
            CHECK(apply_net_effect(m.effect, start) == stepwise);
        }
    }
}

TEST_CASE("hanoi: optimal plan lengths and exhaustive reachability") {
    {
        StripsSimulator sim(generate_hanoi(1));
        CHECK(bfs_optimal_cost(sim, sim.init_state(), sim.default_goal()) == 1);
    }
    {
        StripsSimulator sim(generate_hanoi(3));
        CHECK(bfs_optimal_cost(sim, sim.init_state(), sim.default_goal()) == 7);
        CHECK(bfs_reachable(sim, sim.init_state()) == 27);
    }
    {
        StripsSimulator sim(generate_hanoi(7));
        CHECK(bfs_reachable(sim, sim.init_state()) == 2187);  // 3^7 legal states
    }
}

TEST_CASE("hanoi: a two-disk relocation macro summarizes to the net move") {
    StripsSimulator sim(generate_hanoi(2));
    // Move the 2-stack from p1 to p3: d1->p2, d2->p3, d1->d2.
    const std::vector<ActionId> seq = {
        sim.action_from_name("move_d1_d2_p2"),
        sim.action_from_name("move_d2_p1_p3"),
        sim.action_from_name("move_d1_p2_d2"),
    };
    auto stepper = sim.clone();
    const State end = apply_plan(*stepper, sim.init_state(), seq);
    CHECK(sim.default_goal().satisfied_by(end));

    const Macro m = sim.summarize(seq);
    CHECK(apply_net_effect(m.effect, sim.init_state()) == end);
    CHECK(macro_applicable(m, sim.init_state()));
}

TEST_CASE("goal count over STRIPS counts unsatisfied goal atoms") {
    StripsSimulator sim(generate_hanoi(3));
    const Goal goal = sim.default_goal();
    CHECK(goal.literals().size() == 3);  // on(d1,d2), on(d2,d3), on(d3,p3)
    CHECK(goal_count(sim.init_state(), goal) == 1);  // only on(d3,p3) is false
}
