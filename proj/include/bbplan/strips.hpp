#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "bbplan/core.hpp"

namespace bbplan {

struct StripsAction {
    std::string name;
    std::vector<VarIndex> pre;  // sorted atom indices
    std::vector<VarIndex> add;  // sorted, disjoint from del after simplification
    std::vector<VarIndex> del;
};

struct GroundStripsDomain {
    std::string name;
    std::vector<std::string> atoms;      // index = state-vector position
    std::vector<StripsAction> actions;
    std::vector<VarIndex> init;          // true atoms, sorted
    std::vector<VarIndex> goal;          // positive goal conjunction, sorted

    VarIndex atom_index(const std::string& atom) const;
};

// Line-oriented domain format:
//   atoms:            one atom name per indented line
//   action <name>:    with indented `pre:` / `add:` / `del:` atom lists
//   init: / goal:     indented lines of space-separated atoms
// Tokens are [A-Za-z0-9_-]+. Parse errors carry the offending line number.
// Contradictory effects (an atom both added and deleted by one action) are
// simplified to the add at load time.
GroundStripsDomain parse_ground_strips(const std::string& text, const std::string& name = "strips");
std::string write_ground_strips(const GroundStripsDomain& domain);

// Standard 3-peg Tower of Hanoi with on/clear atoms; disks d1 (smallest) to
// dn, pegs p1..p3, all disks starting on p1 and the goal tower on p3.
GroundStripsDomain generate_hanoi(int n_disks);

// Boolean state vector over the domain's atoms (value 1 = atom true).
class StripsSimulator : public DomainSimulator {
public:
    explicit StripsSimulator(GroundStripsDomain domain);

    const GroundStripsDomain& domain() const { return domain_; }
    State init_state() const;

    std::size_t num_variables() const override { return domain_.atoms.size(); }
    std::size_t num_primitives() const override { return domain_.actions.size(); }

    // Grounded macro summary: the accumulated outside precondition plus the
    // net add/del effect. The summary applies in exactly the states where the
    // whole primitive chain runs, and produces the same final state.
    Macro summarize(std::span<const ActionId> seq) const override;

    // Random walk from the initial state, so sampled states are reachable.
    State random_state(Rng& rng) const override;

    State canonical_state() const override { return init_state(); }
    Goal default_goal() const override;
    std::string domain_name() const override { return domain_.name; }
    std::unique_ptr<DomainSimulator> clone() const override;
    std::string precondition_token(const Macro& m) const override;

protected:
    State apply_primitive(const State& s, ActionId a) const override;
    void primitive_applicable(const State& s, std::vector<ActionId>& out) const override;
    bool primitive_is_applicable(const State& s, ActionId a) const override;
    std::string primitive_name(ActionId a) const override;
    ActionId primitive_from_name(const std::string& name) const override;

private:
    GroundStripsDomain domain_;
    std::unordered_map<std::string, ActionId> action_index_;
};

}  // namespace bbplan
