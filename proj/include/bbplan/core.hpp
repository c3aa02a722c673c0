#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bbplan/rng.hpp"

namespace bbplan {

// A state is a fixed-length vector of finite-domain variable values. All
// domains in this toolkit fit in a byte per variable (permutation indices,
// modular dials, boolean atoms).
using Value = std::uint8_t;
using VarIndex = std::uint32_t;
using ActionId = std::uint32_t;
using State = std::vector<Value>;

struct StateHash {
    std::size_t operator()(const State& s) const noexcept {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (Value v : s) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Conjunction of (variable, required value) literals, at most one literal per
// variable. A single-state goal carries one literal per variable.
class Goal {
public:
    Goal() = default;
    explicit Goal(std::vector<std::pair<VarIndex, Value>> literals);
    static Goal from_state(const State& s);

    const std::vector<std::pair<VarIndex, Value>>& literals() const { return literals_; }
    bool satisfied_by(const State& s) const;

private:
    std::vector<std::pair<VarIndex, Value>> literals_;  // sorted by variable
};

// Number of goal literals not satisfied by s; 0 iff s satisfies g.
int goal_count(const State& s, const Goal& g);

// Indices where the two states differ (sorted). Throws on length mismatch.
std::vector<VarIndex> net_effect(const State& a, const State& b);
int net_effect_size(const State& a, const State& b);

// ---------------------------------------------------------------------------
// Macro net-effect summaries.
//
// A macro's net effect is stored in a state-independent form so that the
// simulator can execute the whole sequence as a single step, and so that two
// macros with the same start-to-end behaviour can be recognized as duplicates.

// Relabels every variable's value: s'[v] = map[s[v]]. Moves in the sliding
// puzzle and the cube permute position indices, so their macros compose into
// one such permutation.
struct ValuePermutation {
    std::vector<Value> map;
};

// s'[i] = (s[i] + delta[i]) mod modulus.
struct ModularDelta {
    std::vector<Value> delta;
    int modulus = 2;
};

// Boolean-atom update: atoms in `add` become true, atoms in `del` become
// false. Both sets sorted and disjoint.
struct StripsSummary {
    std::vector<VarIndex> add;
    std::vector<VarIndex> del;
};

using NetEffect = std::variant<ValuePermutation, ModularDelta, StripsSummary>;

State apply_net_effect(const NetEffect& e, const State& s);

struct Macro {
    std::vector<ActionId> primitives;                      // length >= 1
    std::vector<std::pair<VarIndex, Value>> precondition;  // sorted; empty = always applicable
    NetEffect effect;
    int effect_size = 0;  // variables changed by one application (see domain summarizers)

    int length() const { return static_cast<int>(primitives.size()); }
};

bool macro_applicable(const Macro& m, const State& s);

// State-independent identity of a macro: precondition plus net effect. Two
// macros with equal signatures are interchangeable during planning.
std::string macro_signature(const Macro& m);

// Signature of the net effect alone, ignoring the precondition.
std::string effect_signature(const Macro& m);

// ---------------------------------------------------------------------------
// Black-box simulator: an immutable domain description plus a per-instance
// query counter. step() is the only budgeted operation; one call generates one
// state, for primitive actions and attached macros alike. Each search run
// should own its simulator (clone() for concurrent or audited runs).
class DomainSimulator {
public:
    virtual ~DomainSimulator() = default;

    State step(const State& s, ActionId a) {
        ++queries_;
        return apply(s, a);
    }
    std::uint64_t query_count() const { return queries_; }

    // Valid actions in s: primitives in domain order, then macros in library
    // order. The two-argument form reuses the output buffer.
    void applicable(const State& s, std::vector<ActionId>& out) const;
    std::vector<ActionId> applicable(const State& s) const;
    bool is_applicable(const State& s, ActionId a) const;

    virtual std::size_t num_variables() const = 0;
    virtual std::size_t num_primitives() const = 0;
    std::size_t num_actions() const { return num_primitives() + macros_.size(); }
    bool is_macro(ActionId a) const { return a >= num_primitives(); }
    int primitive_length(ActionId a) const;

    std::string action_name(ActionId a) const;
    ActionId action_from_name(const std::string& name) const;

    // Single-step summary of a primitive sequence. Throws if the sequence is
    // not chainable in this domain.
    virtual Macro summarize(std::span<const ActionId> seq) const = 0;

    // A random state satisfying the domain's state invariants; used for
    // learning restarts and random-macro walks.
    virtual State random_state(Rng& rng) const = 0;

    // Reference configuration (solved state / STRIPS initial state) and the
    // goal of the domain's standard benchmark instances.
    virtual State canonical_state() const = 0;
    virtual Goal default_goal() const = 0;

    virtual std::string domain_name() const = 0;
    virtual std::unique_ptr<DomainSimulator> clone() const = 0;

    // Appends macros to the action table after validating each against its
    // own primitive sequence; a macro whose stored summary does not match is
    // rejected with a diagnostic.
    void attach_macros(std::span<const Macro> macros);
    const std::vector<Macro>& macros() const { return macros_; }

    // Token describing a macro's precondition in library files ("-" if none).
    virtual std::string precondition_token(const Macro& m) const;

protected:
    DomainSimulator() = default;
    DomainSimulator(const DomainSimulator&) = default;
    DomainSimulator& operator=(const DomainSimulator&) = default;

    virtual State apply_primitive(const State& s, ActionId a) const = 0;
    virtual void primitive_applicable(const State& s, std::vector<ActionId>& out) const = 0;
    virtual bool primitive_is_applicable(const State& s, ActionId a) const = 0;
    virtual std::string primitive_name(ActionId a) const = 0;
    virtual ActionId primitive_from_name(const std::string& name) const = 0;

private:
    State apply(const State& s, ActionId a) const;

    std::vector<Macro> macros_;
    std::uint64_t queries_ = 0;
};

// Applies `plan` from `start`, one step() per action. Throws if a step is not
// applicable, naming the failing position. Used to validate returned plans.
State apply_plan(DomainSimulator& sim, const State& start, std::span<const ActionId> plan);

// Net-effect size of an action sequence measured at the end of execution;
// intermediate modifications are ignored.
int macro_effect_size(DomainSimulator& sim, const State& start, std::span<const ActionId> seq);

// Uniform random walk of `steps` applicable actions. Throws on a dead end.
State random_walk(DomainSimulator& sim, const State& from, int steps, Rng& rng);

}  // namespace bbplan
