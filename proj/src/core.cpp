#include "bbplan/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbplan {

Goal::Goal(std::vector<std::pair<VarIndex, Value>> literals) : literals_(std::move(literals)) {
    std::sort(literals_.begin(), literals_.end());
    for (std::size_t i = 1; i < literals_.size(); ++i) {
        if (literals_[i].first == literals_[i - 1].first) {
            throw std::invalid_argument("Goal: duplicate literal for variable " +
                                        std::to_string(literals_[i].first));
        }
    }
}

Goal Goal::from_state(const State& s) {
    std::vector<std::pair<VarIndex, Value>> lits;
    lits.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        lits.emplace_back(static_cast<VarIndex>(i), s[i]);
    }
    return Goal(std::move(lits));
}

bool Goal::satisfied_by(const State& s) const {
    for (const auto& [var, val] : literals_) {
        if (var >= s.size()) {
            throw std::invalid_argument("Goal literal index out of range");
        }
        if (s[var] != val) {
            return false;
        }
    }
    return true;
}

int goal_count(const State& s, const Goal& g) {
    int unsatisfied = 0;
    for (const auto& [var, val] : g.literals()) {
        if (var >= s.size()) {
            throw std::invalid_argument("goal_count: literal index out of range");
        }
        if (s[var] != val) {
            ++unsatisfied;
        }
    }
    return unsatisfied;
}

std::vector<VarIndex> net_effect(const State& a, const State& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("net_effect: state length mismatch");
    }
    std::vector<VarIndex> changed;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            changed.push_back(static_cast<VarIndex>(i));
        }
    }
    return changed;
}

int net_effect_size(const State& a, const State& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("net_effect_size: state length mismatch");
    }
    int n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        n += a[i] != b[i];
    }
    return n;
}

State apply_net_effect(const NetEffect& e, const State& s) {
    State out = s;
    if (const auto* perm = std::get_if<ValuePermutation>(&e)) {
        for (auto& v : out) {
            v = perm->map[v];
        }
    } else if (const auto* delta = std::get_if<ModularDelta>(&e)) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = static_cast<Value>((out[i] + delta->delta[i]) % delta->modulus);
        }
    } else {
        const auto& strips = std::get<StripsSummary>(e);
        for (VarIndex i : strips.del) {
            out[i] = 0;
        }
        for (VarIndex i : strips.add) {
            out[i] = 1;
        }
    }
    return out;
}

bool macro_applicable(const Macro& m, const State& s) {
    for (const auto& [var, val] : m.precondition) {
        if (s[var] != val) {
            return false;
        }
    }
    return true;
}

std::string macro_signature(const Macro& m) {
    std::string sig = "pre:";
    for (const auto& [var, val] : m.precondition) {
        sig += std::to_string(var);
        sig += '=';
        sig += std::to_string(val);
        sig += ',';
    }
    return sig + effect_signature(m);
}

std::string effect_signature(const Macro& m) {
    std::string sig;
    if (const auto* perm = std::get_if<ValuePermutation>(&m.effect)) {
        sig += "|perm:";
        for (Value v : perm->map) {
            sig += std::to_string(v);
            sig += ',';
        }
    } else if (const auto* delta = std::get_if<ModularDelta>(&m.effect)) {
        sig += "|delta:";
        for (Value v : delta->delta) {
            sig += std::to_string(v);
            sig += ',';
        }
    } else {
        const auto& strips = std::get<StripsSummary>(m.effect);
        sig += "|add:";
        for (VarIndex i : strips.add) {
            sig += std::to_string(i);
            sig += ',';
        }
        sig += "|del:";
        for (VarIndex i : strips.del) {
            sig += std::to_string(i);
            sig += ',';
        }
    }
    return sig;
}

void DomainSimulator::applicable(const State& s, std::vector<ActionId>& out) const {
    out.clear();
    primitive_applicable(s, out);
    const ActionId base = static_cast<ActionId>(num_primitives());
    for (std::size_t i = 0; i < macros_.size(); ++i) {
        if (macro_applicable(macros_[i], s)) {
            out.push_back(base + static_cast<ActionId>(i));
        }
    }
}

std::vector<ActionId> DomainSimulator::applicable(const State& s) const {
    std::vector<ActionId> out;
    applicable(s, out);
    return out;
}

bool DomainSimulator::is_applicable(const State& s, ActionId a) const {
    if (is_macro(a)) {
        return macro_applicable(macros_[a - num_primitives()], s);
    }
    return primitive_is_applicable(s, a);
}

int DomainSimulator::primitive_length(ActionId a) const {
    return is_macro(a) ? macros_[a - num_primitives()].length() : 1;
}

std::string DomainSimulator::action_name(ActionId a) const {
    if (is_macro(a)) {
        return "macro" + std::to_string(a - num_primitives());
    }
    return primitive_name(a);
}

ActionId DomainSimulator::action_from_name(const std::string& name) const {
    if (name.rfind("macro", 0) == 0) {
        std::size_t idx = std::stoul(name.substr(5));
        if (idx >= macros_.size()) {
            throw std::invalid_argument("unknown macro name: " + name);
        }
        return static_cast<ActionId>(num_primitives() + idx);
    }
    return primitive_from_name(name);
}

void DomainSimulator::attach_macros(std::span<const Macro> macros) {
    for (std::size_t i = 0; i < macros.size(); ++i) {
        const Macro& m = macros[i];
        if (m.primitives.empty()) {
            throw std::invalid_argument("attach_macros: macro " + std::to_string(i) + " is empty");
        }
        Macro rebuilt = summarize(m.primitives);
        if (macro_signature(rebuilt) != macro_signature(m) || rebuilt.effect_size != m.effect_size) {
            throw std::invalid_argument("attach_macros: macro " + std::to_string(i) +
                                        " does not match its primitive sequence");
        }
        macros_.push_back(m);
    }
}

std::string DomainSimulator::precondition_token(const Macro& m) const {
    if (m.precondition.empty()) {
        return "-";
    }
    std::string tok;
    for (const auto& [var, val] : m.precondition) {
        if (!tok.empty()) {
            tok += ',';
        }
        tok += 'v' + std::to_string(var) + '=' + std::to_string(val);
    }
    return tok;
}

State DomainSimulator::apply(const State& s, ActionId a) const {
    if (is_macro(a)) {
        return apply_net_effect(macros_[a - num_primitives()].effect, s);
    }
    return apply_primitive(s, a);
}

State apply_plan(DomainSimulator& sim, const State& start, std::span<const ActionId> plan) {
    State s = start;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        if (!sim.is_applicable(s, plan[i])) {
            throw std::runtime_error("apply_plan: action at position " + std::to_string(i) +
                                     " (" + sim.action_name(plan[i]) + ") is not applicable");
        }
        s = sim.step(s, plan[i]);
    }
    return s;
}

int macro_effect_size(DomainSimulator& sim, const State& start, std::span<const ActionId> seq) {
    State end = apply_plan(sim, start, seq);
    return net_effect_size(start, end);
}

State random_walk(DomainSimulator& sim, const State& from, int steps, Rng& rng) {
    State s = from;
    std::vector<ActionId> acts;
    for (int i = 0; i < steps; ++i) {
        sim.applicable(s, acts);
        if (acts.empty()) {
            throw std::runtime_error("random_walk: dead end at step " + std::to_string(i));
        }
        s = sim.step(s, acts[rng.below(acts.size())]);
    }
    return s;
}

}  // namespace bbplan
