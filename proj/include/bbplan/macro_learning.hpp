#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bbplan/core.hpp"

namespace bbplan {

struct FocusedMacroParams {
    int num_macros = 0;       // N_M: total macros to keep
    int repetitions = 1;      // R_M: search restarts
    std::uint64_t budget = 0; // B_M: simulator queries across all repetitions
    std::uint64_t seed = 0;
};

struct MacroProvenance {
    std::uint64_t seed = 0;
    int repetition = 0;
    int h_at_save = 0;  // net-effect size relative to the repetition's start
};

struct MacroLibrary {
    std::string domain;
    int num_macros_requested = 0;
    int repetitions = 0;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;

    std::vector<Macro> macros;
    std::vector<MacroProvenance> provenance;  // parallel to macros; empty when loaded from file

    int repetitions_completed = 0;
    bool restart_exhausted = false;  // no macro-free restart state was found
};

using StateSampler = std::function<State(Rng&)>;

// Discovers macros with small net effects. Each repetition runs best-first
// search from the current start, minimizing f = length + h where h is the
// macro's net-effect size relative to the start (infinite when the net
// effect is empty). Every newly generated node offers its macro to a bounded
// queue of capacity N_M / R_M keyed by h; when full, the largest-h entry is
// evicted (breaking ties toward evicting longer macros, then later
// arrivals). Queue survivors join the library unless an earlier macro has
// the same net-effect signature. Between repetitions the start is resampled
// until no saved macro applies; if 10,000 samples all fail, learning stops
// early. The per-repetition search budget is B_M / R_M; the remainder of
// N_M / R_M goes to the final repetition.
//
// `sampler` defaults to the simulator's random_state. The simulator must not
// have macros attached.
MacroLibrary learn_focused_macros(DomainSimulator& sim, const State& start,
                                  const FocusedMacroParams& params,
                                  StateSampler sampler = nullptr);

// Baseline macros: for each requested length, a uniform random walk over the
// applicable primitive actions, started at a fresh random state. A walk that
// dead-ends is resampled. Duplicate net effects are kept, so the output size
// always matches the request.
MacroLibrary generate_random_macros(DomainSimulator& sim, std::span<const int> lengths,
                                    std::uint64_t seed);

// Keeps one macro per net-effect signature, shortest first (stable within
// equal lengths).
std::vector<Macro> dedup_by_net_effect(std::vector<Macro> candidates);

// Library file format:
//   macros v1 domain=<name> N_M=<int> R_M=<int> B_M=<int> seed=<int>
//   <id> len=<k> seq=<a1,a2,...> effect_size=<int> pre=<token or '-'>
// Sequences use the domain's primitive action tokens. Loading re-derives
// every summary from its sequence and rejects mismatching records.
void write_macro_library(const MacroLibrary& lib, const DomainSimulator& sim, std::ostream& os);
MacroLibrary read_macro_library(const DomainSimulator& sim, std::istream& is);

}  // namespace bbplan
