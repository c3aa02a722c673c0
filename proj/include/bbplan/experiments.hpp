#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include "bbplan/core.hpp"
#include "bbplan/macro_learning.hpp"

namespace bbplan {

// Domain selectors understood by the experiment drivers:
//   cube | npuzzle | npuzzle:<side> | hanoi:<disks> | strips:<file> |
//   suitcase:<N>,<M>,<kbar>[,<seed>]
std::unique_ptr<DomainSimulator> make_domain(const std::string& selector);

// Per-domain default search budget B_S.
std::uint64_t default_search_budget(const std::string& domain_name);

// Benchmark instance: a random start plus either the domain's default goal or
// a randomly sampled reachable goal state.
struct Instance {
    State start;
    Goal goal;
};
Instance make_instance(const DomainSimulator& sim, std::uint64_t seed, int index, bool random_goal);

struct CorrelateConfig {
    int num_dials = 10;
    int modulus = 2;
    int kbar_min = 1;
    int kbar_max = 0;  // 0 = N-1
    int seeds = 10;
    std::uint64_t seed = 0;
    std::string out;
};

struct SweepConfig {
    int num_dials = 20;
    int modulus = 2;
    int kbar_min = 1;
    int kbar_max = 0;  // 0 = N-1
    int seeds = 100;
    std::uint64_t budget = 500000;
    std::uint64_t seed = 0;
    std::string out;
};

struct LearnConfig {
    std::string domain = "cube";
    std::string source = "focused";  // focused | random | expert
    int num_macros = 0;
    int repetitions = 1;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    std::string lengths_from;  // random source: library file to copy lengths from
    std::string out;
};

struct PlanConfig {
    std::string domain = "cube";
    std::string library;  // empty or "none" = primitives only
    int instances = 100;
    std::uint64_t budget = 0;  // 0 = domain default
    std::string goal = "default";  // default | random
    std::uint64_t seed = 0;
    std::string out;
};

// Heuristic accuracy over all state pairs of small locks, pooled across
// seeds; one CSV row (kbar, pearson, spearman, samples) per kbar.
void run_correlate(const CorrelateConfig& cfg, std::ostream& log);

// Planning efficiency per (kbar, seed); CSV rows plus per-kbar summary
// comment lines with median/mean generated states and solve rate.
void run_sweep(const SweepConfig& cfg, std::ostream& log);

// Learns or generates a macro library and writes it to cfg.out.
void run_learn(const LearnConfig& cfg, std::ostream& log);

struct PlanSummary {
    int instances = 0;
    double mean_generated = 0.0;
    double solve_rate = 0.0;
};

// GBFS with the goal-count heuristic over `instances` benchmark instances,
// optionally with an attached macro library. Every solved plan is
// re-validated with apply_plan before its row is written.
PlanSummary run_plan(const PlanConfig& cfg, std::ostream& log);

}  // namespace bbplan
