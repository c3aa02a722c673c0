#include "bbplan/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bbplan/cube.hpp"
#include "bbplan/npuzzle.hpp"
#include "bbplan/search.hpp"
#include "bbplan/stats.hpp"
#include "bbplan/strips.hpp"
#include "bbplan/suitcase.hpp"

namespace bbplan {

namespace {

// Seed streams, so starts, goals and locks draw independent randomness.
constexpr std::uint64_t kStartStream = 1;
constexpr std::uint64_t kGoalStream = 2;
constexpr std::uint64_t kLockStream = 3;
constexpr std::uint64_t kRunStream = 4;

constexpr int kCubeScrambleSteps = 60;

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);  // binary keeps output byte-stable
    if (!os) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    return os;
}

int puzzle_scramble_steps(Rng& rng) {
    return 225 + (rng.coin() ? 1 : 0);
}

double median(std::vector<std::uint64_t> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    if (n % 2 == 1) {
        return static_cast<double>(xs[n / 2]);
    }
    return (static_cast<double>(xs[n / 2 - 1]) + static_cast<double>(xs[n / 2])) / 2.0;
}

}  // namespace

std::unique_ptr<DomainSimulator> make_domain(const std::string& selector) {
    if (selector == "cube") {
        return std::make_unique<CubeSimulator>();
    }
    if (selector == "npuzzle") {
        return std::make_unique<NPuzzleSimulator>(4);
    }
    if (selector.rfind("npuzzle:", 0) == 0) {
        return std::make_unique<NPuzzleSimulator>(std::stoi(selector.substr(8)));
    }
    if (selector.rfind("hanoi:", 0) == 0) {
        return std::make_unique<StripsSimulator>(generate_hanoi(std::stoi(selector.substr(6))));
    }
    if (selector.rfind("strips:", 0) == 0) {
        const std::string path = selector.substr(7);
        std::ifstream is(path);
        if (!is) {
            throw std::runtime_error("cannot open strips domain file: " + path);
        }
        std::ostringstream text;
        text << is.rdbuf();
        std::string name = path;
        const auto slash = name.find_last_of('/');
        if (slash != std::string::npos) {
            name = name.substr(slash + 1);
        }
        const auto dot = name.find_last_of('.');
        if (dot != std::string::npos) {
            name = name.substr(0, dot);
        }
        return std::make_unique<StripsSimulator>(parse_ground_strips(text.str(), name));
    }
    if (selector.rfind("suitcase:", 0) == 0) {
        int n = 0, m = 0, kbar = 0;
        unsigned long long seed = 0;
        const std::string args = selector.substr(9);
        const int got = std::sscanf(args.c_str(), "%d,%d,%d,%llu", &n, &m, &kbar, &seed);
        if (got < 3) {
            throw std::runtime_error("suitcase selector needs N,M,kbar[,seed]");
        }
        return std::make_unique<SuitcaseLock>(generate_lock(n, m, kbar, seed));
    }
    throw std::runtime_error("unknown domain selector: " + selector);
}

std::uint64_t default_search_budget(const std::string& domain_name) {
    if (domain_name == "cube") {
        return 2000000;
    }
    if (domain_name.rfind("npuzzle", 0) == 0) {
        return 500000;
    }
    if (domain_name == "suitcase") {
        return 500000;
    }
    return 100000;  // ground-STRIPS domains
}

Instance make_instance(const DomainSimulator& sim, std::uint64_t seed, int index,
                       bool random_goal) {
    const std::string domain = sim.domain_name();
    Rng start_rng(mix_seed(seed, kStartStream, index));
    Rng goal_rng(mix_seed(seed, kGoalStream, index));
    auto walker = sim.clone();

    Instance inst;
    if (domain == "cube") {
        inst.start = random_walk(*walker, sim.canonical_state(), kCubeScrambleSteps, start_rng);
        inst.goal = random_goal
                        ? Goal::from_state(random_walk(*walker, sim.canonical_state(),
                                                       kCubeScrambleSteps, goal_rng))
                        : sim.default_goal();
        return inst;
    }
    if (domain.rfind("npuzzle", 0) == 0) {
        const int steps = puzzle_scramble_steps(start_rng);
        inst.start = random_walk(*walker, sim.canonical_state(), steps, start_rng);
        if (random_goal) {
            // The goal scramble reuses the start's step count: walks of equal
            // length share permutation parity, so the goal stays reachable.
            inst.goal = Goal::from_state(
                random_walk(*walker, sim.canonical_state(), steps, goal_rng));
        } else {
            inst.goal = sim.default_goal();
        }
        return inst;
    }
    if (domain == "suitcase") {
        inst.start = sim.random_state(start_rng);
        State goal_state = sim.random_state(goal_rng);
        while (goal_state == inst.start) {
            goal_state = sim.random_state(goal_rng);
        }
        inst.goal = Goal::from_state(goal_state);
        return inst;
    }
    // Ground STRIPS: random walks from the initial state keep instances
    // reachable; a random goal keeps only the positive atoms of a sampled
    // state, matching the positive-conjunction goal format.
    inst.start = sim.random_state(start_rng);
    if (random_goal) {
        const State goal_state = sim.random_state(goal_rng);
        std::vector<std::pair<VarIndex, Value>> lits;
        for (std::size_t i = 0; i < goal_state.size(); ++i) {
            if (goal_state[i]) {
                lits.emplace_back(static_cast<VarIndex>(i), 1);
            }
        }
        inst.goal = Goal(std::move(lits));
    } else {
        inst.goal = sim.default_goal();
    }
    return inst;
}

void run_correlate(const CorrelateConfig& cfg, std::ostream& log) {
    const int n = cfg.num_dials;
    const int kbar_max = cfg.kbar_max > 0 ? cfg.kbar_max : n - 1;
    std::ofstream os = open_out(cfg.out);
    os << "# bbplan correlate v1 N=" << n << " M=" << cfg.modulus << " kbar=" << cfg.kbar_min
       << ".." << kbar_max << " seeds=" << cfg.seeds << " seed=" << cfg.seed << "\n";
    os << "kbar,pearson,spearman,samples\n";

    for (int kbar = cfg.kbar_min; kbar <= kbar_max; ++kbar) {
        JointCounts counts;  // counts[distance][heuristic]
        std::uint64_t samples = 0;
        for (int s = 0; s < cfg.seeds; ++s) {
            const SuitcaseLock lock =
                generate_lock(n, cfg.modulus, kbar, mix_seed(cfg.seed, kLockStream + kbar, s));
            const DistanceTable table = all_pairs_distances(lock);
            const std::uint64_t num_states = lock.num_states();
            std::vector<State> states;
            states.reserve(num_states);
            for (std::uint64_t c = 0; c < num_states; ++c) {
                states.push_back(lock.decode_state(c));
            }
            for (std::uint64_t from = 0; from < num_states; ++from) {
                for (std::uint64_t to = 0; to < num_states; ++to) {
                    if (from == to) {
                        continue;
                    }
                    const int d = table.distance(from, to);
                    // Goal count against the single-state goal `to`.
                    int h = 0;
                    for (int i = 0; i < n; ++i) {
                        h += states[from][i] != states[to][i];
                    }
                    if (counts.size() <= static_cast<std::size_t>(d)) {
                        counts.resize(d + 1);
                    }
                    if (counts[d].size() <= static_cast<std::size_t>(h)) {
                        counts[d].resize(h + 1, 0);
                    }
                    ++counts[d][h];
                    ++samples;
                }
            }
        }
        const double rho_p = pearson_counts(counts);
        const double rho_s = spearman_counts(counts);
        os << kbar << ',' << fmt("%.6f", rho_p) << ',' << fmt("%.6f", rho_s) << ',' << samples
           << "\n";
        log << "correlate kbar=" << kbar << " pearson=" << fmt("%.3f", rho_p)
            << " spearman=" << fmt("%.3f", rho_s) << " samples=" << samples << "\n";
    }
}

void run_sweep(const SweepConfig& cfg, std::ostream& log) {
    const int n = cfg.num_dials;
    const int kbar_max = cfg.kbar_max > 0 ? cfg.kbar_max : n - 1;
    std::ofstream os = open_out(cfg.out);
    os << "# bbplan sweep v1 N=" << n << " M=" << cfg.modulus << " kbar=" << cfg.kbar_min << ".."
       << kbar_max << " seeds=" << cfg.seeds << " budget=" << cfg.budget << " seed=" << cfg.seed
       << "\n";
    os << "kbar,seed,generated,solved\n";

    std::string summary;
    for (int kbar = cfg.kbar_min; kbar <= kbar_max; ++kbar) {
        std::vector<std::uint64_t> generated;
        int solved = 0;
        for (int s = 0; s < cfg.seeds; ++s) {
            SuitcaseLock lock =
                generate_lock(n, cfg.modulus, kbar, mix_seed(cfg.seed, kLockStream + kbar, s));
            Rng run_rng(mix_seed(cfg.seed, kRunStream + kbar, s));
            const State start = lock.random_state(run_rng);
            State goal_state = lock.random_state(run_rng);
            while (goal_state == start) {
                goal_state = lock.random_state(run_rng);
            }
            const SearchResult res =
                gbfs_goal_count(lock, start, Goal::from_state(goal_state), cfg.budget);
            generated.push_back(res.generated);
            solved += res.solved;
            os << kbar << ',' << s << ',' << res.generated << ',' << (res.solved ? 1 : 0) << "\n";
        }
        double mean = 0;
        for (std::uint64_t g : generated) {
            mean += static_cast<double>(g);
        }
        mean /= static_cast<double>(generated.size());
        const double med = median(generated);
        const double rate = static_cast<double>(solved) / cfg.seeds;
        summary += "# summary kbar=" + std::to_string(kbar) + " median=" + fmt("%.1f", med) +
                   " mean=" + fmt("%.1f", mean) + " solve_rate=" + fmt("%.2f", rate) + "\n";
        log << "sweep kbar=" << kbar << " median=" << fmt("%.1f", med)
            << " mean=" << fmt("%.1f", mean) << " solve_rate=" << fmt("%.2f", rate) << "\n";
    }
    os << summary;
}

namespace {

std::vector<int> expert_lengths(const CubeSimulator& sim) {
    std::vector<int> lengths;
    for (const std::string& base : expert_base_sequences()) {
        const auto ids = parse_cube_moves(sim, base);
        for (const auto& variant : expand_expert_variants(sim, ids)) {
            lengths.push_back(static_cast<int>(variant.size()));
        }
    }
    return lengths;
}

}  // namespace

void run_learn(const LearnConfig& cfg, std::ostream& log) {
    std::unique_ptr<DomainSimulator> sim = make_domain(cfg.domain);
    MacroLibrary lib;

    if (cfg.source == "focused") {
        // Macros are learned once, from the first benchmark instance's start.
        const State s0 = make_instance(*sim, cfg.seed, 0, false).start;
        lib = learn_focused_macros(
            *sim, s0, {cfg.num_macros, cfg.repetitions, cfg.budget, cfg.seed});
    } else if (cfg.source == "random") {
        std::vector<int> lengths;
        if (!cfg.lengths_from.empty()) {
            std::ifstream is(cfg.lengths_from);
            if (!is) {
                throw std::runtime_error("cannot open library: " + cfg.lengths_from);
            }
            const MacroLibrary ref = read_macro_library(*sim, is);
            for (const Macro& m : ref.macros) {
                lengths.push_back(m.length());
            }
        } else if (cfg.domain == "cube") {
            // Default comparison set: the expert macro lengths.
            lengths = expert_lengths(static_cast<const CubeSimulator&>(*sim));
        } else {
            throw std::runtime_error("random macros need --lengths-from for this domain");
        }
        lib = generate_random_macros(*sim, lengths, cfg.seed);
    } else if (cfg.source == "expert") {
        if (cfg.domain != "cube") {
            throw std::runtime_error("expert macros exist only for the cube domain");
        }
        lib.domain = sim->domain_name();
        lib.macros = expert_macro_catalog(static_cast<const CubeSimulator&>(*sim));
        lib.num_macros_requested = static_cast<int>(lib.macros.size());
        lib.repetitions = 1;
        lib.seed = cfg.seed;
    } else {
        throw std::runtime_error("unknown macro source: " + cfg.source);
    }

    std::ofstream os = open_out(cfg.out);
    write_macro_library(lib, *sim, os);

    // Length / effect-size digest of the emitted records.
    if (!lib.macros.empty()) {
        int min_len = lib.macros[0].length(), max_len = min_len;
        int min_eff = lib.macros[0].effect_size, max_eff = min_eff;
        double mean_len = 0, mean_eff = 0;
        for (const Macro& m : lib.macros) {
            min_len = std::min(min_len, m.length());
            max_len = std::max(max_len, m.length());
            min_eff = std::min(min_eff, m.effect_size);
            max_eff = std::max(max_eff, m.effect_size);
            mean_len += m.length();
            mean_eff += m.effect_size;
        }
        mean_len /= static_cast<double>(lib.macros.size());
        mean_eff /= static_cast<double>(lib.macros.size());
        log << "learn " << cfg.domain << " source=" << cfg.source << " macros=" << lib.macros.size()
            << " repetitions=" << lib.repetitions_completed
            << " length=[" << min_len << "," << fmt("%.1f", mean_len) << "," << max_len << "]"
            << " effect_size=[" << min_eff << "," << fmt("%.1f", mean_eff) << "," << max_eff << "]"
            << (lib.restart_exhausted ? " restart_exhausted" : "") << "\n";
    } else {
        log << "learn " << cfg.domain << " source=" << cfg.source << " macros=0\n";
    }
}

PlanSummary run_plan(const PlanConfig& cfg, std::ostream& log) {
    std::unique_ptr<DomainSimulator> sim = make_domain(cfg.domain);
    std::string library_name = "none";
    if (!cfg.library.empty() && cfg.library != "none") {
        std::ifstream is(cfg.library);
        if (!is) {
            throw std::runtime_error("cannot open library: " + cfg.library);
        }
        const MacroLibrary lib = read_macro_library(*sim, is);
        sim->attach_macros(lib.macros);
        library_name = cfg.library;
    }
    const std::uint64_t budget =
        cfg.budget > 0 ? cfg.budget : default_search_budget(sim->domain_name());

    std::ofstream os = open_out(cfg.out);
    os << "# bbplan plan v1 domain=" << cfg.domain << " library=" << library_name
       << " instances=" << cfg.instances << " budget=" << budget << " goal=" << cfg.goal
       << " seed=" << cfg.seed << "\n";
    os << "instance,solved,generated,expanded,plan_steps,plan_primitives\n";

    const bool random_goal = cfg.goal == "random";
    double total_generated = 0;
    int solved = 0;
    for (int i = 0; i < cfg.instances; ++i) {
        const Instance inst = make_instance(*sim, cfg.seed, i, random_goal);
        auto run_sim = sim->clone();
        const std::uint64_t before = run_sim->query_count();
        const SearchResult res = gbfs_goal_count(*run_sim, inst.start, inst.goal, budget);
        if (res.generated != run_sim->query_count() - before) {
            throw std::logic_error("plan: generated count does not match simulator queries");
        }
        if (res.solved) {
            auto check_sim = sim->clone();
            const State end = apply_plan(*check_sim, inst.start, res.plan);
            if (!inst.goal.satisfied_by(end)) {
                throw std::logic_error("plan: returned plan does not reach the goal");
            }
            ++solved;
        }
        total_generated += static_cast<double>(res.generated);
        os << i << ',' << (res.solved ? 1 : 0) << ',' << res.generated << ',' << res.expanded
           << ',' << res.plan.size() << ',' << res.plan_length_primitive << "\n";
    }

    PlanSummary summary;
    summary.instances = cfg.instances;
    summary.mean_generated = cfg.instances > 0 ? total_generated / cfg.instances : 0.0;
    summary.solve_rate = cfg.instances > 0 ? static_cast<double>(solved) / cfg.instances : 0.0;
    os << "# mean_generated=" << fmt("%.1f", summary.mean_generated)
       << " solve_rate=" << fmt("%.2f", summary.solve_rate) << "\n";
    log << "plan domain=" << cfg.domain << " library=" << library_name
        << " instances=" << cfg.instances << " mean_generated=" << fmt("%.1f", summary.mean_generated)
        << " solve_rate=" << fmt("%.2f", summary.solve_rate) << "\n";
    return summary;
}

}  // namespace bbplan
