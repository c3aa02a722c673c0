#include "bbplan/macro_learning.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "bbplan/search.hpp"

namespace bbplan {

namespace {

struct Candidate {
    int h;
    std::uint32_t length;
    std::uint64_t serial;
    Macro macro;

    // Worst candidate first: largest h, then longest, then latest arrival.
    bool operator<(const Candidate& o) const {
        return std::tie(h, length, serial) < std::tie(o.h, o.length, o.serial);
    }
};

constexpr int kRestartAttempts = 10000;

}  // namespace

MacroLibrary learn_focused_macros(DomainSimulator& sim, const State& start,
                                  const FocusedMacroParams& params, StateSampler sampler) {
    if (params.repetitions < 1) {
        throw std::invalid_argument("learn_focused_macros: repetitions must be >= 1");
    }
    if (params.num_macros < 0) {
        throw std::invalid_argument("learn_focused_macros: num_macros must be >= 0");
    }
    if (params.budget < static_cast<std::uint64_t>(params.repetitions)) {
        throw std::invalid_argument("learn_focused_macros: budget smaller than repetition count");
    }
    if (!sim.macros().empty()) {
        throw std::invalid_argument("learn_focused_macros: simulator already has macros attached");
    }
    if (!sampler) {
        sampler = [&sim](Rng& rng) { return sim.random_state(rng); };
    }

    MacroLibrary lib;
    lib.domain = sim.domain_name();
    lib.num_macros_requested = params.num_macros;
    lib.repetitions = params.repetitions;
    lib.budget = params.budget;
    lib.seed = params.seed;
    if (params.num_macros == 0) {
        return lib;
    }

    Rng rng(params.seed);
    State s0 = start;
    const std::uint64_t rep_budget = params.budget / params.repetitions;
    const int base_capacity = params.num_macros / params.repetitions;
    std::unordered_set<std::string> signatures;

    // A macro whose net effect coincides with a primitive action is dominated
    // by it, so such candidates never occupy a queue slot.
    std::unordered_set<std::string> primitive_effects;
    for (ActionId a = 0; a < sim.num_primitives(); ++a) {
        primitive_effects.insert(effect_signature(sim.summarize(std::vector<ActionId>{a})));
    }

    for (int rep = 0; rep < params.repetitions; ++rep) {
        int capacity = base_capacity;
        if (rep == params.repetitions - 1) {
            capacity += params.num_macros % params.repetitions;
        }

        std::priority_queue<Candidate> queue;  // top = worst retained candidate
        std::uint64_t offer_serial = 0;

        BestFirstSearch search(
            sim,
            [&s0](const State& s, std::uint32_t depth) {
                const int h = net_effect_size(s0, s);
                return h == 0 ? kInfiniteKey
                              : static_cast<std::int64_t>(depth) + h;
            },
            [](const State&) { return false; }, rep_budget);

        search.set_generate_hook([&](std::uint32_t node, const State& s, std::uint32_t depth) {
            if (capacity == 0) {
                return;
            }
            const int h = net_effect_size(s0, s);
            if (h == 0) {
                return;  // empty net effect scores infinity, never kept
            }
            Candidate cand{h, depth, offer_serial++, {}};
            const bool full = queue.size() == static_cast<std::size_t>(capacity);
            if (full && !(cand < queue.top())) {
                return;
            }
            // Only now is the summary needed; entering the queue is rare.
            cand.macro = sim.summarize(search.action_sequence(node));
            if (primitive_effects.count(effect_signature(cand.macro))) {
                return;
            }
            if (full) {
                queue.pop();
            }
            queue.push(std::move(cand));
        });

        search.run(s0);

        std::vector<Candidate> kept;
        kept.reserve(queue.size());
        while (!queue.empty()) {
            kept.push_back(queue.top());
            queue.pop();
        }
        std::sort(kept.begin(), kept.end());
        for (Candidate& cand : kept) {
            if (signatures.insert(macro_signature(cand.macro)).second) {
                lib.macros.push_back(std::move(cand.macro));
                lib.provenance.push_back({params.seed, rep, cand.h});
            }
        }
        lib.repetitions_completed = rep + 1;

        if (rep + 1 == params.repetitions) {
            break;
        }
        // Restart somewhere none of the saved macros can run, so later
        // repetitions explore states the current library does not cover.
        bool found = false;
        for (int attempt = 0; attempt < kRestartAttempts && !found; ++attempt) {
            State cand = sampler(rng);
            bool any = false;
            for (const Macro& m : lib.macros) {
                if (macro_applicable(m, cand)) {
                    any = true;
                    break;
                }
            }
            if (!any) {
                s0 = std::move(cand);
                found = true;
            }
        }
        if (!found) {
            lib.restart_exhausted = true;
            break;
        }
    }
    return lib;
}

MacroLibrary generate_random_macros(DomainSimulator& sim, std::span<const int> lengths,
                                    std::uint64_t seed) {
    if (!sim.macros().empty()) {
        throw std::invalid_argument("generate_random_macros: simulator already has macros attached");
    }
    MacroLibrary lib;
    lib.domain = sim.domain_name();
    lib.num_macros_requested = static_cast<int>(lengths.size());
    lib.repetitions = 1;
    lib.seed = seed;

    Rng rng(seed);
    std::vector<ActionId> acts;
    for (int length : lengths) {
        if (length < 1) {
            throw std::invalid_argument("generate_random_macros: lengths must be >= 1");
        }
        std::vector<ActionId> seq;
        for (int attempt = 0;; ++attempt) {
            if (attempt == 1000) {
                throw std::runtime_error(
                    "generate_random_macros: walks keep hitting dead ends");
            }
            seq.clear();
            State s = sim.random_state(rng);
            bool dead_end = false;
            for (int i = 0; i < length; ++i) {
                sim.applicable(s, acts);
                if (acts.empty()) {
                    dead_end = true;
                    break;
                }
                const ActionId a = acts[rng.below(acts.size())];
                seq.push_back(a);
                s = sim.step(s, a);
            }
            if (!dead_end) {
                break;
            }
        }
        lib.macros.push_back(sim.summarize(seq));
        lib.provenance.push_back({seed, 0, lib.macros.back().effect_size});
    }
    return lib;
}

std::vector<Macro> dedup_by_net_effect(std::vector<Macro> candidates) {
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Macro& a, const Macro& b) { return a.length() < b.length(); });
    std::unordered_set<std::string> seen;
    std::vector<Macro> out;
    for (auto& m : candidates) {
        if (seen.insert(macro_signature(m)).second) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

void write_macro_library(const MacroLibrary& lib, const DomainSimulator& sim, std::ostream& os) {
    os << "macros v1 domain=" << lib.domain << " N_M=" << lib.num_macros_requested
       << " R_M=" << lib.repetitions << " B_M=" << lib.budget << " seed=" << lib.seed << "\n";
    for (std::size_t i = 0; i < lib.macros.size(); ++i) {
        const Macro& m = lib.macros[i];
        os << i << " len=" << m.length() << " seq=";
        for (std::size_t j = 0; j < m.primitives.size(); ++j) {
            if (j) {
                os << ',';
            }
            os << sim.action_name(m.primitives[j]);
        }
        os << " effect_size=" << m.effect_size << " pre=" << sim.precondition_token(m) << "\n";
    }
}

MacroLibrary read_macro_library(const DomainSimulator& sim, std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) {
        throw std::runtime_error("macro library: missing header");
    }
    char domain_buf[128] = {0};
    int n_m = 0, r_m = 0;
    unsigned long long b_m = 0, seed = 0;
    if (std::sscanf(header.c_str(), "macros v1 domain=%127s N_M=%d R_M=%d B_M=%llu seed=%llu",
                    domain_buf, &n_m, &r_m, &b_m, &seed) != 5) {
        throw std::runtime_error("macro library: malformed header: " + header);
    }
    MacroLibrary lib;
    lib.domain = domain_buf;
    lib.num_macros_requested = n_m;
    lib.repetitions = r_m;
    lib.budget = b_m;
    lib.seed = seed;
    if (lib.domain != sim.domain_name()) {
        throw std::runtime_error("macro library: domain '" + lib.domain +
                                 "' does not match simulator '" + sim.domain_name() + "'");
    }

    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ss(line);
        std::string id_tok, len_tok, seq_tok, eff_tok, pre_tok;
        if (!(ss >> id_tok >> len_tok >> seq_tok >> eff_tok >> pre_tok)) {
            throw std::runtime_error("macro library: malformed record: " + line);
        }
        auto field = [&line](const std::string& tok, const char* key) {
            const std::string prefix = std::string(key) + "=";
            if (tok.rfind(prefix, 0) != 0) {
                throw std::runtime_error("macro library: expected " + prefix + " in: " + line);
            }
            return tok.substr(prefix.size());
        };
        const int len = std::stoi(field(len_tok, "len"));
        const int effect_size = std::stoi(field(eff_tok, "effect_size"));
        const std::string pre = field(pre_tok, "pre");

        std::vector<ActionId> seq;
        std::istringstream seq_ss(field(seq_tok, "seq"));
        std::string name;
        while (std::getline(seq_ss, name, ',')) {
            seq.push_back(sim.action_from_name(name));
        }
        if (static_cast<int>(seq.size()) != len) {
            throw std::runtime_error("macro library: record " + id_tok +
                                     ": len does not match sequence");
        }
        Macro m = sim.summarize(seq);
        if (m.effect_size != effect_size) {
            throw std::runtime_error("macro library: record " + id_tok +
                                     ": stored effect_size " + std::to_string(effect_size) +
                                     " does not match recomputed " + std::to_string(m.effect_size));
        }
        if (sim.precondition_token(m) != pre) {
            throw std::runtime_error("macro library: record " + id_tok +
                                     ": stored precondition does not match recomputed");
        }
        lib.macros.push_back(std::move(m));
    }
    return lib;
}

}  // namespace bbplan
