#include "bbplan/npuzzle.hpp"

#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bbplan {

NPuzzleSimulator::NPuzzleSimulator(int side) : side_(side) {
    if (side_ < 2 || side_ * side_ > 256) {
        throw std::invalid_argument("NPuzzleSimulator: side out of range");
    }
    const int cells = num_cells();
    moves_from_cell_.resize(cells);
    for (int from = 0; from < cells; ++from) {
        const int row = from / side_;
        const int col = from % side_;
        const int neighbors[4] = {from - side_, from - 1, from + 1, from + side_};
        const bool valid[4] = {row > 0, col > 0, col < side_ - 1, row < side_ - 1};
        for (int k = 0; k < 4; ++k) {
            if (valid[k]) {
                moves_from_cell_[from].push_back(static_cast<ActionId>(moves_.size()));
                moves_.push_back({from, neighbors[k]});
            }
        }
    }
}

State NPuzzleSimulator::solved_state() const {
    State s(num_cells());
    std::iota(s.begin(), s.end(), 0);
    return s;
}

State NPuzzleSimulator::apply_primitive(const State& s, ActionId a) const {
    const Move& mv = moves_[a];
    // Swap the occupants of the two cells, expressed on position values.
    State out = s;
    for (auto& v : out) {
        if (v == mv.from) {
            v = static_cast<Value>(mv.to);
        } else if (v == mv.to) {
            v = static_cast<Value>(mv.from);
        }
    }
    return out;
}

void NPuzzleSimulator::primitive_applicable(const State& s, std::vector<ActionId>& out) const {
    for (ActionId a : moves_from_cell_[s[0]]) {
        out.push_back(a);
    }
}

bool NPuzzleSimulator::primitive_is_applicable(const State& s, ActionId a) const {
    return a < moves_.size() && moves_[a].from == s[0];
}

std::string NPuzzleSimulator::primitive_name(ActionId a) const {
    return "mv" + std::to_string(moves_[a].from) + "-" + std::to_string(moves_[a].to);
}

ActionId NPuzzleSimulator::primitive_from_name(const std::string& name) const {
    int from = 0, to = 0;
    if (std::sscanf(name.c_str(), "mv%d-%d", &from, &to) == 2) {
        for (ActionId a : moves_from_cell_[from]) {
            if (moves_[a].to == to) {
                return a;
            }
        }
    }
    throw std::invalid_argument("npuzzle: unknown action name " + name);
}

Macro NPuzzleSimulator::summarize(std::span<const ActionId> seq) const {
    if (seq.empty()) {
        throw std::invalid_argument("summarize: empty sequence");
    }
    const int cells = num_cells();
    ValuePermutation effect;
    effect.map.resize(cells);
    std::iota(effect.map.begin(), effect.map.end(), 0);

    // The blank walks along the move chain, so each move's start cell must be
    // the previous move's target cell.
    int blank = moves_[seq.front()].from;
    const int required_blank = blank;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] >= moves_.size()) {
            throw std::invalid_argument("summarize: invalid action id");
        }
        const Move& mv = moves_[seq[i]];
        if (mv.from != blank) {
            throw std::invalid_argument("summarize: sequence breaks the blank chain at position " +
                                        std::to_string(i));
        }
        for (auto& v : effect.map) {
            if (v == mv.from) {
                v = static_cast<Value>(mv.to);
            } else if (v == mv.to) {
                v = static_cast<Value>(mv.from);
            }
        }
        blank = mv.to;
    }

    Macro m;
    m.primitives.assign(seq.begin(), seq.end());
    m.precondition = {{0, static_cast<Value>(required_blank)}};
    int displaced = 0;
    for (int c = 0; c < cells; ++c) {
        displaced += effect.map[c] != c;
    }
    m.effect_size = displaced;
    m.effect = std::move(effect);
    return m;
}

State NPuzzleSimulator::random_state(Rng& rng) const {
    // Uniform permutation of cell indices; a valid puzzle state regardless of
    // parity, which is all that macro construction requires.
    State s = solved_state();
    for (int i = num_cells() - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(i + 1));
        std::swap(s[i], s[j]);
    }
    return s;
}

std::string NPuzzleSimulator::domain_name() const {
    return side_ == 4 ? "npuzzle" : "npuzzle" + std::to_string(side_);
}

std::unique_ptr<DomainSimulator> NPuzzleSimulator::clone() const {
    return std::make_unique<NPuzzleSimulator>(*this);
}

std::string NPuzzleSimulator::precondition_token(const Macro& m) const {
    if (m.precondition.size() != 1 || m.precondition[0].first != 0) {
        return DomainSimulator::precondition_token(m);
    }
    return "blank" + std::to_string(m.precondition[0].second);
}

State scramble_puzzle(const NPuzzleSimulator& sim, std::uint64_t seed) {
    Rng rng(seed);
    const int steps = 225 + (rng.coin() ? 1 : 0);
    auto walker = sim.clone();
    return random_walk(*walker, sim.solved_state(), steps, rng);
}

void write_puzzle_instance(const NPuzzleSimulator& sim, const State& s, std::uint64_t seed,
                           std::ostream& os) {
    os << "npuzzle " << sim.side() << "x" << sim.side() << " seed=" << seed << "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? " " : "") << static_cast<int>(s[i]);
    }
    os << "\n";
}

State read_puzzle_instance(const NPuzzleSimulator& sim, std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) {
        throw std::runtime_error("read_puzzle_instance: missing header");
    }
    int a = 0, b = 0;
    unsigned long long seed = 0;
    if (std::sscanf(header.c_str(), "npuzzle %dx%d seed=%llu", &a, &b, &seed) != 3 ||
        a != sim.side() || b != sim.side()) {
        throw std::runtime_error("read_puzzle_instance: malformed header: " + header);
    }
    State s(sim.num_cells());
    std::string line;
    if (!std::getline(is, line)) {
        throw std::runtime_error("read_puzzle_instance: missing state line");
    }
    std::istringstream ss(line);
    std::vector<bool> used(sim.num_cells(), false);
    for (auto& v : s) {
        int x = 0;
        if (!(ss >> x) || x < 0 || x >= sim.num_cells() || used[x]) {
            throw std::runtime_error("read_puzzle_instance: state is not a permutation");
        }
        used[x] = true;
        v = static_cast<Value>(x);
    }
    return s;
}

}  // namespace bbplan
