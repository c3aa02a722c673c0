#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bbplan/core.hpp"

namespace bbplan {

// Sliding-tile puzzle with a position-based encoding: variable 0 holds the
// blank's cell index and variable t (t >= 1) holds tile t's cell index, so a
// state is a permutation of 0..n*n-1. Each primitive move swaps the blank
// with one adjacent tile; on the 4x4 board there are 48 of them, of which
// 2-4 apply in any state. Macros compose into a single cell permutation and
// are applicable exactly when the blank sits on the recorded start cell.
class NPuzzleSimulator : public DomainSimulator {
public:
    explicit NPuzzleSimulator(int side = 4);

    struct Move {
        int from;  // blank's cell before the move
        int to;    // adjacent cell it swaps with
    };

    int side() const { return side_; }
    int num_cells() const { return side_ * side_; }
    const std::vector<Move>& moves() const { return moves_; }
    State solved_state() const;
    int blank_cell(const State& s) const { return s[0]; }

    std::size_t num_variables() const override { return num_cells(); }
    std::size_t num_primitives() const override { return moves_.size(); }

    Macro summarize(std::span<const ActionId> seq) const override;
    State random_state(Rng& rng) const override;
    std::string domain_name() const override;
    std::unique_ptr<DomainSimulator> clone() const override;
    State canonical_state() const override { return solved_state(); }
    Goal default_goal() const override { return Goal::from_state(solved_state()); }
    std::string precondition_token(const Macro& m) const override;

protected:
    State apply_primitive(const State& s, ActionId a) const override;
    void primitive_applicable(const State& s, std::vector<ActionId>& out) const override;
    bool primitive_is_applicable(const State& s, ActionId a) const override;
    std::string primitive_name(ActionId a) const override;
    ActionId primitive_from_name(const std::string& name) const override;

private:
    int side_;
    std::vector<Move> moves_;
    std::vector<std::vector<ActionId>> moves_from_cell_;  // indexed by blank cell
};

// 225 or 226 uniform random moves from the solved state, the count chosen by
// a fair coin so that the instance distribution covers every blank cell.
State scramble_puzzle(const NPuzzleSimulator& sim, std::uint64_t seed);

// Problem file: `npuzzle <side>x<side> seed=<int>` plus one line with the
// n*n variable values (blank position first, then tile positions).
void write_puzzle_instance(const NPuzzleSimulator& sim, const State& s, std::uint64_t seed,
                           std::ostream& os);
State read_puzzle_instance(const NPuzzleSimulator& sim, std::istream& is);

}  // namespace bbplan
