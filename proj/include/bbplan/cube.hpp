#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bbplan/core.hpp"

namespace bbplan {

// 3x3x3 cube on a 48-sticker permutation representation: variable i holds the
// current position of sticker i, the six face centers are fixed and excluded.
// Faces are ordered U, D, L, R, F, B; within a face, stickers are row-major
// as seen from outside the cube, skipping the center. The 12 primitive
// actions are the quarter-turns U U' D D' L L' R R' F F' B B', each encoded
// as a permutation of the 48 position indices that displaces exactly 20 of
// them. No action or macro has a precondition.
class CubeSimulator : public DomainSimulator {
public:
    CubeSimulator();

    static constexpr int kNumStickers = 48;
    static constexpr int kNumMoves = 12;

    State solved_state() const;

    // Overall position permutation of a move sequence (applied left to right).
    ValuePermutation compose(std::span<const ActionId> seq) const;

    // Position permutation of one primitive move.
    const std::vector<Value>& move_permutation(ActionId a) const;

    // Cubie (corner or edge) that owns a position index; positions with the
    // same cubie id always travel together.
    int cubie_of_position(int pos) const;
    bool is_corner_position(int pos) const;

    std::size_t num_variables() const override { return kNumStickers; }
    std::size_t num_primitives() const override { return kNumMoves; }

    Macro summarize(std::span<const ActionId> seq) const override;
    State random_state(Rng& rng) const override;
    State canonical_state() const override { return solved_state(); }
    Goal default_goal() const override { return Goal::from_state(solved_state()); }
    std::string domain_name() const override { return "cube"; }
    std::unique_ptr<DomainSimulator> clone() const override;

protected:
    State apply_primitive(const State& s, ActionId a) const override;
    void primitive_applicable(const State&, std::vector<ActionId>& out) const override;
    bool primitive_is_applicable(const State&, ActionId a) const override {
        return a < kNumMoves;
    }
    std::string primitive_name(ActionId a) const override;
    ActionId primitive_from_name(const std::string& name) const override;
};

// Parses a whitespace-separated move sequence in standard cube notation.
std::vector<ActionId> parse_cube_moves(const CubeSimulator& sim, const std::string& text);
std::string format_cube_moves(const CubeSimulator& sim, std::span<const ActionId> seq);

// The six expert macro sequences (speedcubing "algorithms") used as the
// reference macro set, in standard notation.
const std::vector<std::string>& expert_base_sequences();

// All 96 variations of a base sequence: 24 whole-cube orientations (applied
// as face relabelings) x optional left-right mirror x optional sequence
// inverse. Coinciding variants are kept as distinct entries.
std::vector<std::vector<ActionId>> expand_expert_variants(const CubeSimulator& sim,
                                                          std::span<const ActionId> base);

// The full 6 x 96 = 576 expert macro catalog.
std::vector<Macro> expert_macro_catalog(const CubeSimulator& sim);

// `steps` uniform random quarter-turns from the solved state.
State scramble_cube(const CubeSimulator& sim, int steps, std::uint64_t seed);

// Scramble file: `cube seed=<int> steps=<int>` plus one line of move tokens.
void write_cube_scramble(const CubeSimulator& sim, std::span<const ActionId> seq,
                         std::uint64_t seed, std::ostream& os);
std::vector<ActionId> read_cube_scramble(const CubeSimulator& sim, std::istream& is);

}  // namespace bbplan
