#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bbplan/core.hpp"

namespace bbplan {

// Synthetic lock with N dials of M digits. Action i adds row i of a binary
// increment matrix to the dials (mod M); for M > 2 each increment has a
// matching decrement. The matrix has full rank over GF(2), which guarantees
// every state is reachable from every other state.
class SuitcaseLock : public DomainSimulator {
public:
    SuitcaseLock(int num_dials, int modulus, int mean_effect, std::uint64_t seed,
                 std::vector<std::vector<Value>> inc_matrix);

    int num_dials() const { return num_dials_; }
    int modulus() const { return modulus_; }
    int mean_effect() const { return mean_effect_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<std::vector<Value>>& inc_matrix() const { return inc_matrix_; }

    std::size_t num_variables() const override { return num_dials_; }
    // N increment actions; the decrements are omitted for M = 2 where they
    // would coincide with the increments.
    std::size_t num_primitives() const override;

    Macro summarize(std::span<const ActionId> seq) const override;
    State random_state(Rng& rng) const override;
    State canonical_state() const override { return State(num_dials_, 0); }
    Goal default_goal() const override { return Goal::from_state(canonical_state()); }
    std::string domain_name() const override { return "suitcase"; }
    std::unique_ptr<DomainSimulator> clone() const override;

    std::uint64_t num_states() const;
    State decode_state(std::uint64_t code) const;
    std::uint64_t encode_state(const State& s) const;

protected:
    State apply_primitive(const State& s, ActionId a) const override;
    void primitive_applicable(const State& s, std::vector<ActionId>& out) const override;
    bool primitive_is_applicable(const State&, ActionId a) const override {
        return a < num_primitives();
    }
    std::string primitive_name(ActionId a) const override;
    ActionId primitive_from_name(const std::string& name) const override;

private:
    int num_dials_;
    int modulus_;
    int mean_effect_;
    std::uint64_t seed_;
    std::vector<std::vector<Value>> inc_matrix_;
    std::vector<std::vector<Value>> deltas_;  // per action, increments then decrements
};

// Rank of a square binary matrix over GF(2).
int gf2_rank(const std::vector<std::vector<Value>>& matrix);

// Builds a lock whose rows have mean weight k_bar and whose matrix has full
// GF(2) rank. k_bar = 1 always yields the identity matrix; k_bar = N-1 yields
// the complement of the identity with an extra 1 in the top-left corner.
// Other k_bar values are rejection-sampled; if no full-rank matrix turns up
// in 10,000 draws, throws.
//
// Rows of even weight are orthogonal to the all-ones vector over GF(2), so a
// matrix whose rows ALL have even weight can never reach full rank. For even
// k_bar the sampler therefore gives two rows weights k_bar-1 and k_bar+1,
// keeping the mean exact while making full rank possible.
SuitcaseLock generate_lock(int num_dials, int modulus, int k_bar, std::uint64_t seed);

// Shortest-path distances between all pairs of states, by BFS from every
// state. Refuses domains with more than 4096 states (the table is quadratic).
class DistanceTable {
public:
    DistanceTable(std::uint64_t num_states, std::vector<std::uint16_t> data)
        : num_states_(num_states), data_(std::move(data)) {}
    std::uint16_t distance(std::uint64_t from, std::uint64_t to) const {
        return data_[from * num_states_ + to];
    }
    std::uint64_t num_states() const { return num_states_; }

private:
    std::uint64_t num_states_;
    std::vector<std::uint16_t> data_;
};

DistanceTable all_pairs_distances(const SuitcaseLock& lock);

// Number of states reachable from `start` (exhaustive BFS; caps at 2^20
// states).
std::uint64_t reachable_count(const SuitcaseLock& lock, const State& start);

// Lock instance file: header `suitcase N=<> M=<> kbar=<> seed=<>`, then N
// rows of N bits.
void write_lock(const SuitcaseLock& lock, std::ostream& os);
SuitcaseLock read_lock(std::istream& is);

}  // namespace bbplan
