#include "bbplan/suitcase.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace bbplan {

SuitcaseLock::SuitcaseLock(int num_dials, int modulus, int mean_effect, std::uint64_t seed,
                           std::vector<std::vector<Value>> inc_matrix)
    : num_dials_(num_dials),
      modulus_(modulus),
      mean_effect_(mean_effect),
      seed_(seed),
      inc_matrix_(std::move(inc_matrix)) {
    if (num_dials_ < 1 || modulus_ < 2 || modulus_ > 255) {
        throw std::invalid_argument("SuitcaseLock: need N >= 1 and 2 <= M <= 255");
    }
    if (inc_matrix_.size() != static_cast<std::size_t>(num_dials_)) {
        throw std::invalid_argument("SuitcaseLock: matrix must be N x N");
    }
    deltas_.reserve(num_primitives());
    for (const auto& row : inc_matrix_) {
        if (row.size() != static_cast<std::size_t>(num_dials_)) {
            throw std::invalid_argument("SuitcaseLock: matrix must be N x N");
        }
        deltas_.push_back(row);
    }
    if (modulus_ > 2) {
        // Decrements are the exact negations of the increments.
        for (const auto& row : inc_matrix_) {
            std::vector<Value> neg(row.size());
            for (std::size_t i = 0; i < row.size(); ++i) {
                neg[i] = static_cast<Value>(row[i] ? modulus_ - 1 : 0);
            }
            deltas_.push_back(std::move(neg));
        }
    }
}

std::size_t SuitcaseLock::num_primitives() const {
    return modulus_ == 2 ? num_dials_ : 2 * static_cast<std::size_t>(num_dials_);
}

State SuitcaseLock::apply_primitive(const State& s, ActionId a) const {
    const std::vector<Value>& delta = deltas_[a];
    State out = s;
    for (int i = 0; i < num_dials_; ++i) {
        out[i] = static_cast<Value>((out[i] + delta[i]) % modulus_);
    }
    return out;
}

void SuitcaseLock::primitive_applicable(const State&, std::vector<ActionId>& out) const {
    for (ActionId a = 0; a < num_primitives(); ++a) {
        out.push_back(a);
    }
}

std::string SuitcaseLock::primitive_name(ActionId a) const {
    const int n = num_dials_;
    if (a < static_cast<ActionId>(n)) {
        return "inc" + std::to_string(a);
    }
    return "dec" + std::to_string(a - n);
}

ActionId SuitcaseLock::primitive_from_name(const std::string& name) const {
    if (name.rfind("inc", 0) == 0) {
        return static_cast<ActionId>(std::stoul(name.substr(3)));
    }
    if (name.rfind("dec", 0) == 0 && modulus_ > 2) {
        return static_cast<ActionId>(num_dials_ + std::stoul(name.substr(3)));
    }
    throw std::invalid_argument("suitcase: unknown action name " + name);
}

Macro SuitcaseLock::summarize(std::span<const ActionId> seq) const {
    if (seq.empty()) {
        throw std::invalid_argument("summarize: empty sequence");
    }
    ModularDelta effect;
    effect.modulus = modulus_;
    effect.delta.assign(num_dials_, 0);
    for (ActionId a : seq) {
        if (a >= num_primitives()) {
            throw std::invalid_argument("summarize: invalid action id");
        }
        for (int i = 0; i < num_dials_; ++i) {
            effect.delta[i] = static_cast<Value>((effect.delta[i] + deltas_[a][i]) % modulus_);
        }
    }
    Macro m;
    m.primitives.assign(seq.begin(), seq.end());
    m.effect_size = static_cast<int>(std::count_if(effect.delta.begin(), effect.delta.end(),
                                                   [](Value v) { return v != 0; }));
    m.effect = std::move(effect);
    return m;
}

State SuitcaseLock::random_state(Rng& rng) const {
    State s(num_dials_);
    for (auto& v : s) {
        v = static_cast<Value>(rng.below(modulus_));
    }
    return s;
}

std::unique_ptr<DomainSimulator> SuitcaseLock::clone() const {
    return std::make_unique<SuitcaseLock>(*this);
}

std::uint64_t SuitcaseLock::num_states() const {
    std::uint64_t n = 1;
    for (int i = 0; i < num_dials_; ++i) {
        n *= modulus_;
    }
    return n;
}

State SuitcaseLock::decode_state(std::uint64_t code) const {
    State s(num_dials_);
    for (int i = 0; i < num_dials_; ++i) {
        s[i] = static_cast<Value>(code % modulus_);
        code /= modulus_;
    }
    return s;
}

std::uint64_t SuitcaseLock::encode_state(const State& s) const {
    std::uint64_t code = 0;
    for (int i = num_dials_ - 1; i >= 0; --i) {
        code = code * modulus_ + s[i];
    }
    return code;
}

int gf2_rank(const std::vector<std::vector<Value>>& matrix) {
    const std::size_t n = matrix.size();
    std::vector<std::uint64_t> rows(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n || n > 64) {
            throw std::invalid_argument("gf2_rank: need a square matrix with N <= 64");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (matrix[i][j] & 1) {
                rows[i] |= 1ull << j;
            }
        }
    }
    int rank = 0;
    for (std::size_t col = 0; col < n; ++col) {
        const std::uint64_t bit = 1ull << col;
        std::size_t pivot = rank;
        while (pivot < n && !(rows[pivot] & bit)) {
            ++pivot;
        }
        if (pivot == n) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != static_cast<std::size_t>(rank) && (rows[i] & bit)) {
                rows[i] ^= rows[rank];
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<Value> random_row(int n, int weight, Rng& rng) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    // Partial Fisher-Yates: the first `weight` entries end up random.
    for (int i = 0; i < weight; ++i) {
        const int j = i + static_cast<int>(rng.below(n - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<Value> row(n, 0);
    for (int i = 0; i < weight; ++i) {
        row[idx[i]] = 1;
    }
    return row;
}

}  // namespace

SuitcaseLock generate_lock(int num_dials, int modulus, int k_bar, std::uint64_t seed) {
    const int n = num_dials;
    if (k_bar < 1 || k_bar > n - 1) {
        throw std::invalid_argument("generate_lock: need 1 <= k_bar <= N-1");
    }
    std::vector<std::vector<Value>> matrix(n, std::vector<Value>(n, 0));
    if (k_bar == 1) {
        for (int i = 0; i < n; ++i) {
            matrix[i][i] = 1;
        }
        return SuitcaseLock(n, modulus, k_bar, seed, std::move(matrix));
    }
    if (k_bar == n - 1) {
        // Complement of the identity, with an extra 1 in the top-left corner
        // to break symmetry (and restore full rank for odd N).
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                matrix[i][j] = i == j ? 0 : 1;
            }
        }
        matrix[0][0] = 1;
        return SuitcaseLock(n, modulus, k_bar, seed, std::move(matrix));
    }

    Rng rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        // Random row weights with the total pinned to k_bar * N, so the mean
        // stays exact while individual rows vary. (Constant weight k_bar
        // cannot work for even k_bar: all-even-weight rows span at most the
        // even-weight subspace.)
        std::vector<int> weights(n, k_bar);
        for (int step = 0; step < 3 * n; ++step) {
            const int i = static_cast<int>(rng.below(n));
            const int j = static_cast<int>(rng.below(n));
            if (weights[i] > 1 && weights[j] < n - 1) {
                --weights[i];
                ++weights[j];
            }
        }
        for (int i = 0; i < n; ++i) {
            matrix[i] = random_row(n, weights[i], rng);
        }
        if (gf2_rank(matrix) == n) {
            return SuitcaseLock(n, modulus, k_bar, seed, std::move(matrix));
        }
    }
    throw std::runtime_error("generate_lock: no full-rank matrix in 10000 draws");
}

DistanceTable all_pairs_distances(const SuitcaseLock& lock) {
    const std::uint64_t n = lock.num_states();
    if (n > 4096) {
        throw std::runtime_error("all_pairs_distances: state space too large to tabulate");
    }
    std::vector<std::uint16_t> table(n * n, std::numeric_limits<std::uint16_t>::max());
    const std::size_t num_actions = lock.num_primitives();
    // Precompute the successor codes of each action once, then BFS over codes.
    std::vector<std::vector<std::uint32_t>> succ(n, std::vector<std::uint32_t>(num_actions));
    auto probe = lock.clone();
    for (std::uint64_t code = 0; code < n; ++code) {
        const State s = lock.decode_state(code);
        for (ActionId a = 0; a < num_actions; ++a) {
            succ[code][a] = static_cast<std::uint32_t>(lock.encode_state(probe->step(s, a)));
        }
    }
    std::deque<std::uint32_t> queue;
    for (std::uint64_t from = 0; from < n; ++from) {
        std::uint16_t* dist = table.data() + from * n;
        dist[from] = 0;
        queue.clear();
        queue.push_back(static_cast<std::uint32_t>(from));
        while (!queue.empty()) {
            const std::uint32_t cur = queue.front();
            queue.pop_front();
            for (std::uint32_t nxt : succ[cur]) {
                if (dist[nxt] == std::numeric_limits<std::uint16_t>::max()) {
                    dist[nxt] = static_cast<std::uint16_t>(dist[cur] + 1);
                    queue.push_back(nxt);
                }
            }
        }
    }
    return DistanceTable(n, std::move(table));
}

std::uint64_t reachable_count(const SuitcaseLock& lock, const State& start) {
    const std::uint64_t n = lock.num_states();
    if (n > (1ull << 20)) {
        throw std::runtime_error("reachable_count: state space too large to enumerate");
    }
    std::vector<bool> seen(n, false);
    std::deque<std::uint64_t> queue;
    const std::uint64_t s0 = lock.encode_state(start);
    seen[s0] = true;
    queue.push_back(s0);
    std::uint64_t count = 1;
    auto probe = lock.clone();
    const std::size_t num_actions = lock.num_primitives();
    while (!queue.empty()) {
        const State s = lock.decode_state(queue.front());
        queue.pop_front();
        for (ActionId a = 0; a < num_actions; ++a) {
            const std::uint64_t nxt = lock.encode_state(probe->step(s, a));
            if (!seen[nxt]) {
                seen[nxt] = true;
                ++count;
                queue.push_back(nxt);
            }
        }
    }
    return count;
}

void write_lock(const SuitcaseLock& lock, std::ostream& os) {
    os << "suitcase N=" << lock.num_dials() << " M=" << lock.modulus()
       << " kbar=" << lock.mean_effect() << " seed=" << lock.seed() << "\n";
    for (const auto& row : lock.inc_matrix()) {
        for (Value v : row) {
            os << static_cast<int>(v);
        }
        os << "\n";
    }
}

SuitcaseLock read_lock(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) {
        throw std::runtime_error("read_lock: missing header");
    }
    int n = 0, m = 0, kbar = 0;
    unsigned long long seed = 0;
    if (std::sscanf(header.c_str(), "suitcase N=%d M=%d kbar=%d seed=%llu", &n, &m, &kbar, &seed) != 4) {
        throw std::runtime_error("read_lock: malformed header: " + header);
    }
    std::vector<std::vector<Value>> matrix;
    std::string line;
    for (int i = 0; i < n; ++i) {
        if (!std::getline(is, line) || static_cast<int>(line.size()) < n) {
            throw std::runtime_error("read_lock: missing matrix row " + std::to_string(i));
        }
        std::vector<Value> row(n);
        for (int j = 0; j < n; ++j) {
            if (line[j] != '0' && line[j] != '1') {
                throw std::runtime_error("read_lock: bad bit in row " + std::to_string(i));
            }
            row[j] = line[j] == '1';
        }
        matrix.push_back(std::move(row));
    }
    return SuitcaseLock(n, m, kbar, seed, std::move(matrix));
}

}  // namespace bbplan
