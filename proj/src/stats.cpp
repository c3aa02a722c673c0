#include "bbplan/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bbplan {

namespace {

double clamp_rho(double r) {
    return std::min(1.0, std::max(-1.0, r));
}

// Weighted sample moments with per-cell values (x[i], y[i], w[i]).
double weighted_pearson(std::span<const double> xs, std::span<const double> ys,
                        std::span<const double> ws) {
    double n = 0, sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double w = ws[i];
        n += w;
        sx += w * xs[i];
        sy += w * ys[i];
        sxx += w * xs[i] * xs[i];
        syy += w * ys[i] * ys[i];
        sxy += w * xs[i] * ys[i];
    }
    const double vx = n * sxx - sx * sx;
    const double vy = n * syy - sy * sy;
    if (vx <= 0.0 || vy <= 0.0) {
        return 0.0;
    }
    return clamp_rho((n * sxy - sx * sy) / std::sqrt(vx * vy));
}

struct Cell {
    std::uint64_t x, y, w;
};

std::vector<Cell> nonzero_cells(const JointCounts& counts) {
    std::vector<Cell> cells;
    for (std::size_t x = 0; x < counts.size(); ++x) {
        for (std::size_t y = 0; y < counts[x].size(); ++y) {
            if (counts[x][y] > 0) {
                cells.push_back({x, y, counts[x][y]});
            }
        }
    }
    return cells;
}

// All mass on one exact line y = y0 + b (x - x0)? Checked with integer
// cross-multiplication, so the +/-1 answers carry no rounding error.
int exact_linear_sign(const std::vector<Cell>& cells) {
    const auto& c0 = cells.front();
    const Cell* c1 = nullptr;
    for (const auto& c : cells) {
        if (c.x != c0.x) {
            c1 = &c;
            break;
        }
    }
    if (c1 == nullptr) {
        return 0;  // zero x-variance
    }
    const std::int64_t dx = static_cast<std::int64_t>(c1->x) - static_cast<std::int64_t>(c0.x);
    const std::int64_t dy = static_cast<std::int64_t>(c1->y) - static_cast<std::int64_t>(c0.y);
    if (dy == 0) {
        return 0;  // would need zero y-variance to be linear
    }
    for (const auto& c : cells) {
        const std::int64_t ex = static_cast<std::int64_t>(c.x) - static_cast<std::int64_t>(c0.x);
        const std::int64_t ey = static_cast<std::int64_t>(c.y) - static_cast<std::int64_t>(c0.y);
        if (ey * dx != ex * dy) {
            return 2;  // not linear
        }
    }
    return dy * dx > 0 ? 1 : -1;
}

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("pearson: length mismatch");
    }
    if (xs.empty()) {
        throw std::invalid_argument("pearson: empty input");
    }
    std::vector<double> ws(xs.size(), 1.0);
    return weighted_pearson(xs, ys, ws);
}

std::vector<double> average_ranks(std::span<const double> xs) {
    const std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) {
            ++j;
        }
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = rank;
        }
        i = j + 1;
    }
    return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("spearman: length mismatch");
    }
    if (xs.empty()) {
        throw std::invalid_argument("spearman: empty input");
    }
    const std::vector<double> rx = average_ranks(xs);
    const std::vector<double> ry = average_ranks(ys);
    return pearson(rx, ry);
}

double pearson_counts(const JointCounts& counts) {
    const std::vector<Cell> cells = nonzero_cells(counts);
    if (cells.empty()) {
        throw std::invalid_argument("pearson_counts: no samples");
    }
    const int sign = exact_linear_sign(cells);
    if (sign == 1 || sign == -1) {
        return sign;
    }
    std::vector<double> xs, ys, ws;
    xs.reserve(cells.size());
    for (const auto& c : cells) {
        xs.push_back(static_cast<double>(c.x));
        ys.push_back(static_cast<double>(c.y));
        ws.push_back(static_cast<double>(c.w));
    }
    return weighted_pearson(xs, ys, ws);
}

double spearman_counts(const JointCounts& counts) {
    const std::vector<Cell> cells = nonzero_cells(counts);
    if (cells.empty()) {
        throw std::invalid_argument("spearman_counts: no samples");
    }
    std::size_t max_x = 0, max_y = 0;
    std::uint64_t total = 0;
    for (const auto& c : cells) {
        max_x = std::max(max_x, static_cast<std::size_t>(c.x));
        max_y = std::max(max_y, static_cast<std::size_t>(c.y));
        total += c.w;
    }
    // Average rank of each marginal value: ranks before it, plus half the tie
    // block, 1-based.
    std::vector<std::uint64_t> cx(max_x + 1, 0), cy(max_y + 1, 0);
    for (const auto& c : cells) {
        cx[c.x] += c.w;
        cy[c.y] += c.w;
    }
    std::vector<double> rank_x(max_x + 1), rank_y(max_y + 1);
    std::uint64_t before = 0;
    for (std::size_t v = 0; v <= max_x; ++v) {
        rank_x[v] = static_cast<double>(before) + (static_cast<double>(cx[v]) + 1.0) / 2.0;
        before += cx[v];
    }
    before = 0;
    for (std::size_t v = 0; v <= max_y; ++v) {
        rank_y[v] = static_cast<double>(before) + (static_cast<double>(cy[v]) + 1.0) / 2.0;
        before += cy[v];
    }

    bool has_x_var = false, has_y_var = false;
    for (const auto& c : cells) {
        has_x_var |= c.x != cells.front().x;
        has_y_var |= c.y != cells.front().y;
    }
    if (!has_x_var || !has_y_var) {
        return 0.0;
    }

    // Perfectly monotone with matched tie blocks => ranks coincide cell-wise.
    bool perfect_inc = true, perfect_dec = true;
    for (const auto& c : cells) {
        perfect_inc &= rank_x[c.x] == rank_y[c.y];
        perfect_dec &= rank_x[c.x] == static_cast<double>(total) + 1.0 - rank_y[c.y];
    }
    if (perfect_inc) {
        return 1.0;
    }
    if (perfect_dec) {
        return -1.0;
    }

    std::vector<double> xs, ys, ws;
    xs.reserve(cells.size());
    for (const auto& c : cells) {
        xs.push_back(rank_x[c.x]);
        ys.push_back(rank_y[c.y]);
        ws.push_back(static_cast<double>(c.w));
    }
    return weighted_pearson(xs, ys, ws);
}

}  // namespace bbplan
