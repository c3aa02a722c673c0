#include "bbplan/cube.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstring>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bbplan {

namespace {

struct Vec3 {
    int x, y, z;
    bool operator==(const Vec3&) const = default;
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator*(int k) const { return {x * k, y * k, z * k}; }
};

int dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// 90-degree rotation about `axis`, clockwise as seen looking down the axis
// from outside (i.e. looking along -axis). The counter-clockwise turn is its
// inverse.
Vec3 rotate_cw(const Vec3& v, const Vec3& axis) {
    return axis * dot(v, axis) + (cross(axis, v) * -1);
}

Vec3 rotate_ccw(const Vec3& v, const Vec3& axis) {
    return axis * dot(v, axis) + cross(axis, v);
}

// Face order U, D, L, R, F, B with a fixed right/down basis per face, as seen
// from outside; this pins the row-major sticker numbering.
struct FaceBasis {
    Vec3 normal, right, down;
};

constexpr int kFaceCount = 6;

const std::array<FaceBasis, kFaceCount>& face_bases() {
    static const std::array<FaceBasis, kFaceCount> bases = {{
        {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},    // U
        {{0, -1, 0}, {1, 0, 0}, {0, 0, -1}},  // D
        {{-1, 0, 0}, {0, 0, 1}, {0, -1, 0}},  // L
        {{1, 0, 0}, {0, 0, -1}, {0, -1, 0}},  // R
        {{0, 0, 1}, {1, 0, 0}, {0, -1, 0}},   // F
        {{0, 0, -1}, {-1, 0, 0}, {0, -1, 0}}, // B
    }};
    return bases;
}

const char* const kFaceNames = "UDLRFB";

struct Facelet {
    Vec3 normal;
    Vec3 offset;  // orthogonal to normal, components in {-1, 0, 1}
};

// Sticker index <-> geometric facelet.
Facelet facelet_of_index(int idx) {
    const int face = idx / 8;
    int local = idx % 8;
    if (local >= 4) {
        ++local;  // reinsert the skipped center
    }
    const int row = local / 3;
    const int col = local % 3;
    const FaceBasis& b = face_bases()[face];
    return {b.normal, b.right * (col - 1) + b.down * (row - 1)};
}

int index_of_facelet(const Facelet& f) {
    for (int face = 0; face < kFaceCount; ++face) {
        const FaceBasis& b = face_bases()[face];
        if (b.normal == f.normal) {
            const int col = dot(f.offset, b.right) + 1;
            const int row = dot(f.offset, b.down) + 1;
            int local = row * 3 + col;
            if (local == 4) {
                throw std::logic_error("cube: face center has no sticker index");
            }
            if (local > 4) {
                --local;
            }
            return face * 8 + local;
        }
    }
    throw std::logic_error("cube: facelet normal matches no face");
}

// Position permutation of one quarter-turn: the content of position p moves
// to map[p]. A turn of face f rotates every facelet whose cubie lies in the
// face's layer; that is the face's own 8 stickers plus the 12 around the rim.
std::vector<Value> build_move_map(int face, bool prime) {
    const Vec3 axis = face_bases()[face].normal;
    std::vector<Value> map(CubeSimulator::kNumStickers);
    for (int p = 0; p < CubeSimulator::kNumStickers; ++p) {
        const Facelet f = facelet_of_index(p);
        const Vec3 cubie = f.normal + f.offset;
        if (dot(cubie, axis) == 1) {
            const Facelet moved = {prime ? rotate_ccw(f.normal, axis) : rotate_cw(f.normal, axis),
                                   prime ? rotate_ccw(f.offset, axis) : rotate_cw(f.offset, axis)};
            map[p] = static_cast<Value>(index_of_facelet(moved));
        } else {
            map[p] = static_cast<Value>(p);
        }
    }
    return map;
}

const std::vector<std::vector<Value>>& move_maps() {
    static const std::vector<std::vector<Value>> maps = [] {
        std::vector<std::vector<Value>> m;
        for (int face = 0; face < kFaceCount; ++face) {
            m.push_back(build_move_map(face, false));
            m.push_back(build_move_map(face, true));
        }
        return m;
    }();
    return maps;
}

// Whole-cube rotations as permutations of the six face indices, sorted for a
// deterministic variant order; the identity sorts first.
using FacePerm = std::array<int, kFaceCount>;

FacePerm face_perm_of_rotation(const Vec3& axis, bool prime) {
    FacePerm perm{};
    for (int f = 0; f < kFaceCount; ++f) {
        const Vec3 n = prime ? rotate_ccw(face_bases()[f].normal, axis)
                             : rotate_cw(face_bases()[f].normal, axis);
        for (int g = 0; g < kFaceCount; ++g) {
            if (face_bases()[g].normal == n) {
                perm[f] = g;
                break;
            }
        }
    }
    return perm;
}

const std::vector<FacePerm>& orientation_group() {
    static const std::vector<FacePerm> group = [] {
        std::vector<FacePerm> gens;
        for (const Vec3 axis : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) {
            gens.push_back(face_perm_of_rotation(axis, false));
        }
        FacePerm identity{};
        std::iota(identity.begin(), identity.end(), 0);
        std::vector<FacePerm> closure = {identity};
        for (std::size_t i = 0; i < closure.size(); ++i) {
            for (const FacePerm& g : gens) {
                FacePerm next{};
                for (int f = 0; f < kFaceCount; ++f) {
                    next[f] = g[closure[i][f]];
                }
                if (std::find(closure.begin(), closure.end(), next) == closure.end()) {
                    closure.push_back(next);
                }
            }
        }
        std::sort(closure.begin(), closure.end());
        return closure;
    }();
    return group;
}

}  // namespace

CubeSimulator::CubeSimulator() {
    move_maps();  // build the shared tables up front
}

State CubeSimulator::solved_state() const {
    State s(kNumStickers);
    std::iota(s.begin(), s.end(), 0);
    return s;
}

const std::vector<Value>& CubeSimulator::move_permutation(ActionId a) const {
    return move_maps()[a];
}

State CubeSimulator::apply_primitive(const State& s, ActionId a) const {
    const std::vector<Value>& map = move_maps()[a];
    State out = s;
    for (auto& v : out) {
        v = map[v];
    }
    return out;
}

void CubeSimulator::primitive_applicable(const State&, std::vector<ActionId>& out) const {
    for (ActionId a = 0; a < kNumMoves; ++a) {
        out.push_back(a);
    }
}

std::string CubeSimulator::primitive_name(ActionId a) const {
    std::string name(1, kFaceNames[a / 2]);
    if (a % 2) {
        name += '\'';
    }
    return name;
}

ActionId CubeSimulator::primitive_from_name(const std::string& name) const {
    if (!name.empty()) {
        const char* pos = std::strchr(kFaceNames, name[0]);
        if (pos != nullptr) {
            const int face = static_cast<int>(pos - kFaceNames);
            if (name.size() == 1) {
                return static_cast<ActionId>(face * 2);
            }
            if (name.size() == 2 && name[1] == '\'') {
                return static_cast<ActionId>(face * 2 + 1);
            }
        }
    }
    throw std::invalid_argument("cube: unknown move token " + name);
}

ValuePermutation CubeSimulator::compose(std::span<const ActionId> seq) const {
    ValuePermutation total;
    total.map.resize(kNumStickers);
    std::iota(total.map.begin(), total.map.end(), 0);
    for (ActionId a : seq) {
        if (a >= kNumMoves) {
            throw std::invalid_argument("compose: invalid move id");
        }
        const std::vector<Value>& map = move_maps()[a];
        for (auto& v : total.map) {
            v = map[v];
        }
    }
    return total;
}

Macro CubeSimulator::summarize(std::span<const ActionId> seq) const {
    if (seq.empty()) {
        throw std::invalid_argument("summarize: empty sequence");
    }
    Macro m;
    m.primitives.assign(seq.begin(), seq.end());
    ValuePermutation perm = compose(seq);
    int displaced = 0;
    for (int p = 0; p < kNumStickers; ++p) {
        displaced += perm.map[p] != p;
    }
    m.effect_size = displaced;
    m.effect = std::move(perm);
    return m;
}

State CubeSimulator::random_state(Rng& rng) const {
    // A 60-step scramble; well past the ~26-move diameter of the group.
    State s = solved_state();
    for (int i = 0; i < 60; ++i) {
        const ActionId a = static_cast<ActionId>(rng.below(kNumMoves));
        const std::vector<Value>& map = move_maps()[a];
        for (auto& v : s) {
            v = map[v];
        }
    }
    return s;
}

std::unique_ptr<DomainSimulator> CubeSimulator::clone() const {
    return std::make_unique<CubeSimulator>(*this);
}

int CubeSimulator::cubie_of_position(int pos) const {
    const Facelet f = facelet_of_index(pos);
    const Vec3 c = f.normal + f.offset;
    return (c.x + 1) * 9 + (c.y + 1) * 3 + (c.z + 1);
}

bool CubeSimulator::is_corner_position(int pos) const {
    const Facelet f = facelet_of_index(pos);
    const Vec3 c = f.normal + f.offset;
    return c.x != 0 && c.y != 0 && c.z != 0;
}

std::vector<ActionId> parse_cube_moves(const CubeSimulator& sim, const std::string& text) {
    std::istringstream ss(text);
    std::vector<ActionId> seq;
    std::string tok;
    while (ss >> tok) {
        seq.push_back(sim.action_from_name(tok));
    }
    return seq;
}

std::string format_cube_moves(const CubeSimulator& sim, std::span<const ActionId> seq) {
    std::string out;
    for (ActionId a : seq) {
        if (!out.empty()) {
            out += ' ';
        }
        out += sim.action_name(a);
    }
    return out;
}

const std::vector<std::string>& expert_base_sequences() {
    static const std::vector<std::string> bases = {
        // Swap three corners
        "L' B L F' L' B' L F",
        // Swap three middle edges
        "L' R U U R' L F F",
        // Swap three face edges
        "R R U R U R' U' R' U' R' U R'",
        // Rotate two corners
        "R B' R' U' B' U F U' B U R B R' F'",
        // R-permutation
        "F F R' F' U' F' U F R F' U U F U U F' U'",
        // Flip two edges
        "L R' F L R' D L R' B L R' U U L R' F L R' D L R' B L R'",
    };
    return bases;
}

std::vector<std::vector<ActionId>> expand_expert_variants(const CubeSimulator& sim,
                                                          std::span<const ActionId> base) {
    std::vector<std::vector<ActionId>> variants;
    variants.reserve(96);
    for (const FacePerm& orient : orientation_group()) {
        for (int mirror = 0; mirror < 2; ++mirror) {
            for (int inverse = 0; inverse < 2; ++inverse) {
                std::vector<ActionId> seq;
                seq.reserve(base.size());
                for (ActionId a : base) {
                    int face = orient[a / 2];
                    int prime = a % 2;
                    if (mirror) {
                        // Reflect through the L/R plane: swap those faces and
                        // flip every turn direction.
                        if (face == 2) {
                            face = 3;
                        } else if (face == 3) {
                            face = 2;
                        }
                        prime ^= 1;
                    }
                    seq.push_back(static_cast<ActionId>(face * 2 + prime));
                }
                if (inverse) {
                    std::reverse(seq.begin(), seq.end());
                    for (auto& a : seq) {
                        a ^= 1u;
                    }
                }
                variants.push_back(std::move(seq));
            }
        }
    }
    (void)sim;
    return variants;
}

std::vector<Macro> expert_macro_catalog(const CubeSimulator& sim) {
    std::vector<Macro> catalog;
    catalog.reserve(576);
    for (const std::string& base : expert_base_sequences()) {
        const std::vector<ActionId> ids = parse_cube_moves(sim, base);
        for (const auto& variant : expand_expert_variants(sim, ids)) {
            catalog.push_back(sim.summarize(variant));
        }
    }
    return catalog;
}

State scramble_cube(const CubeSimulator& sim, int steps, std::uint64_t seed) {
    Rng rng(seed);
    auto walker = sim.clone();
    return random_walk(*walker, sim.solved_state(), steps, rng);
}

void write_cube_scramble(const CubeSimulator& sim, std::span<const ActionId> seq,
                         std::uint64_t seed, std::ostream& os) {
    os << "cube seed=" << seed << " steps=" << seq.size() << "\n";
    os << format_cube_moves(sim, seq) << "\n";
}

std::vector<ActionId> read_cube_scramble(const CubeSimulator& sim, std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) {
        throw std::runtime_error("read_cube_scramble: missing header");
    }
    unsigned long long seed = 0;
    int steps = 0;
    if (std::sscanf(header.c_str(), "cube seed=%llu steps=%d", &seed, &steps) != 2) {
        throw std::runtime_error("read_cube_scramble: malformed header: " + header);
    }
    std::string line;
    std::getline(is, line);
    std::vector<ActionId> seq = parse_cube_moves(sim, line);
    if (static_cast<int>(seq.size()) != steps) {
        throw std::runtime_error("read_cube_scramble: token count does not match steps");
    }
    return seq;
}

}  // namespace bbplan
