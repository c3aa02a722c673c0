#include "bbplan/strips.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bbplan {

namespace {

bool valid_token(const std::string& tok) {
    if (tok.empty()) {
        return false;
    }
    for (char c : tok) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') {
            return false;
        }
    }
    return true;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) {
        toks.push_back(t);
    }
    return toks;
}

void sort_unique(std::vector<VarIndex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

VarIndex GroundStripsDomain::atom_index(const std::string& atom) const {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i] == atom) {
            return static_cast<VarIndex>(i);
        }
    }
    throw std::invalid_argument("unknown atom: " + atom);
}

GroundStripsDomain parse_ground_strips(const std::string& text, const std::string& name) {
    GroundStripsDomain domain;
    domain.name = name;
    std::unordered_map<std::string, VarIndex> atom_index;
    std::unordered_map<std::string, bool> action_names;

    enum class Section { None, Atoms, Action, Init, Goal };
    Section section = Section::None;

    auto resolve = [&](const std::string& tok, int line) {
        auto it = atom_index.find(tok);
        if (it == atom_index.end()) {
            parse_fail(line, "undeclared atom '" + tok + "'");
        }
        return it->second;
    };

    std::istringstream ss(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(ss, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        if (raw.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        const bool indented = raw[0] == ' ' || raw[0] == '\t';

        if (!indented) {
            if (raw.back() != ':') {
                parse_fail(lineno, "expected a section header ending in ':'");
            }
            const std::string head = raw.substr(0, raw.size() - 1);
            if (head == "atoms") {
                section = Section::Atoms;
            } else if (head == "init") {
                section = Section::Init;
            } else if (head == "goal") {
                section = Section::Goal;
            } else if (head.rfind("action ", 0) == 0) {
                const std::string act_name = head.substr(7);
                if (!valid_token(act_name)) {
                    parse_fail(lineno, "bad action name '" + act_name + "'");
                }
                if (action_names.count(act_name)) {
                    parse_fail(lineno, "duplicate action name '" + act_name + "'");
                }
                action_names[act_name] = true;
                domain.actions.push_back({act_name, {}, {}, {}});
                section = Section::Action;
            } else {
                parse_fail(lineno, "unknown section header '" + raw + "'");
            }
            continue;
        }

        const std::vector<std::string> toks = split_tokens(raw);
        switch (section) {
            case Section::None:
                parse_fail(lineno, "content before any section header");
            case Section::Atoms: {
                if (toks.size() != 1 || !valid_token(toks[0])) {
                    parse_fail(lineno, "expected one atom name per line");
                }
                if (atom_index.count(toks[0])) {
                    parse_fail(lineno, "duplicate atom '" + toks[0] + "'");
                }
                atom_index[toks[0]] = static_cast<VarIndex>(domain.atoms.size());
                domain.atoms.push_back(toks[0]);
                break;
            }
            case Section::Action: {
                StripsAction& act = domain.actions.back();
                std::vector<VarIndex>* target = nullptr;
                if (toks[0] == "pre:") {
                    target = &act.pre;
                } else if (toks[0] == "add:") {
                    target = &act.add;
                } else if (toks[0] == "del:") {
                    target = &act.del;
                } else {
                    parse_fail(lineno, "expected pre:/add:/del: inside an action");
                }
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    target->push_back(resolve(toks[i], lineno));
                }
                break;
            }
            case Section::Init:
            case Section::Goal: {
                auto& target = section == Section::Init ? domain.init : domain.goal;
                for (const auto& tok : toks) {
                    target.push_back(resolve(tok, lineno));
                }
                break;
            }
        }
    }

    for (auto& act : domain.actions) {
        sort_unique(act.pre);
        sort_unique(act.add);
        sort_unique(act.del);
        // An atom both added and deleted simplifies to its positive part.
        std::vector<VarIndex> del_only;
        for (VarIndex d : act.del) {
            if (!std::binary_search(act.add.begin(), act.add.end(), d)) {
                del_only.push_back(d);
            }
        }
        act.del = std::move(del_only);
    }
    sort_unique(domain.init);
    sort_unique(domain.goal);
    return domain;
}

std::string write_ground_strips(const GroundStripsDomain& domain) {
    std::ostringstream os;
    os << "atoms:\n";
    for (const auto& atom : domain.atoms) {
        os << "  " << atom << "\n";
    }
    auto atom_list = [&](const std::vector<VarIndex>& v) {
        std::string out;
        for (VarIndex i : v) {
            out += ' ';
            out += domain.atoms[i];
        }
        return out;
    };
    for (const auto& act : domain.actions) {
        os << "action " << act.name << ":\n";
        os << "  pre:" << atom_list(act.pre) << "\n";
        os << "  add:" << atom_list(act.add) << "\n";
        os << "  del:" << atom_list(act.del) << "\n";
    }
    os << "init:\n  " << atom_list(domain.init).substr(1) << "\n";
    os << "goal:\n  " << atom_list(domain.goal).substr(1) << "\n";
    return os.str();
}

GroundStripsDomain generate_hanoi(int n_disks) {
    if (n_disks < 1) {
        throw std::invalid_argument("generate_hanoi: need at least one disk");
    }
    std::ostringstream os;
    auto disk = [](int i) { return "d" + std::to_string(i); };
    auto peg = [](int i) { return "p" + std::to_string(i); };
    // Supports of disk i: the three pegs plus every larger disk.
    auto supports = [&](int i) {
        std::vector<std::string> out = {peg(1), peg(2), peg(3)};
        for (int j = i + 1; j <= n_disks; ++j) {
            out.push_back(disk(j));
        }
        return out;
    };

    os << "atoms:\n";
    for (int i = 1; i <= n_disks; ++i) {
        os << "  clear_" << disk(i) << "\n";
    }
    for (int p = 1; p <= 3; ++p) {
        os << "  clear_" << peg(p) << "\n";
    }
    for (int i = 1; i <= n_disks; ++i) {
        for (const auto& s : supports(i)) {
            os << "  on_" << disk(i) << "_" << s << "\n";
        }
    }
    for (int i = 1; i <= n_disks; ++i) {
        for (const auto& from : supports(i)) {
            for (const auto& to : supports(i)) {
                if (from == to) {
                    continue;
                }
                os << "action move_" << disk(i) << "_" << from << "_" << to << ":\n";
                os << "  pre: clear_" << disk(i) << " on_" << disk(i) << "_" << from << " clear_"
                   << to << "\n";
                os << "  add: on_" << disk(i) << "_" << to << " clear_" << from << "\n";
                os << "  del: on_" << disk(i) << "_" << from << " clear_" << to << "\n";
            }
        }
    }
    os << "init:\n  clear_" << disk(1) << " clear_" << peg(2) << " clear_" << peg(3);
    for (int i = 1; i < n_disks; ++i) {
        os << " on_" << disk(i) << "_" << disk(i + 1);
    }
    os << " on_" << disk(n_disks) << "_" << peg(1) << "\n";
    os << "goal:\n ";
    for (int i = 1; i < n_disks; ++i) {
        os << " on_" << disk(i) << "_" << disk(i + 1);
    }
    os << " on_" << disk(n_disks) << "_" << peg(3) << "\n";
    return parse_ground_strips(os.str(), "hanoi" + std::to_string(n_disks));
}

StripsSimulator::StripsSimulator(GroundStripsDomain domain) : domain_(std::move(domain)) {
    for (std::size_t i = 0; i < domain_.actions.size(); ++i) {
        action_index_[domain_.actions[i].name] = static_cast<ActionId>(i);
    }
}

State StripsSimulator::init_state() const {
    State s(domain_.atoms.size(), 0);
    for (VarIndex i : domain_.init) {
        s[i] = 1;
    }
    return s;
}

Goal StripsSimulator::default_goal() const {
    std::vector<std::pair<VarIndex, Value>> lits;
    for (VarIndex i : domain_.goal) {
        lits.emplace_back(i, 1);
    }
    return Goal(std::move(lits));
}

State StripsSimulator::apply_primitive(const State& s, ActionId a) const {
    const StripsAction& act = domain_.actions[a];
    State out = s;
    for (VarIndex d : act.del) {
        out[d] = 0;
    }
    for (VarIndex ad : act.add) {
        out[ad] = 1;
    }
    return out;
}

void StripsSimulator::primitive_applicable(const State& s, std::vector<ActionId>& out) const {
    for (std::size_t i = 0; i < domain_.actions.size(); ++i) {
        if (primitive_is_applicable(s, static_cast<ActionId>(i))) {
            out.push_back(static_cast<ActionId>(i));
        }
    }
}

bool StripsSimulator::primitive_is_applicable(const State& s, ActionId a) const {
    if (a >= domain_.actions.size()) {
        return false;
    }
    for (VarIndex p : domain_.actions[a].pre) {
        if (!s[p]) {
            return false;
        }
    }
    return true;
}

std::string StripsSimulator::primitive_name(ActionId a) const {
    return domain_.actions[a].name;
}

ActionId StripsSimulator::primitive_from_name(const std::string& name) const {
    auto it = action_index_.find(name);
    if (it == action_index_.end()) {
        throw std::invalid_argument("strips: unknown action name " + name);
    }
    return it->second;
}

Macro StripsSimulator::summarize(std::span<const ActionId> seq) const {
    if (seq.empty()) {
        throw std::invalid_argument("summarize: empty sequence");
    }
    // Symbolic execution of the chain. known[v] tracks each atom's truth
    // given only the accumulated outside precondition; preconditions met by
    // earlier effects are not re-required.
    enum : std::int8_t { kUnknown = -1, kFalse = 0, kTrue = 1 };
    std::vector<std::int8_t> known(domain_.atoms.size(), kUnknown);
    enum : std::int8_t { kNone = 0, kAdd = 1, kDel = 2 };
    std::vector<std::int8_t> last_write(domain_.atoms.size(), kNone);
    std::vector<VarIndex> pre;

    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] >= domain_.actions.size()) {
            throw std::invalid_argument("summarize: invalid action id");
        }
        const StripsAction& act = domain_.actions[seq[i]];
        for (VarIndex p : act.pre) {
            if (known[p] == kFalse) {
                throw std::invalid_argument("summarize: sequence not chainable at position " +
                                            std::to_string(i) + " (" + act.name + " needs " +
                                            domain_.atoms[p] + ")");
            }
            if (known[p] == kUnknown) {
                pre.push_back(p);
                known[p] = kTrue;
            }
        }
        for (VarIndex d : act.del) {
            known[d] = kFalse;
            last_write[d] = kDel;
        }
        for (VarIndex ad : act.add) {
            known[ad] = kTrue;
            last_write[ad] = kAdd;
        }
    }
    std::sort(pre.begin(), pre.end());

    // Net effect: the last write wins. An atom required by the precondition
    // and finally re-added ends where it started, so it drops out; deletes
    // always force false and stay.
    StripsSummary effect;
    for (VarIndex v = 0; v < domain_.atoms.size(); ++v) {
        if (last_write[v] == kAdd && !std::binary_search(pre.begin(), pre.end(), v)) {
            effect.add.push_back(v);
        } else if (last_write[v] == kDel) {
            effect.del.push_back(v);
        }
    }

    Macro m;
    m.primitives.assign(seq.begin(), seq.end());
    for (VarIndex p : pre) {
        m.precondition.emplace_back(p, 1);
    }
    // Largest possible change: every add was false and every delete true.
    m.effect_size = static_cast<int>(effect.add.size() + effect.del.size());
    m.effect = std::move(effect);
    return m;
}

State StripsSimulator::random_state(Rng& rng) const {
    const int steps = static_cast<int>(4 * domain_.atoms.size() + 16);
    State s = init_state();
    std::vector<ActionId> acts;
    for (int i = 0; i < steps; ++i) {
        acts.clear();
        primitive_applicable(s, acts);
        if (acts.empty()) {
            break;
        }
        s = apply_primitive(s, acts[rng.below(acts.size())]);
    }
    return s;
}

std::unique_ptr<DomainSimulator> StripsSimulator::clone() const {
    return std::make_unique<StripsSimulator>(*this);
}

std::string StripsSimulator::precondition_token(const Macro& m) const {
    if (m.precondition.empty()) {
        return "-";
    }
    std::string tok;
    for (const auto& [var, val] : m.precondition) {
        if (val != 1) {
            return DomainSimulator::precondition_token(m);
        }
        if (!tok.empty()) {
            tok += ',';
        }
        tok += domain_.atoms[var];
    }
    return tok;
}

}  // namespace bbplan
