#include "baranski/automaton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "baranski/error.hpp"

namespace baranski {

State State::offset(OffsetVector b) {
    if (!b.in_box() || b.is_zero())
        throw Error(Errc::InvalidArgument, "offset state needs a nonzero vector in {-1,0,1}^2");
    return State(static_cast<std::uint8_t>(b.index()));
}

State State::parse(std::string_view name) {
    if (name == "Id") return id();
    if (name == "Exit") return exit();
    for (int code = 0; code < OffsetVector::kCount; ++code) {
        if (code == kIdCode) continue;
        if (OffsetVector::from_index(code).name() == name) return State(static_cast<std::uint8_t>(code));
    }
    throw Error(Errc::Parse, "unknown state '" + std::string(name) + "'");
}

std::string State::name() const {
    if (is_id()) return "Id";
    if (is_exit()) return "Exit";
    return vector().name();
}

const std::array<State, State::kCount>& canonical_state_order() {
    static const std::array<State, State::kCount> order = [] {
        const OffsetVector e1{1, 0}, e2{0, 1}, d1{1, 1}, d2{1, -1};
        return std::array<State, State::kCount>{
            State::id(),           State::exit(),          State::offset(e1),  State::offset(-e1),
            State::offset(e2),     State::offset(-e2),     State::offset(d1),  State::offset(-d1),
            State::offset(d2),     State::offset(-d2)};
    }();
    return order;
}

SigmaAutomaton::Builder::Builder(int alphabet_size) : n_(alphabet_size) {
    if (n_ < 1) throw Error(Errc::InvalidArgument, "alphabet must contain at least one letter");
    const auto nn = static_cast<std::size_t>(n_);
    table_.assign(OffsetVector::kCount * nn * nn, State::kExitCode);
    for (Letter a = 1; a <= n_; ++a) set(State::id(), a, a, State::id());
}

SigmaAutomaton::Builder& SigmaAutomaton::Builder::set(State from, Letter i, Letter j, State to) {
    if (from.is_exit()) throw Error(Errc::InvalidArgument, "Exit is absorbing and has no transitions");
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw Error(Errc::OutOfRange, "input (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") outside the alphabet 1.." + std::to_string(n_));
    const auto nn = static_cast<std::size_t>(n_);
    table_[(from.code() * nn + static_cast<std::size_t>(i - 1)) * nn + static_cast<std::size_t>(j - 1)] = to.code();
    return *this;
}

SigmaAutomaton::Builder& SigmaAutomaton::Builder::declare(State s) {
    declared_.set(s.code());
    return *this;
}

State SigmaAutomaton::Builder::get(State from, Letter i, Letter j) const {
    if (from.is_exit()) return from;
    const auto nn = static_cast<std::size_t>(n_);
    return State::from_code(
        table_[(from.code() * nn + static_cast<std::size_t>(i - 1)) * nn + static_cast<std::size_t>(j - 1)]);
}

SigmaAutomaton SigmaAutomaton::Builder::build(bool prune) const {
    for (Letter i = 1; i <= n_; ++i)
        for (Letter j = 1; j <= n_; ++j)
            if (get(State::id(), i, j).is_id() != (i == j))
                throw Error(Errc::InvalidArgument, "delta(Id,(" + std::to_string(i) + "," + std::to_string(j) +
                                                       ")) must be Id exactly when the letters agree");

    const auto nn = static_cast<std::size_t>(n_);
    const std::size_t row = nn * nn;
    auto row_of = [&](int code) { return table_.begin() + static_cast<std::ptrdiff_t>(code * row); };

    std::bitset<State::kCount> present;
    present.set(State::kIdCode);
    present.set(State::kExitCode);
    if (prune) {
        std::queue<int> work;
        work.push(State::kIdCode);
        while (!work.empty()) {
            const int code = work.front();
            work.pop();
            for (auto it = row_of(code); it != row_of(code) + static_cast<std::ptrdiff_t>(row); ++it)
                if (!present.test(*it)) {
                    present.set(*it);
                    work.push(*it);
                }
        }
    } else {
        present |= declared_;
        for (int code = 0; code < OffsetVector::kCount; ++code)
            for (auto it = row_of(code); it != row_of(code) + static_cast<std::ptrdiff_t>(row); ++it)
                if (*it != State::kExitCode) {
                    present.set(static_cast<std::size_t>(code));
                    present.set(*it);
                }
    }

    SigmaAutomaton out;
    out.n_ = n_;
    out.present_ = present;
    out.table_ = table_;
    for (int code = 0; code < OffsetVector::kCount; ++code)
        if (!present.test(static_cast<std::size_t>(code)))
            std::fill_n(out.table_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(code) * row), row,
                        State::kExitCode);
    return out;
}

std::vector<State> SigmaAutomaton::states() const {
    std::vector<State> out;
    for (const auto& s : canonical_state_order())
        if (has_state(s)) out.push_back(s);
    return out;
}

SigmaAutomaton build_topology_automaton(const CarpetSpec& spec, const IntersectionOracle& oracle) {
    SigmaAutomaton::Builder builder(spec.size());
    for (int code = 0; code < OffsetVector::kCount; ++code) {
        const auto s = OffsetVector::from_index(code);
        if (!s.is_zero() && !oracle.survives(s)) continue;
        const State from = State::from_code(static_cast<std::uint8_t>(code));
        for (Letter i = 1; i <= spec.size(); ++i)
            for (Letter j = 1; j <= spec.size(); ++j) {
                const auto& di = spec.digit(i);
                const auto& dj = spec.digit(j);
                const OffsetVector v{spec.n() * s.bx + dj.x - di.x, spec.m() * s.by + dj.y - di.y};
                State to = State::exit();
                if (v.is_zero()) {
                    if (!s.is_zero() || i != j)
                        throw Error(Errc::Internal, "zero offset reached from a nonzero state");
                    to = State::id();
                } else if (oracle.survives(v)) {
                    to = State::offset(v);
                }
                builder.set(from, i, j, to);
            }
    }
    return builder.build(true);
}

SurvivingTime surviving_time(const SigmaAutomaton& machine, WordView x, WordView y) {
    const auto pre = static_cast<std::int64_t>(std::max(x.prefix.size(), y.prefix.size()));
    const auto cycle = static_cast<std::int64_t>(std::lcm(x.period.size(), y.period.size()));
    const std::int64_t bound = pre + cycle * machine.live_state_count() + 1;
    State s = State::id();
    for (std::int64_t k = 0; k < bound; ++k) {
        const auto pos = static_cast<std::size_t>(k);
        s = machine.step(s, x.at(pos), y.at(pos));
        if (s.is_exit()) return SurvivingTime::finite(k);
    }
    return SurvivingTime::infinite();
}

SurvivingTime surviving_time(const SigmaAutomaton& machine, const PeriodicWord& x, const PeriodicWord& y) {
    const int limit = machine.alphabet_size();
    if (x.max_letter() > limit || y.max_letter() > limit)
        throw Error(Errc::OutOfRange, "word uses letters outside the alphabet 1.." + std::to_string(limit));
    return surviving_time(machine, x.view(), y.view());
}

std::vector<FeasibilityViolation> check_feasibility(const SigmaAutomaton& machine, int slack,
                                                    const std::vector<WordTriple>& samples) {
    if (slack < 0) throw Error(Errc::InvalidArgument, "feasibility slack must be non-negative");
    std::vector<FeasibilityViolation> out;
    for (const auto& t : samples) {
        const auto txy = surviving_time(machine, t.x, t.y);
        const auto txz = surviving_time(machine, t.x, t.z);
        const auto tyz = surviving_time(machine, t.y, t.z);
        if (std::min(txy, txz) > tyz.plus(slack)) out.push_back({t, txy, txz, tyz});
    }
    return out;
}

bool mirror_check(const SigmaAutomaton& machine) {
    const int n = machine.alphabet_size();
    for (int code = 0; code < OffsetVector::kCount; ++code) {
        const State s = State::from_code(static_cast<std::uint8_t>(code));
        for (Letter i = 1; i <= n; ++i)
            for (Letter j = 1; j <= n; ++j)
                if (machine.step(s, i, j) != machine.step(s.mirror(), j, i).mirror()) return false;
    }
    return true;
}

namespace {

std::string pair_label(Letter i, Letter j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

std::string to_dot(const SigmaAutomaton& machine, const DotOptions& options) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (const auto& s : machine.states()) {
        if (s.is_exit() && !options.showExit) continue;
        out << "  \"" << s.name() << "\"" << (s.is_id() ? " [shape=doublecircle]" : "") << ";\n";
    }
    const int n = machine.alphabet_size();
    for (const auto& from : machine.states()) {
        if (from.is_exit()) continue;
        std::map<std::uint8_t, std::vector<std::string>> labels;
        for (Letter i = 1; i <= n; ++i)
            for (Letter j = 1; j <= n; ++j) {
                const State to = machine.step(from, i, j);
                if (to.is_exit() && !options.showExit) continue;
                if (from.is_id() && to.is_id()) continue;
                labels[to.code()].push_back(pair_label(i, j));
            }
        for (const auto& to : canonical_state_order()) {
            const auto it = labels.find(to.code());
            if (it == labels.end()) continue;
            out << "  \"" << from.name() << "\" -> \"" << to.name() << "\" [label=\"";
            for (std::size_t k = 0; k < it->second.size(); ++k) out << (k ? " " : "") << it->second[k];
            out << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

nlohmann::json automaton_to_json(const SigmaAutomaton& machine) {
    nlohmann::json doc;
    doc["N"] = machine.alphabet_size();
    auto& states = doc["states"] = nlohmann::json::array();
    for (const auto& s : machine.states()) states.push_back(s.name());
    auto& delta = doc["delta"] = nlohmann::json::object();
    const int n = machine.alphabet_size();
    for (const auto& from : machine.states()) {
        if (from.is_exit()) continue;
        for (Letter i = 1; i <= n; ++i)
            for (Letter j = 1; j <= n; ++j) {
                const State to = machine.step(from, i, j);
                if (to.is_exit() || (from.is_id() && to.is_id())) continue;
                delta[from.name() + "|" + std::to_string(i) + "," + std::to_string(j)] = to.name();
            }
    }
    return doc;
}

SigmaAutomaton automaton_from_json(const nlohmann::json& doc) {
    try {
        const int n = doc.at("N").get<int>();
        SigmaAutomaton::Builder builder(n);
        if (doc.contains("states"))
            for (const auto& name : doc.at("states")) builder.declare(State::parse(name.get<std::string>()));
        for (const auto& [key, value] : doc.at("delta").items()) {
            const auto bar = key.find('|');
            const auto comma = key.find(',', bar == std::string::npos ? 0 : bar);
            if (bar == std::string::npos || comma == std::string::npos)
                throw Error(Errc::Parse, "malformed transition key '" + key + "'");
            const State from = State::parse(std::string_view(key).substr(0, bar));
            const int i = std::stoi(key.substr(bar + 1, comma - bar - 1));
            const int j = std::stoi(key.substr(comma + 1));
            builder.set(from, i, j, State::parse(value.get<std::string>()));
        }
        return builder.build(false);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, std::string("automaton JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw Error(Errc::Parse, "automaton JSON: non-numeric letter in a transition key");
    }
}

}  // namespace baranski
