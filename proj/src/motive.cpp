#include "cdesc/motive.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <set>
#include <tuple>

#include "cdesc/error.hpp"

namespace cdesc {
namespace {

using HodgeKey = std::tuple<int, int, int>;

std::map<HodgeKey, long> aggregate(const std::vector<HodgeEntry>& entries) {
    std::map<HodgeKey, long> table;
    for (const auto& e : entries) table[{e.k, e.p, e.q}] += e.h;
    return table;
}

bool valid_atom_name(std::string_view name) {
    if (name.empty()) return false;
    return std::none_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isspace(c) || c == '[' || c == ']' || c == ',' || c == '|' || c == '>';
    });
}

std::string power_suffix(int twist) {
    if (twist == 0) return "";
    if (twist == 1) return "L";
    return "L^" + std::to_string(twist);
}

}  // namespace

void Atom::validate() const {
    if (!valid_atom_name(name)) throw InvariantViolation("atom-name", "invalid atom name '" + name + "'");
    if (dim < 0) throw InvariantViolation("atom-dim", name + ": negative dimension");
    for (const auto& e : hodge) {
        if (e.h <= 0) throw InvariantViolation("hodge-multiplicity", name + ": multiplicities must be positive");
        if (e.p + e.q != e.k) throw InvariantViolation("p+q=k", name + ": entry (" + std::to_string(e.k) + "," +
                                                                    std::to_string(e.p) + "," + std::to_string(e.q) +
                                                                    ") has p+q != k");
        if (e.p < 0 || e.q < 0 || e.p > dim || e.q > dim)
            throw InvariantViolation("hodge-range", name + ": Hodge numbers outside [0, dim]");
    }
    const auto table = aggregate(hodge);
    for (const auto& [key, h] : table) {
        const auto [k, p, q] = key;
        auto it = table.find({2 * dim - k, dim - p, dim - q});
        if (it == table.end() || it->second != h)
            throw InvariantViolation("poincare-self-duality", name + ": h^{" + std::to_string(p) + "," +
                                                                   std::to_string(q) + "}(H^" + std::to_string(k) +
                                                                   ") has no matching dual entry");
    }
    auto it = table.find({0, 0, 0});
    if (it == table.end() || it->second < 1) throw InvariantViolation("h00>=1", name + ": h^{0,0}(H^0) must be at least 1");
}

void AtomRegistry::add(Atom atom) {
    atom.validate();
    if (atoms_.count(atom.name) != 0) throw InvariantViolation("atom-unique", "duplicate atom '" + atom.name + "'");
    std::string key = atom.name;
    atoms_.emplace(std::move(key), std::move(atom));
}

bool AtomRegistry::contains(std::string_view name) const { return atoms_.find(name) != atoms_.end(); }

const Atom& AtomRegistry::at(std::string_view name) const {
    auto it = atoms_.find(name);
    if (it == atoms_.end()) throw UnknownNameError("unknown atom '" + std::string(name) + "'");
    return it->second;
}

std::vector<std::string> AtomRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& entry : atoms_) out.push_back(entry.first);
    return out;
}

MotiveClass MotiveClass::term(std::string atom, int twist, long coefficient) {
    MotiveClass c;
    c.add_term({std::move(atom), twist}, coefficient);
    return c;
}

long MotiveClass::coefficient(const std::string& atom, int twist) const {
    auto it = terms_.find({atom, twist});
    return it == terms_.end() ? 0 : it->second;
}

void MotiveClass::add_term(const Key& key, long coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

MotiveClass& MotiveClass::operator+=(const MotiveClass& other) {
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

MotiveClass& MotiveClass::operator-=(const MotiveClass& other) {
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
}

MotiveClass& MotiveClass::operator*=(long scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& entry : terms_) entry.second *= scalar;
    return *this;
}

std::string MotiveClass::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Key, long>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const bool ua = a.first.first == point_atom, ub = b.first.first == point_atom;
        if (ua != ub) return ua;
        return a.first < b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [key, c] : ordered) {
        const auto& [atom, tw] = key;
        const bool unit = atom == point_atom;
        std::string symbol = unit ? power_suffix(tw) : "[" + atom + "]" + power_suffix(tw);
        const long mag = c < 0 ? -c : c;
        std::string coeff = (mag == 1 && !symbol.empty()) ? "" : std::to_string(mag);
        if (first)
            out += (c < 0 ? "-" : "") + coeff + symbol;
        else
            out += (c < 0 ? " - " : " + ") + coeff + symbol;
        first = false;
    }
    return out;
}

MotiveClass parse_class(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty class expression");
    if (s == "0") return {};
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError("class '" + std::string(text) + "': " + why + " at position " + std::to_string(pos));
    };
    auto read_int = [&](bool allow_sign) -> std::optional<long> {
        const std::size_t start = pos;
        if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        const std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) {
            pos = start;
            return std::nullopt;
        }
        return std::stol(s.substr(start, pos - start));
    };
    auto read_power = [&]() -> int {
        // after 'L'
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            auto e = read_int(true);
            if (!e) fail("expected exponent");
            return static_cast<int>(*e);
        }
        return 1;
    };

    MotiveClass result;
    bool first = true;
    while (pos < s.size()) {
        long sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        auto coeff = read_int(false);
        if (coeff && pos < s.size() && s[pos] == '*') ++pos;
        std::string atom(point_atom);
        int tw = 0;
        if (pos < s.size() && s[pos] == '[') {
            const auto close = s.find(']', pos);
            if (close == std::string::npos) fail("unterminated '['");
            atom = s.substr(pos + 1, close - pos - 1);
            if (!valid_atom_name(atom)) fail("invalid atom name");
            pos = close + 1;
            if (pos < s.size() && s[pos] == 'L') {
                ++pos;
                tw = read_power();
            }
        } else if (pos < s.size() && s[pos] == 'L') {
            ++pos;
            tw = read_power();
        } else if (!coeff) {
            fail("expected a term");
        }
        result += MotiveClass::term(atom, tw, sign * coeff.value_or(1));
    }
    return result;
}

MotiveClass class_of(const AtomRegistry& registry, std::string_view atom) {
    return MotiveClass::term(registry.at(atom).name);
}

MotiveClass twist(const MotiveClass& c, int i) {
    MotiveClass out;
    for (const auto& [key, coeff] : c.terms()) out += MotiveClass::term(key.first, key.second + i, coeff);
    return out;
}

EPoly EPoly::monomial(int u_exp, int v_exp, long coefficient) {
    EPoly e;
    e.add_term({u_exp, v_exp}, coefficient);
    return e;
}

long EPoly::coefficient(int u_exp, int v_exp) const {
    auto it = terms_.find({u_exp, v_exp});
    return it == terms_.end() ? 0 : it->second;
}

void EPoly::add_term(const Exponent& e, long coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

EPoly& EPoly::operator+=(const EPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

EPoly& EPoly::operator-=(const EPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
    EPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
}

long EPoly::euler_number() const {
    long total = 0;
    for (const auto& entry : terms_) total += entry.second;
    return total;
}

EPoly EPoly::inverted() const {
    EPoly out;
    for (const auto& [e, c] : terms_) out.add_term({-e.first, -e.second}, c);
    return out;
}

std::string EPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, long>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da < db;
        return a.first.first > b.first.first;
    });
    auto var = [](const char* name, int e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return name;
        return std::string(name) + "^" + std::to_string(e);
    };
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        const std::string mono = var("u", e.first) + var("v", e.second);
        const long mag = c < 0 ? -c : c;
        const std::string coeff = (mag == 1 && !mono.empty()) ? "" : std::to_string(mag);
        if (first)
            out += (c < 0 ? "-" : "") + coeff + mono;
        else
            out += (c < 0 ? " - " : " + ") + coeff + mono;
        first = false;
    }
    return out;
}

EPoly hodge_polynomial(const Atom& atom) {
    EPoly e;
    for (const auto& entry : atom.hodge) e += EPoly::monomial(entry.p, entry.q, (entry.k % 2 == 0 ? 1 : -1) * entry.h);
    return e;
}

EPoly realize_E(const AtomRegistry& registry, const MotiveClass& c) {
    EPoly out;
    for (const auto& [key, coeff] : c.terms()) {
        const EPoly base = hodge_polynomial(registry.at(key.first));
        out += base * EPoly::monomial(key.second, key.second, coeff);
    }
    return out;
}

MotiveClass dual(const AtomRegistry& registry, const MotiveClass& c) {
    MotiveClass out;
    for (const auto& [key, coeff] : c.terms()) {
        const Atom& atom = registry.at(key.first);
        atom.validate();
        out += MotiveClass::term(key.first, -atom.dim - key.second, coeff);
    }
    return out;
}

Relation parse_relation(std::string_view text) {
    const auto arrow = text.find("->");
    if (arrow == std::string_view::npos) throw ParseError("relation '" + std::string(text) + "' lacks '->'");
    const MotiveClass lhs = parse_class(text.substr(0, arrow));
    const MotiveClass rhs = parse_class(text.substr(arrow + 2));
    if (lhs.terms().size() != 1 || lhs.terms().begin()->second != 1 || lhs.terms().begin()->first.second != 0 ||
        lhs.terms().begin()->first.first == point_atom)
        throw ParseError("relation '" + std::string(text) + "': left side must be a single untwisted atom [A]");
    return Relation{lhs.terms().begin()->first.first, rhs, std::string(text)};
}

RelationSet::RelationSet(const AtomRegistry& registry, std::vector<Relation> rules) : rules_(std::move(rules)) {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Relation& r = rules_[i];
        registry.at(r.atom);
        if (realize_E(registry, MotiveClass::term(r.atom)) != realize_E(registry, r.rhs))
            throw InvariantViolation("relation-realization",
                                     "'" + r.text + "' changes the E-polynomial: " +
                                         realize_E(registry, MotiveClass::term(r.atom)).to_string() + " vs " +
                                         realize_E(registry, r.rhs).to_string());
        first_rule_.try_emplace(r.atom, i);
    }
    // rewrite graph atom -> atoms on its right-hand sides must be acyclic
    std::map<std::string, int> state;
    std::function<void(const std::string&)> visit = [&](const std::string& atom) {
        state[atom] = 1;
        for (const auto& r : rules_) {
            if (r.atom != atom) continue;
            for (const auto& [key, c] : r.rhs.terms()) {
                if (state[key.first] == 1)
                    throw InvariantViolation("relation-termination", "rewrite cycle through [" + key.first + "]");
                if (state[key.first] == 0) visit(key.first);
            }
        }
        state[atom] = 2;
    };
    for (const auto& r : rules_)
        if (state[r.atom] == 0) visit(r.atom);
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        if (first_rule_.at(rules_[i].atom) == i) continue;
        auto alternative = first_rule_;
        alternative[rules_[i].atom] = i;
        const MotiveClass lhs = MotiveClass::term(rules_[i].atom);
        if (normalize_with(lhs, alternative) != normalize_with(lhs, first_rule_))
            throw InvariantViolation("relation-confluence",
                                     "rules for [" + rules_[i].atom + "] disagree: '" + rules_[i].text + "'");
    }
}

MotiveClass RelationSet::normalize_with(const MotiveClass& c, const std::map<std::string, std::size_t>& chosen) const {
    MotiveClass out;
    for (const auto& [key, coeff] : c.terms()) {
        auto it = chosen.find(key.first);
        if (it == chosen.end()) {
            out += MotiveClass::term(key.first, key.second, coeff);
            continue;
        }
        out += twist(normalize_with(rules_[it->second].rhs, chosen), key.second) * coeff;
    }
    return out;
}

MotiveClass RelationSet::normalize(const MotiveClass& c) const { return normalize_with(c, first_rule_); }

}  // namespace cdesc
