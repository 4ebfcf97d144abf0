#include "cdesc/scissor.hpp"

#include <functional>
#include <set>

#include "cdesc/error.hpp"

namespace cdesc {

namespace {

void check_reference(const AtomRegistry& registry, const std::map<std::string, Presentation>& entries,
                     const std::string& ref, const std::string& owner) {
    if (entries.count(ref) == 0 && !registry.contains(ref))
        throw UnknownNameError("variety " + owner + " refers to unknown '" + ref + "'");
}

std::size_t expected_parts(Presentation::Kind kind) {
    switch (kind) {
        case Presentation::Kind::minus:
        case Presentation::Kind::bundle: return 2;
        default: return 0;
    }
}

}  // namespace

VarietyCatalog::VarietyCatalog(const AtomRegistry& registry, std::map<std::string, Presentation> entries)
    : entries_(std::move(entries)) {
    for (const auto& [name, p] : entries_) {
        if (p.kind == Presentation::Kind::atom) check_reference(registry, {}, p.atom, name);
        const std::size_t want = expected_parts(p.kind);
        if (want != 0 && p.parts.size() != want)
            throw InvariantViolation("presentation-shape", "variety " + name + " needs " + std::to_string(want) + " parts");
        for (const auto& ref : p.parts) check_reference(registry, entries_, ref, name);
        if (p.kind == Presentation::Kind::given)
            for (const auto& [key, c] : p.cls.terms())
                if (!registry.contains(key.first)) throw UnknownNameError("variety " + name + " uses unknown atom " + key.first);
    }
    std::map<std::string, int> state;
    std::function<void(const std::string&)> visit = [&](const std::string& name) {
        auto it = entries_.find(name);
        if (it == entries_.end()) return;
        int& s = state[name];
        if (s == 2) return;
        if (s == 1) throw InvariantViolation("presentation-acyclic", "variety " + name + " is defined in terms of itself");
        s = 1;
        for (const auto& ref : it->second.parts) visit(ref);
        state[name] = 2;
    };
    for (const auto& entry : entries_) visit(entry.first);
}

MotiveClass chi_c_scissor(const AtomRegistry& registry, const RelationSet& relations, const VarietyCatalog& catalog,
                          std::string_view name, ScissorMode mode) {
    std::set<std::string> active;
    std::function<MotiveClass(const std::string&)> eval = [&](const std::string& ref) -> MotiveClass {
        auto it = catalog.entries().find(ref);
        if (it == catalog.entries().end()) return class_of(registry, ref);
        if (!active.insert(ref).second)
            throw InvariantViolation("presentation-acyclic", "variety " + ref + " is defined in terms of itself");
        const Presentation& p = it->second;
        MotiveClass out;
        switch (p.kind) {
            case Presentation::Kind::atom: out = class_of(registry, p.atom); break;
            case Presentation::Kind::given: out = p.cls; break;
            case Presentation::Kind::minus: out = eval(p.parts[0]) - eval(p.parts[1]); break;
            case Presentation::Kind::unite:
                for (const auto& part : p.parts) out += eval(part);
                break;
            case Presentation::Kind::bundle: {
                const MotiveClass base = eval(p.parts[0]);
                const MotiveClass fiber = relations.normalize(eval(p.parts[1]));
                for (const auto& [key, coefficient] : fiber.terms()) {
                    if (key.first != point_atom)
                        throw InvariantViolation("bundle-fiber", "fiber of " + ref + " does not reduce to a polynomial in L");
                    out += twist(base, key.second) * coefficient;
                }
                break;
            }
        }
        active.erase(ref);
        return out;
    };
    MotiveClass c = eval(std::string(name));
    return mode == ScissorMode::normalized ? relations.normalize(c) : c;
}

SerreCone serre_cone(const AtomRegistry& registry, std::string_view y) {
    const MotiveClass base = class_of(registry, y);
    return {MotiveClass::one() + twist(base, 1) - base, MotiveClass::one()};
}

SerreReport serre_report(const AtomRegistry& registry, const RelationSet& relations, std::string_view y) {
    SerreReport r;
    r.atom = std::string(y);
    r.formal = serre_cone(registry, y);
    r.chi_c = relations.normalize(r.formal.chi_c);
    r.chi = relations.normalize(r.formal.chi);
    const MotiveClass base = relations.normalize(class_of(registry, y));
    r.oracle = relations.normalize(MotiveClass::one() + twist(base, 1) - base);
    r.chi_c_realization = realize_E(registry, r.chi_c);
    r.chi_realization = realize_E(registry, r.chi);
    r.matches_oracle = r.chi_c == r.oracle && r.chi_c_realization == realize_E(registry, r.oracle);
    r.classes_differ = !(r.chi_c == r.chi);
    r.euler_numbers_agree = r.chi_c_realization.euler_number() == r.chi_realization.euler_number();
    return r;
}

}  // namespace cdesc
