#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cdesc/motive.hpp"

namespace cdesc {

/// How a (possibly open) variety is cut into smooth projective pieces.
/// References name another presentation or, failing that, an atom.
struct Presentation {
    enum class Kind {
        atom,    ///< a registered smooth projective atom
        minus,   ///< parts[0] with the closed subvariety parts[1] removed
        unite,   ///< disjoint union of parts
        bundle,  ///< Zariski-locally trivial fibration: parts[0] base, parts[1] fiber
        given,   ///< an explicit class
    };

    Kind kind = Kind::atom;
    std::string atom;
    std::vector<std::string> parts;
    MotiveClass cls;
};

class VarietyCatalog {
public:
    VarietyCatalog() = default;

    /// Throws UnknownNameError for unresolved references and
    /// InvariantViolation("presentation-acyclic") for cyclic ones.
    VarietyCatalog(const AtomRegistry& registry, std::map<std::string, Presentation> entries);

    const std::map<std::string, Presentation>& entries() const noexcept { return entries_; }
    bool contains(std::string_view name) const { return entries_.find(std::string(name)) != entries_.end(); }

private:
    std::map<std::string, Presentation> entries_;
};

enum class ScissorMode { formal, normalized };

/// chi_c by the scissor rules: atoms give their class, removing a closed
/// piece subtracts, disjoint unions add, a fibration multiplies the base by
/// the fiber class (which must reduce to a polynomial in L).
MotiveClass chi_c_scissor(const AtomRegistry& registry, const RelationSet& relations, const VarietyCatalog& catalog,
                          std::string_view name, ScissorMode mode);

/// (chi_c, chi) of the affine cone over y: (1 + [y]L - [y], 1).
struct SerreCone {
    MotiveClass chi_c;
    MotiveClass chi;
};

SerreCone serre_cone(const AtomRegistry& registry, std::string_view y);

struct SerreReport {
    std::string atom;
    SerreCone formal;
    MotiveClass chi_c;  ///< normalized
    MotiveClass chi;    ///< normalized
    MotiveClass oracle; ///< 1 + [y](L - 1), normalized
    EPoly chi_c_realization;
    EPoly chi_realization;
    bool matches_oracle = false;
    bool classes_differ = false;
    bool euler_numbers_agree = false;
};

SerreReport serre_report(const AtomRegistry& registry, const RelationSet& relations, std::string_view y);

}  // namespace cdesc
