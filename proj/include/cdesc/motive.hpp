#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdesc {

/// The atom whose class is the unit; twisting it gives powers of L.
inline constexpr std::string_view point_atom = "pt";

struct HodgeEntry {
    int k = 0;  ///< cohomological degree
    int p = 0;
    int q = 0;
    long h = 0;  ///< multiplicity, > 0

    friend bool operator==(const HodgeEntry&, const HodgeEntry&) = default;
};

/// A smooth projective variety known only through its Hodge table.
struct Atom {
    std::string name;
    int dim = 0;
    std::vector<HodgeEntry> hodge;

    /// Throws InvariantViolation naming "p+q=k", "poincare-self-duality" or "h00>=1".
    void validate() const;
};

class AtomRegistry {
public:
    /// Validates the atom; duplicate names are rejected.
    void add(Atom atom);
    bool contains(std::string_view name) const;
    const Atom& at(std::string_view name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, Atom, std::less<>> atoms_;
};

/// Element of the free abelian group on (atom, twist) pairs. Twist t stands
/// for tensoring with L^t; negative twists are allowed.
class MotiveClass {
public:
    using Key = std::pair<std::string, int>;

    MotiveClass() = default;

    static MotiveClass term(std::string atom, int twist = 0, long coefficient = 1);
    static MotiveClass one() { return term(std::string(point_atom)); }
    static MotiveClass lefschetz(int power = 1) { return term(std::string(point_atom), power); }

    const std::map<Key, long>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    long coefficient(const std::string& atom, int twist) const;

    MotiveClass& operator+=(const MotiveClass& other);
    MotiveClass& operator-=(const MotiveClass& other);
    MotiveClass& operator*=(long scalar);

    friend MotiveClass operator+(MotiveClass a, const MotiveClass& b) { return a += b; }
    friend MotiveClass operator-(MotiveClass a, const MotiveClass& b) { return a -= b; }
    friend MotiveClass operator*(MotiveClass a, long s) { return a *= s; }
    friend MotiveClass operator*(long s, MotiveClass a) { return a *= s; }
    friend MotiveClass operator-(MotiveClass a) { return a *= -1; }

    friend bool operator==(const MotiveClass&, const MotiveClass&) = default;

    /// "1 - L", "[P1]L^-1 + 2L^2"; unit terms first by twist, then atoms by name.
    std::string to_string() const;

private:
    void add_term(const Key& key, long coefficient);

    std::map<Key, long> terms_;
};

/// Parses the notation printed by MotiveClass::to_string ("0" is the zero class).
MotiveClass parse_class(std::string_view text);

/// Throws UnknownNameError for unregistered atoms.
MotiveClass class_of(const AtomRegistry& registry, std::string_view atom);

MotiveClass twist(const MotiveClass& c, int i);

/// Laurent polynomial in u, v with integer coefficients.
class EPoly {
public:
    using Exponent = std::pair<int, int>;

    EPoly() = default;
    static EPoly monomial(int u_exp, int v_exp, long coefficient = 1);

    const std::map<Exponent, long>& terms() const noexcept { return terms_; }
    long coefficient(int u_exp, int v_exp) const;

    EPoly& operator+=(const EPoly& other);
    EPoly& operator-=(const EPoly& other);
    friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
    friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
    friend EPoly operator*(const EPoly& a, const EPoly& b);
    friend bool operator==(const EPoly&, const EPoly&) = default;

    /// Value at u = v = 1.
    long euler_number() const;
    /// Substitutes u -> 1/u, v -> 1/v.
    EPoly inverted() const;

    std::string to_string() const;

private:
    void add_term(const Exponent& e, long coefficient);

    std::map<Exponent, long> terms_;
};

/// sum_k (-1)^k sum_{p,q} h^{p,q}(H^k) u^p v^q.
EPoly hodge_polynomial(const Atom& atom);

/// Linear extension of the atom polynomials; twist t multiplies by (uv)^t.
EPoly realize_E(const AtomRegistry& registry, const MotiveClass& c);

/// dual([A] L^t) = [A] L^(-dim A - t). Throws InvariantViolation for atoms
/// whose Hodge table is not self-dual.
MotiveClass dual(const AtomRegistry& registry, const MotiveClass& c);

/// One rewrite rule "[A] -> rhs".
struct Relation {
    std::string atom;
    MotiveClass rhs;
    std::string text;
};

/// Parses "lhs -> rhs"; the left side must be a single untwisted atom.
Relation parse_relation(std::string_view text);

/// User-declared relations, applied as a rewrite system toward the atoms
/// that have no rule.
class RelationSet {
public:
    RelationSet() = default;

    /// Checks every rule: known atoms, equal realizations on both sides, no
    /// rewrite cycle, and agreeing normal forms when an atom has several
    /// rules. Violations throw InvariantViolation ("relation-realization",
    /// "relation-termination", "relation-confluence").
    RelationSet(const AtomRegistry& registry, std::vector<Relation> rules);

    const std::vector<Relation>& rules() const noexcept { return rules_; }
    bool empty() const noexcept { return rules_.empty(); }

    MotiveClass normalize(const MotiveClass& c) const;

private:
    MotiveClass normalize_with(const MotiveClass& c, const std::map<std::string, std::size_t>& chosen) const;

    std::vector<Relation> rules_;
    std::map<std::string, std::size_t> first_rule_;
};

}  // namespace cdesc
