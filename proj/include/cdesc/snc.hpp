#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdesc/motive.hpp"

namespace cdesc {

/// Strictly increasing list of 1-based component indices.
using Subset = std::vector<int>;

/// "1,2" <-> {1, 2}; "" is the empty subset.
Subset parse_subset(std::string_view text);
std::string subset_key(const Subset& s);

/// All k-element subsets of {1..n} in lexicographic order.
std::vector<Subset> subsets_of_size(int n, int k);

struct Stratum {
    Subset sigma;
    std::string atom;
    int dim = 0;
};

/// Smooth projective ambient X with a normal-crossing divisor Y = Y_1 + ... + Y_r
/// whose strata Y_sigma = intersection of the Y_a (a in sigma) are declared atoms.
/// Components may repeat an atom under distinct labels.
class SNCPair {
public:
    /// `strata` maps nonempty subsets to atoms; unlisted subsets are empty
    /// intersections. Every component must have its singleton stratum.
    /// Throws InvariantViolation ("snc-monotone", "snc-codimension",
    /// "snc-component") or UnknownNameError.
    SNCPair(const AtomRegistry& registry, std::string ambient, std::vector<std::string> components,
            std::map<Subset, std::string> strata);

    const std::string& ambient() const noexcept { return ambient_; }
    int dim() const noexcept { return dim_; }
    const std::vector<std::string>& components() const noexcept { return components_; }
    int rank() const noexcept { return static_cast<int>(components_.size()); }

    /// Atom of Y_sigma (the ambient for the empty subset); nullopt when empty.
    std::optional<std::string> stratum(const Subset& sigma) const;

    /// Nonempty strata ordered by weight, then lexicographically.
    const std::vector<Stratum>& strata() const noexcept { return strata_; }
    const std::map<Subset, std::string>& declared_strata() const noexcept { return declared_; }

    friend bool operator==(const SNCPair& a, const SNCPair& b) {
        return a.ambient_ == b.ambient_ && a.components_ == b.components_ && a.declared_ == b.declared_;
    }

private:
    std::string ambient_;
    int dim_ = 0;
    std::vector<std::string> components_;
    std::map<Subset, std::string> declared_;
    std::vector<Stratum> strata_;
};

std::vector<Stratum> strata_lattice(const SNCPair& pair);

/// Sign of the Gysin map Y_sigma -> Y_(sigma minus sigma(l)): (-1)^(l+1), l 1-based.
int gysin_sign(const Subset& sigma, int removed);

/// sum over sigma of (-1)^|sigma| [Y_sigma].
MotiveClass chi_c_open(const SNCPair& pair);

/// sum over sigma of (-1)^|sigma| [Y_sigma] L^|sigma|.
MotiveClass chi_open(const SNCPair& pair);

struct GysinTerm {
    Subset sigma;
    std::string atom;
    int twist = 0;
};

/// Component of gamma_p : G_(p+1) -> G_p, standing for sign * i_(from, to)_*.
struct GysinEntry {
    Subset from;
    Subset to;
    int sign = 0;
};

/// G_p = sum over |sigma| = p of h(Y_sigma)(-p), in chain degree p.
class GysinComplex {
public:
    explicit GysinComplex(const SNCPair& pair);

    std::size_t length() const noexcept { return terms_.size(); }
    const std::vector<GysinTerm>& terms(std::size_t p) const { return terms_.at(p); }
    /// gamma_p : G_(p+1) -> G_p.
    const std::vector<GysinEntry>& differential(std::size_t p) const { return differential_.at(p); }

    /// sum_p (-1)^p [G_p].
    MotiveClass euler_class() const;

    /// Composes gamma_p o gamma_(p+1) symbolically using
    /// i_(mu,nu)* o i_(sigma,mu)* = i_(sigma,nu)* and returns the number of
    /// (sigma, nu) symbols whose coefficient is nonzero.
    std::size_t gamma_squared_defects() const;

private:
    std::vector<std::vector<GysinTerm>> terms_;
    std::vector<std::vector<GysinEntry>> differential_;
};

inline GysinComplex gysin_complex(const SNCPair& pair) { return GysinComplex(pair); }

}  // namespace cdesc
