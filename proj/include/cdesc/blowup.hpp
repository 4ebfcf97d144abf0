#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cdesc/descent.hpp"
#include "cdesc/matrix.hpp"
#include "cdesc/motive.hpp"
#include "cdesc/scissor.hpp"
#include "cdesc/snc.hpp"

namespace cdesc {

/// Blow-up of X along a smooth center Y of codimension r; Ỹ is the
/// exceptional divisor.
struct BlowupSquare {
    std::string x;
    std::string y;
    std::string x_tilde;
    std::string y_tilde;
    int codim = 1;
};

struct ManinDecomposition {
    MotiveClass predicted_x_tilde;  ///< [X] + sum_{i=1}^{r-1} [Y] L^i
    MotiveClass predicted_y_tilde;  ///< sum_{i=0}^{r-1} [Y] L^i
    EPoly x_tilde_realization;
    EPoly y_tilde_realization;
    bool x_tilde_class = false;  ///< equal after normalization
    bool y_tilde_class = false;
    bool x_tilde_realized = false;  ///< equal E-polynomials
    bool y_tilde_realized = false;

    bool holds() const noexcept { return x_tilde_class && y_tilde_class && x_tilde_realized && y_tilde_realized; }
};

/// Throws InvariantViolation("blowup-dims") when the declared dimensions do
/// not fit a blow-up along a codimension r center.
ManinDecomposition manin_decomposition(const AtomRegistry& registry, const RelationSet& relations,
                                       const BlowupSquare& square);

struct Bidegree {
    int k = 0;
    int p = 0;
    int q = 0;

    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
    std::string to_string() const;
};

/// h^{p,q}(H^k) of the atom.
std::size_t hodge_number(const Atom& atom, const Bidegree& b);

/// Pullbacks in one bidegree: i : H(X) -> H(Y), f : H(X) -> H(X~),
/// g : H(Y) -> H(Y~), j : H(X~) -> H(Y~).
struct SquareMaps {
    Matrix i;
    Matrix f;
    Matrix g;
    Matrix j;
};

/// Cohomology of a blow-up square with its four pullbacks, bidegree by
/// bidegree. Bidegrees that are not listed carry zero maps.
class RealizedSquare {
public:
    /// Throws InvalidMapError on shape mismatches and DiagramError when
    /// g i != j f in some bidegree.
    RealizedSquare(const AtomRegistry& registry, BlowupSquare atoms, std::map<Bidegree, SquareMaps> maps);

    const BlowupSquare& atoms() const noexcept { return atoms_; }
    const std::map<Bidegree, SquareMaps>& maps() const noexcept { return maps_; }
    /// Every bidegree in which some corner is nonzero.
    std::vector<Bidegree> bidegrees() const;
    SquareMaps at(const Bidegree& b) const;
    /// The square over the augmented 1-cube (X = 00, Y = 10, X~ = 01, Y~ = 11)
    /// as complexes concentrated in degree 0.
    CubicalDiagram diagram(const Bidegree& b) const;

private:
    std::map<Bidegree, std::size_t> dims_x_, dims_y_, dims_xt_, dims_yt_;
    BlowupSquare atoms_;
    std::map<Bidegree, SquareMaps> maps_;
};

struct ManinDegree {
    Bidegree bidegree;
    bool injective = false;
    bool middle_exact = false;
    bool surjective = false;
    bool split = false;           ///< retraction and section verified
    bool simple_acyclic = false;  ///< s of the square is acyclic

    bool holds() const noexcept { return injective && middle_exact && surjective && split && simple_acyclic; }
};

struct ManinSequenceReport {
    std::vector<ManinDegree> degrees;

    bool holds() const noexcept;
};

/// 0 -> H(X) -(i,f)-> H(Y) + H(X~) -(g,-j)-> H(Y~) -> 0 in every bidegree.
ManinSequenceReport manin_sequence_check(const RealizedSquare& square);

/// A square of (possibly open) varieties named in a VarietyCatalog or the atom registry.
struct ClassSquare {
    std::string x;
    std::string y;
    std::string x_tilde;
    std::string y_tilde;
};

struct DescentReport {
    MotiveClass defect;  ///< [X] - [Y] - [X~] + [Y~], normalized
    EPoly realized_defect;
    bool class_zero = false;
    bool realization_zero = false;

    bool holds() const noexcept { return class_zero && realization_zero; }
};

DescentReport descent_D_check(const AtomRegistry& registry, const RelationSet& relations, const VarietyCatalog& catalog,
                              const ClassSquare& square);

/// Acyclicity of the simple complex of the realized square in every bidegree.
bool descent_D_realized(const RealizedSquare& square);

struct IndependenceReport {
    MotiveClass chi_open_a;
    MotiveClass chi_open_b;
    MotiveClass chi_c_open_a;
    MotiveClass chi_c_open_b;
    bool chi_open_equal = false;
    bool chi_c_open_equal = false;

    bool equal() const noexcept { return chi_open_equal && chi_c_open_equal; }
};

/// Compares chi_open and chi_c_open (normalized) of two compactifications
/// declared to have the same open part. Throws InvariantViolation
/// ("open-part") when the declarations disagree.
IndependenceReport compactification_independence(const RelationSet& relations, const std::string& open_part_a,
                                                  const SNCPair& a, const std::string& open_part_b, const SNCPair& b);

}  // namespace cdesc
