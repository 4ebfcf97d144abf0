#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cdesc/snc.hpp"

namespace cdesc {

using IntMatrix = std::vector<std::vector<long>>;

/// Exact determinant (fraction-free elimination over big integers).
/// Throws InvalidMapError for non-square input or a result beyond `long`.
long determinant(const IntMatrix& m);

/// Determinant of the (rows, cols) minor, 1-based indices; the empty minor is 1.
long minor_multiplicity(const IntMatrix& m, const Subset& rows, const Subset& cols);

IntMatrix int_product(const IntMatrix& a, const IntMatrix& b);
IntMatrix int_identity(std::size_t n);

using StrataKey = std::pair<Subset, Subset>;

/// f : (X', Y') -> (X, Y). Row a, column b of the multiplicity matrix is
/// the multiplicity of Y'_b in f^-1(Y_a). `strata_maps[(sigma, tau)]` names
/// the restriction f_(sigma,tau) : Y'_tau -> Y_sigma.
class PairMorphism {
public:
    /// Throws InvariantViolation ("pair-morphism-shape",
    /// "pair-morphism-support", "pair-morphism-strata").
    PairMorphism(SNCPair source, SNCPair target, IntMatrix multiplicities, std::map<StrataKey, std::string> strata_maps,
                 std::string ambient_map = "f");

    static PairMorphism identity(const SNCPair& pair);

    const SNCPair& source() const noexcept { return source_; }
    const SNCPair& target() const noexcept { return target_; }
    const IntMatrix& multiplicities() const noexcept { return m_; }
    const std::map<StrataKey, std::string>& strata_maps() const noexcept { return maps_; }
    const std::string& ambient_map() const noexcept { return ambient_map_; }

    bool is_identity() const;

private:
    SNCPair source_;
    SNCPair target_;
    IntMatrix m_;
    std::map<StrataKey, std::string> maps_;
    std::string ambient_map_;
};

/// m_(sigma,tau) f*_(sigma,tau) : h(Y_sigma)(-p) -> h(Y'_tau)(-p).
struct GysinMapComponent {
    Subset sigma;
    Subset tau;
    long multiplicity = 0;
    std::string map;
};

/// G(f) : G(X, Y) -> G(X', Y'), degree by degree.
struct GysinMorphism {
    std::vector<std::vector<GysinMapComponent>> components;

    long multiplicity(const Subset& sigma, const Subset& tau) const;
    bool is_identity() const;
};

/// Throws IncompleteMorphismError when a nonzero minor between nonempty
/// strata has no strata map.
GysinMorphism induced_morphism(const PairMorphism& f);

struct IdentityCount {
    std::size_t checked = 0;
    std::size_t failures = 0;

    bool ok() const noexcept { return failures == 0; }
};

/// Both sides of the column expansion
///   sum_l eps(sigma, sigma - sigma(l)) m_(sigma - sigma(l), nu) m_(sigma(l), beta)
///     = eps(nu + beta, nu) m_(sigma, nu + beta).
std::pair<long, long> laplace_sides(const IntMatrix& m, const Subset& sigma, const Subset& nu, int beta);

/// Every Laplace identity of m (|sigma| = |nu| + 1, beta not in nu).
IdentityCount laplace_identities(const IntMatrix& m);

/// G_p(f) o gamma_p = gamma'_p o G_(p+1)(f), componentwise over nonempty
/// strata, after rewriting f* o i_* with the excess formula.
IdentityCount chain_map_law(const PairMorphism& f);

/// m''_(sigma,rho) = sum_tau m_(sigma,tau) m'_(tau,rho) for M'' = M M', all sizes.
IdentityCount cauchy_binet(const IntMatrix& m, const IntMatrix& m_prime);

struct CompositionReport {
    bool composable = false;
    bool matrix_product = false;
    IdentityCount minors;
    bool gysin_maps = false;

    bool holds() const noexcept { return composable && matrix_product && minors.ok() && gysin_maps; }
};

/// Checks G(f o g) = G(g) o G(f) for g : (X'', Y'') -> (X', Y') and
/// f : (X', Y') -> (X, Y); `composite` is f o g, with M'' = M_f M_g.
CompositionReport compose_morphisms(const PairMorphism& composite, const PairMorphism& f, const PairMorphism& g);

}  // namespace cdesc
