#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cdesc/matrix.hpp"

namespace cdesc {

/// Bounded cochain complex of finite-dimensional Q-vector spaces.
///
/// Degrees run over [lo, hi]; d(k) maps degree k to degree k+1 and has shape
/// dim(k+1) x dim(k). Zero spaces at both ends are trimmed on construction,
/// so two complexes compare equal iff they agree in every degree.
class QComplex {
public:
    QComplex() = default;

    /// `differentials[i]` is d^(lo+i); there must be dims.size()-1 of them
    /// (or none when dims is empty). Throws InvalidMapError on shape errors
    /// and InvariantViolation("d^2=0") when consecutive differentials do not compose to zero.
    QComplex(int lo, std::vector<std::size_t> dims, std::vector<Matrix> differentials);

    static QComplex zero() { return {}; }
    static QComplex concentrated(int degree, std::size_t dim);
    static QComplex zero_differential(int lo, std::vector<std::size_t> dims);

    bool is_zero() const noexcept { return dims_.empty(); }
    int lo() const noexcept { return lo_; }
    /// lo()-1 for the zero complex.
    int hi() const noexcept { return lo_ + static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int k) const noexcept;
    std::size_t total_dim() const noexcept;
    Matrix d(int k) const;

    friend bool operator==(const QComplex&, const QComplex&) = default;

private:
    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> diffs_;
};

/// Degreewise map f^k : source^k -> target^k commuting with differentials.
class ChainMap {
public:
    ChainMap() = default;

    /// Missing components are zero. Throws InvalidMapError on a shape
    /// mismatch or when d f != f d in some degree.
    ChainMap(QComplex source, QComplex target, std::map<int, Matrix> components);

    static ChainMap identity(const QComplex& c);
    static ChainMap zero(const QComplex& source, const QComplex& target);

    const QComplex& source() const noexcept { return source_; }
    const QComplex& target() const noexcept { return target_; }
    Matrix component(int k) const;
    /// Degrees where both sides are nonzero.
    std::vector<int> degrees() const;

    friend bool operator==(const ChainMap& a, const ChainMap& b);

private:
    QComplex source_;
    QComplex target_;
    std::map<int, Matrix> components_;
};

/// g o f.
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a);

QComplex direct_sum(const QComplex& a, const QComplex& b);
ChainMap direct_sum(const ChainMap& a, const ChainMap& b);

/// dim ker d^k - rank d^(k-1) for every degree in [lo, hi].
std::map<int, std::size_t> homology_dims(const QComplex& c);
bool is_acyclic(const QComplex& c);

/// Cone(f)^k = source^(k+1) + target^k, d = [[-d_src, 0], [f, d_tgt]].
QComplex cone(const ChainMap& f);

/// Membership test for the class of weak equivalences: Cone(f) is acyclic.
bool is_quasi_iso(const ChainMap& f);

struct Cylinder {
    QComplex complex;
    ChainMap delta0;
    ChainMap delta1;
    ChainMap sigma;
};

/// Cyl^k = C^k + C^(k+1) + C^k with d(x, h, y) = (dx + h, -dh, dy - h).
/// delta0 and delta1 include the outer summands; sigma(x, h, y) = x + y.
Cylinder cylinder(const QComplex& c);

/// h^k : C^k -> C^(k-1), keyed by the source degree k.
using Contraction = std::map<int, Matrix>;

/// Checks 1 = h d + d h in every degree of c.
bool is_contraction(const QComplex& c, const Contraction& h);

/// Over a field a complex is contractible iff it is acyclic; builds h from
/// a complement of ker d in each degree. nullopt when c has homology.
std::optional<Contraction> find_contraction(const QComplex& c);

struct ContractileSplitting {
    /// Zero-differential complex with P^k = im(d h) in C^k.
    QComplex p;
    /// Columns: a basis of P^k inside C^k.
    std::map<int, Matrix> p_basis;
    /// Cone of id_P.
    QComplex cone_of_p;
    /// Isomorphism Cone(id_P) -> C and its inverse.
    ChainMap to_complex;
    ChainMap from_complex;
};

/// Splits a contractible complex as the cone of a zero-differential complex.
/// Throws ContractViolation when h is not a contraction of c.
ContractileSplitting contractile_split(const QComplex& c, const Contraction& h);

/// Alternating sum of dimensions.
long euler_class(const QComplex& c);

}  // namespace cdesc
