#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "cdesc/complex.hpp"
#include "cdesc/cubical.hpp"

namespace cdesc {

using EdgeKey = std::pair<CubeIndex, CubeIndex>;

/// Covariant functor from a cubical order to complexes, presented by its
/// values on covering edges. Absent vertices are zero complexes and absent
/// edges are zero maps. Construction checks that every 2-face commutes.
class CubicalDiagram {
public:
    CubicalDiagram(CubicalOrder shape, std::map<CubeIndex, QComplex> vertices, std::map<EdgeKey, ChainMap> edges);

    const CubicalOrder& shape() const noexcept { return shape_; }
    const QComplex& vertex(const CubeIndex& a) const;
    ChainMap edge(const CubeIndex& from, const CubeIndex& to) const;

private:
    CubicalOrder shape_;
    std::map<CubeIndex, QComplex> vertices_;
    std::map<EdgeKey, ChainMap> edges_;
};

/// Vertexwise family of chain maps commuting with all edge maps.
class DiagramMorphism {
public:
    DiagramMorphism(CubicalDiagram source, CubicalDiagram target, std::map<CubeIndex, ChainMap> components);

    static DiagramMorphism identity(const CubicalDiagram& d);

    const CubicalDiagram& source() const noexcept { return source_; }
    const CubicalDiagram& target() const noexcept { return target_; }
    ChainMap component(const CubeIndex& a) const;

private:
    CubicalDiagram source_;
    CubicalDiagram target_;
    std::map<CubeIndex, ChainMap> components_;
};

/// Block bookkeeping for s(d): where the (vertex a, degree n) summand sits.
class SimpleLayout {
public:
    explicit SimpleLayout(const CubicalDiagram& d) : d_(&d) {}

    /// Dimension of vertex a in the slot it occupies in s(d)^n.
    std::size_t block_dim(const CubeIndex& a, int n) const;
    std::size_t offset(const CubeIndex& a, int n) const;
    std::size_t dim(int n) const;

private:
    const CubicalDiagram* d_;
};

/// s(d)^n = sum over a of d_a^(n - |a|). On the a-summand the differential
/// is (-1)^|a| d_a plus, for each edge a -> a + e_i, the edge map with sign
/// (-1)^(number of ones of a before i).
QComplex simple(const CubicalDiagram& d);

/// Induced block-diagonal map on simple complexes.
ChainMap simple_map(const DiagramMorphism& f);

/// The diagram X(0) -> X(1) over the augmented 0-cube.
CubicalDiagram tot(const ChainMap& f);

/// tot of a morphism of diagrams: shape x {0,1}, the new last coordinate
/// indexing source (0) and target (1).
CubicalDiagram tot(const DiagramMorphism& f);

/// Vertexwise direct sum; throws DiagramError on shape mismatch.
CubicalDiagram product_diagram(const CubicalDiagram& x, const CubicalDiagram& y);

/// Restriction to a cubical sub-order with the same arity.
CubicalDiagram restrict(const CubicalDiagram& d, const CubicalOrder& sub);

/// Factors of a product shape; throws DiagramError when `split` does not
/// describe the shape as a product.
std::pair<CubicalOrder, CubicalOrder> split_shape(const CubicalOrder& shape, const CoordinateSplit& split);

enum class Collapse { left_first, right_first };

/// Applies s along one factor of a product shape, leaving a diagram over the other factor.
CubicalDiagram partial_simple(const CubicalDiagram& d, const CoordinateSplit& split, Collapse which);
DiagramMorphism partial_simple_map(const DiagramMorphism& f, const CoordinateSplit& split, Collapse which);

struct IteratedSimple {
    /// s over the right factor of (s over the left factor).
    QComplex left_first;
    QComplex total;
    /// s over the left factor of (s over the right factor).
    QComplex right_first;
    /// Signed permutation isomorphisms total -> left_first / right_first.
    ChainMap total_to_left_first;
    ChainMap total_to_right_first;
};

IteratedSimple iterate_simple(const CubicalDiagram& d, const CoordinateSplit& split);

struct QisImplication {
    bool all_vertices_qis = false;
    bool total_qis = false;

    bool holds() const noexcept { return !all_vertices_qis || total_qis; }
};

/// Evaluates "vertexwise quasi-iso implies s(f) quasi-iso" on one instance;
/// the verdict for s(f) is reported regardless of the hypothesis.
QisImplication componentwise_qis_implies_total(const DiagramMorphism& f);

/// Inclusion of the weight filtration step F^p = sum over |a| >= p into s(d).
ChainMap weight_filtration(const CubicalDiagram& d, std::size_t p);

/// Gr^p = sum over |a| = p of d_a[-p] with differential (-1)^p d_a.
QComplex weight_graded_piece(const CubicalDiagram& d, std::size_t p);

}  // namespace cdesc
