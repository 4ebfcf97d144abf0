#include "cdesc/descent.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "cdesc/error.hpp"

namespace cdesc {
namespace {

int weight_of(const CubeIndex& a) { return static_cast<int>(a.weight()); }

Rational sign(std::size_t exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

std::string edge_name(const CubicalOrder& shape, const CubeIndex& a, const CubeIndex& b) {
    return a.to_string(shape.arity()) + "->" + b.to_string(shape.arity());
}

}  // namespace

CubicalDiagram::CubicalDiagram(CubicalOrder shape, std::map<CubeIndex, QComplex> vertices,
                               std::map<EdgeKey, ChainMap> edges)
    : shape_(std::move(shape)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (const auto& [a, c] : vertices_)
        if (!shape_.contains(a)) throw DiagramError("vertex " + a.to_string(shape_.arity()) + " is not in the shape");
    const auto covering = covering_edges(shape_);
    for (const auto& [key, f] : edges_) {
        const bool is_edge = std::any_of(covering.begin(), covering.end(), [&](const CoveringEdge& e) {
            return e.from == key.first && e.to == key.second;
        });
        if (!is_edge) throw DiagramError("edge " + edge_name(shape_, key.first, key.second) + " is not a covering edge");
        if (f.source() != vertex(key.first) || f.target() != vertex(key.second))
            throw DiagramError("edge " + edge_name(shape_, key.first, key.second) + " does not connect its vertices");
    }
    for (const auto& a : shape_.members())
        for (std::size_t i = 0; i < shape_.arity(); ++i)
            for (std::size_t j = i + 1; j < shape_.arity(); ++j) {
                if (a.bit(i) || a.bit(j)) continue;
                const CubeIndex ai = a.with(i), aj = a.with(j), aij = ai.with(j);
                if (!shape_.contains(ai) || !shape_.contains(aj) || !shape_.contains(aij)) continue;
                if (compose(edge(ai, aij), edge(a, ai)) != compose(edge(aj, aij), edge(a, aj)))
                    throw DiagramError("face at " + a.to_string(shape_.arity()) + " in directions " +
                                       std::to_string(i) + "," + std::to_string(j) + " does not commute");
            }
}

const QComplex& CubicalDiagram::vertex(const CubeIndex& a) const {
    static const QComplex zero;
    if (!shape_.contains(a)) throw DiagramError("vertex " + a.to_string(shape_.arity()) + " is not in the shape");
    auto it = vertices_.find(a);
    return it == vertices_.end() ? zero : it->second;
}

ChainMap CubicalDiagram::edge(const CubeIndex& from, const CubeIndex& to) const {
    auto it = edges_.find({from, to});
    if (it != edges_.end()) return it->second;
    return ChainMap::zero(vertex(from), vertex(to));
}

DiagramMorphism::DiagramMorphism(CubicalDiagram source, CubicalDiagram target, std::map<CubeIndex, ChainMap> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    if (source_.shape() != target_.shape()) throw DiagramError("diagram morphism between different shapes");
    for (const auto& [a, f] : components_) {
        if (!source_.shape().contains(a)) throw DiagramError("morphism component outside the shape");
        if (f.source() != source_.vertex(a) || f.target() != target_.vertex(a))
            throw DiagramError("morphism component at " + a.to_string(source_.shape().arity()) +
                               " does not connect the vertices");
    }
    for (const auto& e : covering_edges(source_.shape()))
        if (compose(target_.edge(e.from, e.to), component(e.from)) != compose(component(e.to), source_.edge(e.from, e.to)))
            throw DiagramError("morphism does not commute with edge " + edge_name(source_.shape(), e.from, e.to));
}

DiagramMorphism DiagramMorphism::identity(const CubicalDiagram& d) {
    std::map<CubeIndex, ChainMap> comps;
    for (const auto& a : d.shape().members()) comps.emplace(a, ChainMap::identity(d.vertex(a)));
    return DiagramMorphism(d, d, std::move(comps));
}

ChainMap DiagramMorphism::component(const CubeIndex& a) const {
    auto it = components_.find(a);
    if (it != components_.end()) return it->second;
    return ChainMap::zero(source_.vertex(a), target_.vertex(a));
}

std::size_t SimpleLayout::block_dim(const CubeIndex& a, int n) const { return d_->vertex(a).dim(n - weight_of(a)); }

std::size_t SimpleLayout::offset(const CubeIndex& a, int n) const {
    std::size_t off = 0;
    for (const auto& b : d_->shape().members()) {
        if (b == a) return off;
        off += block_dim(b, n);
    }
    throw DiagramError("layout: index not in shape");
}

std::size_t SimpleLayout::dim(int n) const {
    std::size_t total = 0;
    for (const auto& b : d_->shape().members()) total += block_dim(b, n);
    return total;
}

namespace {

std::pair<int, int> simple_range(const CubicalDiagram& d) {
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& a : d.shape().members()) {
        const QComplex& c = d.vertex(a);
        if (c.is_zero()) continue;
        const int l = c.lo() + weight_of(a), h = c.hi() + weight_of(a);
        lo = any ? std::min(lo, l) : l;
        hi = any ? std::max(hi, h) : h;
        any = true;
    }
    return {lo, hi};
}

}  // namespace

QComplex simple(const CubicalDiagram& d) {
    const auto [lo, hi] = simple_range(d);
    if (hi < lo) return {};
    const SimpleLayout layout(d);
    const auto edges = covering_edges(d.shape());
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) dims.push_back(layout.dim(n));
    for (int n = lo; n < hi; ++n) {
        Matrix m(layout.dim(n + 1), layout.dim(n));
        for (const auto& a : d.shape().members()) {
            const int inner = n - weight_of(a);
            m.set_block(layout.offset(a, n + 1), layout.offset(a, n), sign(a.weight()) * d.vertex(a).d(inner));
        }
        for (const auto& e : edges) {
            const int inner = n - weight_of(e.from);
            m.set_block(layout.offset(e.to, n + 1), layout.offset(e.from, n),
                        sign(e.from.ones_before(e.direction)) * d.edge(e.from, e.to).component(inner));
        }
        diffs.push_back(std::move(m));
    }
    return QComplex(lo, std::move(dims), std::move(diffs));
}

ChainMap simple_map(const DiagramMorphism& f) {
    const QComplex src = simple(f.source());
    const QComplex tgt = simple(f.target());
    const SimpleLayout ls(f.source()), lt(f.target());
    std::map<int, Matrix> comps;
    for (int n = src.lo(); n <= src.hi(); ++n) {
        Matrix m(tgt.dim(n), src.dim(n));
        for (const auto& a : f.source().shape().members())
            m.set_block(lt.offset(a, n), ls.offset(a, n), f.component(a).component(n - weight_of(a)));
        comps.emplace(n, std::move(m));
    }
    return ChainMap(src, tgt, std::move(comps));
}

CubicalDiagram tot(const ChainMap& f) {
    const CubeIndex zero(0), one(1);
    return CubicalDiagram(standard_cube(0, true), {{zero, f.source()}, {one, f.target()}}, {{{zero, one}, f}});
}

CubicalDiagram tot(const DiagramMorphism& f) {
    const CubicalOrder& shape = f.source().shape();
    const ProductOrder prod = product(shape, standard_cube(0, true));
    const CubeIndex zero(0), one(1);
    std::map<CubeIndex, QComplex> vertices;
    std::map<EdgeKey, ChainMap> edges;
    for (const auto& a : shape.members()) {
        vertices.emplace(prod.split.join(a, zero), f.source().vertex(a));
        vertices.emplace(prod.split.join(a, one), f.target().vertex(a));
        edges.emplace(EdgeKey{prod.split.join(a, zero), prod.split.join(a, one)}, f.component(a));
    }
    for (const auto& e : covering_edges(shape)) {
        edges.emplace(EdgeKey{prod.split.join(e.from, zero), prod.split.join(e.to, zero)}, f.source().edge(e.from, e.to));
        edges.emplace(EdgeKey{prod.split.join(e.from, one), prod.split.join(e.to, one)}, f.target().edge(e.from, e.to));
    }
    return CubicalDiagram(prod.order, std::move(vertices), std::move(edges));
}

CubicalDiagram product_diagram(const CubicalDiagram& x, const CubicalDiagram& y) {
    if (x.shape() != y.shape()) throw DiagramError("product of diagrams over different shapes");
    std::map<CubeIndex, QComplex> vertices;
    std::map<EdgeKey, ChainMap> edges;
    for (const auto& a : x.shape().members()) vertices.emplace(a, direct_sum(x.vertex(a), y.vertex(a)));
    for (const auto& e : covering_edges(x.shape()))
        edges.emplace(EdgeKey{e.from, e.to}, direct_sum(x.edge(e.from, e.to), y.edge(e.from, e.to)));
    return CubicalDiagram(x.shape(), std::move(vertices), std::move(edges));
}

CubicalDiagram restrict(const CubicalDiagram& d, const CubicalOrder& sub) {
    if (sub.arity() != d.shape().arity()) throw DiagramError("restriction to an order of different arity");
    std::map<CubeIndex, QComplex> vertices;
    std::map<EdgeKey, ChainMap> edges;
    for (const auto& a : sub.members()) vertices.emplace(a, d.vertex(a));
    for (const auto& e : covering_edges(sub)) edges.emplace(EdgeKey{e.from, e.to}, d.edge(e.from, e.to));
    return CubicalDiagram(sub, std::move(vertices), std::move(edges));
}

std::pair<CubicalOrder, CubicalOrder> split_shape(const CubicalOrder& shape, const CoordinateSplit& split) {
    if (split.left_arity + split.right_arity != shape.arity())
        throw DiagramError("coordinate split does not match the arity of the shape");
    std::vector<CubeIndex> left, right;
    for (const auto& a : shape.members()) {
        left.push_back(split.left_part(a));
        right.push_back(split.right_part(a));
    }
    CubicalOrder l(std::move(left), split.left_arity), r(std::move(right), split.right_arity);
    if (l.size() * r.size() != shape.size()) throw DiagramError("shape is not the product described by the split");
    return {std::move(l), std::move(r)};
}

namespace {

/// The diagram obtained by fixing the coordinates of the factor that is not
/// collapsed. `fixed` lives in the kept factor.
CubicalDiagram slice(const CubicalDiagram& d, const CoordinateSplit& split, Collapse which, const CubeIndex& fixed,
                     const CubicalOrder& collapsed) {
    auto join = [&](const CubeIndex& moving) {
        return which == Collapse::left_first ? split.join(moving, fixed) : split.join(fixed, moving);
    };
    std::map<CubeIndex, QComplex> vertices;
    std::map<EdgeKey, ChainMap> edges;
    for (const auto& a : collapsed.members()) vertices.emplace(a, d.vertex(join(a)));
    for (const auto& e : covering_edges(collapsed)) edges.emplace(EdgeKey{e.from, e.to}, d.edge(join(e.from), join(e.to)));
    return CubicalDiagram(collapsed, std::move(vertices), std::move(edges));
}

DiagramMorphism slice_morphism(const DiagramMorphism& f, const CoordinateSplit& split, Collapse which,
                               const CubeIndex& fixed, const CubicalOrder& collapsed) {
    auto join = [&](const CubeIndex& moving) {
        return which == Collapse::left_first ? split.join(moving, fixed) : split.join(fixed, moving);
    };
    std::map<CubeIndex, ChainMap> comps;
    for (const auto& a : collapsed.members()) comps.emplace(a, f.component(join(a)));
    return DiagramMorphism(slice(f.source(), split, which, fixed, collapsed),
                           slice(f.target(), split, which, fixed, collapsed), std::move(comps));
}

/// Edge of the partially collapsed diagram: the kept-direction edges of d,
/// slice by slice.
DiagramMorphism slice_edge(const CubicalDiagram& d, const CoordinateSplit& split, Collapse which,
                           const CubeIndex& from, const CubeIndex& to, const CubicalOrder& collapsed) {
    auto join = [&](const CubeIndex& moving, const CubeIndex& kept) {
        return which == Collapse::left_first ? split.join(moving, kept) : split.join(kept, moving);
    };
    std::map<CubeIndex, ChainMap> comps;
    for (const auto& a : collapsed.members()) comps.emplace(a, d.edge(join(a, from), join(a, to)));
    return DiagramMorphism(slice(d, split, which, from, collapsed), slice(d, split, which, to, collapsed),
                           std::move(comps));
}

}  // namespace

CubicalDiagram partial_simple(const CubicalDiagram& d, const CoordinateSplit& split, Collapse which) {
    auto [left, right] = split_shape(d.shape(), split);
    const CubicalOrder& collapsed = which == Collapse::left_first ? left : right;
    const CubicalOrder& kept = which == Collapse::left_first ? right : left;
    std::map<CubeIndex, QComplex> vertices;
    std::map<EdgeKey, ChainMap> edges;
    for (const auto& b : kept.members()) vertices.emplace(b, simple(slice(d, split, which, b, collapsed)));
    for (const auto& e : covering_edges(kept))
        edges.emplace(EdgeKey{e.from, e.to}, simple_map(slice_edge(d, split, which, e.from, e.to, collapsed)));
    return CubicalDiagram(kept, std::move(vertices), std::move(edges));
}

DiagramMorphism partial_simple_map(const DiagramMorphism& f, const CoordinateSplit& split, Collapse which) {
    auto [left, right] = split_shape(f.source().shape(), split);
    const CubicalOrder& collapsed = which == Collapse::left_first ? left : right;
    const CubicalOrder& kept = which == Collapse::left_first ? right : left;
    std::map<CubeIndex, ChainMap> comps;
    for (const auto& b : kept.members()) comps.emplace(b, simple_map(slice_morphism(f, split, which, b, collapsed)));
    return DiagramMorphism(partial_simple(f.source(), split, which), partial_simple(f.target(), split, which),
                           std::move(comps));
}

IteratedSimple iterate_simple(const CubicalDiagram& d, const CoordinateSplit& split) {
    auto [left, right] = split_shape(d.shape(), split);
    const CubicalDiagram outer_l = partial_simple(d, split, Collapse::left_first);
    const CubicalDiagram outer_r = partial_simple(d, split, Collapse::right_first);
    IteratedSimple out;
    out.total = simple(d);
    out.left_first = simple(outer_l);
    out.right_first = simple(outer_r);

    std::map<CubeIndex, CubicalDiagram> slices_l, slices_r;
    for (const auto& b : right.members()) slices_l.emplace(b, slice(d, split, Collapse::left_first, b, left));
    for (const auto& a : left.members()) slices_r.emplace(a, slice(d, split, Collapse::right_first, a, right));

    const SimpleLayout total_layout(d), outer_l_layout(outer_l), outer_r_layout(outer_r);
    std::map<int, Matrix> to_l, to_r;
    for (int n = out.total.lo(); n <= out.total.hi(); ++n) {
        Matrix ml(out.left_first.dim(n), out.total.dim(n));
        Matrix mr(out.right_first.dim(n), out.total.dim(n));
        for (const auto& a : left.members())
            for (const auto& b : right.members()) {
                const CubeIndex g = split.join(a, b);
                const std::size_t dim = total_layout.block_dim(g, n);
                if (dim == 0) continue;
                const std::size_t col = total_layout.offset(g, n);
                const int wa = weight_of(a), wb = weight_of(b);
                const std::size_t row_l =
                    outer_l_layout.offset(b, n) + SimpleLayout(slices_l.at(b)).offset(a, n - wb);
                const std::size_t row_r =
                    outer_r_layout.offset(a, n) + SimpleLayout(slices_r.at(a)).offset(b, n - wa);
                ml.set_block(row_l, col, sign(a.weight() * b.weight()) * Matrix::identity(dim));
                mr.set_block(row_r, col, Matrix::identity(dim));
            }
        to_l.emplace(n, std::move(ml));
        to_r.emplace(n, std::move(mr));
    }
    out.total_to_left_first = ChainMap(out.total, out.left_first, std::move(to_l));
    out.total_to_right_first = ChainMap(out.total, out.right_first, std::move(to_r));
    return out;
}

QisImplication componentwise_qis_implies_total(const DiagramMorphism& f) {
    QisImplication verdict;
    verdict.all_vertices_qis = std::all_of(f.source().shape().members().begin(), f.source().shape().members().end(),
                                           [&](const CubeIndex& a) { return is_quasi_iso(f.component(a)); });
    verdict.total_qis = is_quasi_iso(simple_map(f));
    return verdict;
}

ChainMap weight_filtration(const CubicalDiagram& d, std::size_t p) {
    std::vector<CubeIndex> upper;
    for (const auto& a : d.shape().members())
        if (a.weight() >= p) upper.push_back(a);
    const QComplex total = simple(d);
    if (upper.empty()) return ChainMap::zero({}, total);
    const CubicalDiagram sub = restrict(d, CubicalOrder(upper, d.shape().arity()));
    const QComplex step = simple(sub);
    const SimpleLayout ls(sub), lt(d);
    std::map<int, Matrix> comps;
    for (int n = step.lo(); n <= step.hi(); ++n) {
        Matrix m(total.dim(n), step.dim(n));
        for (const auto& a : upper) m.set_block(lt.offset(a, n), ls.offset(a, n), Matrix::identity(ls.block_dim(a, n)));
        comps.emplace(n, std::move(m));
    }
    return ChainMap(step, total, std::move(comps));
}

QComplex weight_graded_piece(const CubicalDiagram& d, std::size_t p) {
    QComplex graded;
    const int shift = static_cast<int>(p);
    for (const auto& a : d.shape().members()) {
        if (a.weight() != p) continue;
        const QComplex& c = d.vertex(a);
        if (c.is_zero()) continue;
        std::vector<std::size_t> dims;
        std::vector<Matrix> diffs;
        for (int k = c.lo(); k <= c.hi(); ++k) dims.push_back(c.dim(k));
        for (int k = c.lo(); k < c.hi(); ++k) diffs.push_back(sign(p) * c.d(k));
        graded = direct_sum(graded, QComplex(c.lo() + shift, std::move(dims), std::move(diffs)));
    }
    return graded;
}

}  // namespace cdesc
