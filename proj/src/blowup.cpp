#include "cdesc/blowup.hpp"

#include <set>

#include "cdesc/error.hpp"

namespace cdesc {

ManinDecomposition manin_decomposition(const AtomRegistry& registry, const RelationSet& relations,
                                       const BlowupSquare& square) {
    const int dx = registry.at(square.x).dim;
    const int dy = registry.at(square.y).dim;
    const int dxt = registry.at(square.x_tilde).dim;
    const int dyt = registry.at(square.y_tilde).dim;
    const int r = square.codim;
    if (r < 1) throw InvariantViolation("blowup-dims", "center codimension must be at least 1");
    if (dy != dx - r || dxt != dx || dyt != dx - 1)
        throw InvariantViolation("blowup-dims", "dimensions X=" + std::to_string(dx) + ", Y=" + std::to_string(dy) +
                                                    ", X~=" + std::to_string(dxt) + ", Y~=" + std::to_string(dyt) +
                                                    " do not fit a blow-up along codimension " + std::to_string(r));
    ManinDecomposition out;
    const MotiveClass y = class_of(registry, square.y);
    out.predicted_x_tilde = class_of(registry, square.x);
    for (int i = 1; i < r; ++i) out.predicted_x_tilde += twist(y, i);
    for (int i = 0; i < r; ++i) out.predicted_y_tilde += twist(y, i);

    const MotiveClass xt = class_of(registry, square.x_tilde);
    const MotiveClass yt = class_of(registry, square.y_tilde);
    out.x_tilde_class = relations.normalize(xt) == relations.normalize(out.predicted_x_tilde);
    out.y_tilde_class = relations.normalize(yt) == relations.normalize(out.predicted_y_tilde);
    out.x_tilde_realization = realize_E(registry, xt);
    out.y_tilde_realization = realize_E(registry, yt);
    out.x_tilde_realized = out.x_tilde_realization == realize_E(registry, out.predicted_x_tilde);
    out.y_tilde_realized = out.y_tilde_realization == realize_E(registry, out.predicted_y_tilde);
    return out;
}

std::string Bidegree::to_string() const {
    return std::to_string(k) + "," + std::to_string(p) + "," + std::to_string(q);
}

std::size_t hodge_number(const Atom& atom, const Bidegree& b) {
    std::size_t out = 0;
    for (const auto& e : atom.hodge)
        if (e.k == b.k && e.p == b.p && e.q == b.q) out += static_cast<std::size_t>(e.h);
    return out;
}

namespace {

std::map<Bidegree, std::size_t> hodge_dims(const Atom& atom) {
    std::map<Bidegree, std::size_t> out;
    for (const auto& e : atom.hodge) out[{e.k, e.p, e.q}] += static_cast<std::size_t>(e.h);
    return out;
}

std::size_t lookup(const std::map<Bidegree, std::size_t>& dims, const Bidegree& b) {
    auto it = dims.find(b);
    return it == dims.end() ? 0 : it->second;
}

void check_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what, const Bidegree& b) {
    if (m.rows() != rows || m.cols() != cols)
        throw InvalidMapError(what + " in bidegree (" + b.to_string() + ") is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                              std::to_string(cols));
}

}  // namespace

RealizedSquare::RealizedSquare(const AtomRegistry& registry, BlowupSquare atoms, std::map<Bidegree, SquareMaps> maps)
    : atoms_(std::move(atoms)), maps_(std::move(maps)) {
    dims_x_ = hodge_dims(registry.at(atoms_.x));
    dims_y_ = hodge_dims(registry.at(atoms_.y));
    dims_xt_ = hodge_dims(registry.at(atoms_.x_tilde));
    dims_yt_ = hodge_dims(registry.at(atoms_.y_tilde));
    for (const auto& [b, m] : maps_) {
        const std::size_t x = lookup(dims_x_, b), y = lookup(dims_y_, b), xt = lookup(dims_xt_, b),
                          yt = lookup(dims_yt_, b);
        check_shape(m.i, y, x, "i*", b);
        check_shape(m.f, xt, x, "f*", b);
        check_shape(m.g, yt, y, "g*", b);
        check_shape(m.j, yt, xt, "j*", b);
        if (m.g * m.i != m.j * m.f)
            throw DiagramError("square does not commute in bidegree (" + b.to_string() + "): g* i* != j* f*");
    }
}

std::vector<Bidegree> RealizedSquare::bidegrees() const {
    std::set<Bidegree> all;
    for (const auto* dims : {&dims_x_, &dims_y_, &dims_xt_, &dims_yt_})
        for (const auto& entry : *dims) all.insert(entry.first);
    return {all.begin(), all.end()};
}

SquareMaps RealizedSquare::at(const Bidegree& b) const {
    auto it = maps_.find(b);
    if (it != maps_.end()) return it->second;
    const std::size_t x = lookup(dims_x_, b), y = lookup(dims_y_, b), xt = lookup(dims_xt_, b), yt = lookup(dims_yt_, b);
    return {Matrix(y, x), Matrix(xt, x), Matrix(yt, y), Matrix(yt, xt)};
}

CubicalDiagram RealizedSquare::diagram(const Bidegree& b) const {
    const SquareMaps m = at(b);
    const CubeIndex x(0b00), y(0b01), xt(0b10), yt(0b11);
    const QComplex cx = QComplex::concentrated(0, lookup(dims_x_, b));
    const QComplex cy = QComplex::concentrated(0, lookup(dims_y_, b));
    const QComplex cxt = QComplex::concentrated(0, lookup(dims_xt_, b));
    const QComplex cyt = QComplex::concentrated(0, lookup(dims_yt_, b));
    std::map<EdgeKey, ChainMap> edges;
    edges[{x, y}] = ChainMap(cx, cy, {{0, m.i}});
    edges[{x, xt}] = ChainMap(cx, cxt, {{0, m.f}});
    edges[{y, yt}] = ChainMap(cy, cyt, {{0, m.g}});
    edges[{xt, yt}] = ChainMap(cxt, cyt, {{0, m.j}});
    return CubicalDiagram(standard_cube(1, true), {{x, cx}, {y, cy}, {xt, cxt}, {yt, cyt}}, std::move(edges));
}

bool ManinSequenceReport::holds() const noexcept {
    for (const auto& d : degrees)
        if (!d.holds()) return false;
    return true;
}

ManinSequenceReport manin_sequence_check(const RealizedSquare& square) {
    ManinSequenceReport out;
    for (const Bidegree& b : square.bidegrees()) {
        const SquareMaps m = square.at(b);
        const Matrix alpha = vstack(m.i, m.f);
        const Matrix beta = hstack(m.g, -m.j);
        const std::size_t dx = alpha.cols(), dmid = alpha.rows(), dyt = beta.rows();
        ManinDegree d;
        d.bidegree = b;
        const std::size_t ra = rank(alpha), rb = rank(beta);
        d.injective = ra == dx;
        d.surjective = rb == dyt;
        d.middle_exact = (beta * alpha).is_zero() && ra + rb == dmid;
        if (d.injective && d.surjective && d.middle_exact) {
            const Matrix section = left_inverse(beta.transpose()).transpose();
            const Matrix retraction = left_inverse(alpha) * (Matrix::identity(dmid) - section * beta);
            d.split = (retraction * alpha).is_identity() && (beta * section).is_identity() &&
                      (retraction * section).is_zero() && (alpha * retraction + section * beta).is_identity();
        }
        d.simple_acyclic = is_acyclic(simple(square.diagram(b)));
        out.degrees.push_back(d);
    }
    return out;
}

DescentReport descent_D_check(const AtomRegistry& registry, const RelationSet& relations, const VarietyCatalog& catalog,
                              const ClassSquare& square) {
    auto chi = [&](const std::string& name) {
        return chi_c_scissor(registry, relations, catalog, name, ScissorMode::formal);
    };
    const MotiveClass formal = chi(square.x) - chi(square.y) - chi(square.x_tilde) + chi(square.y_tilde);
    DescentReport out;
    out.defect = relations.normalize(formal);
    out.realized_defect = realize_E(registry, formal);
    out.class_zero = out.defect.is_zero();
    out.realization_zero = out.realized_defect.terms().empty();
    return out;
}

bool descent_D_realized(const RealizedSquare& square) {
    for (const Bidegree& b : square.bidegrees())
        if (!is_acyclic(simple(square.diagram(b)))) return false;
    return true;
}

IndependenceReport compactification_independence(const RelationSet& relations, const std::string& open_part_a,
                                                  const SNCPair& a, const std::string& open_part_b, const SNCPair& b) {
    if (open_part_a != open_part_b)
        throw InvariantViolation("open-part", "compactifications declare different open parts '" + open_part_a +
                                                  "' and '" + open_part_b + "'");
    IndependenceReport out;
    out.chi_open_a = relations.normalize(chi_open(a));
    out.chi_open_b = relations.normalize(chi_open(b));
    out.chi_c_open_a = relations.normalize(chi_c_open(a));
    out.chi_c_open_b = relations.normalize(chi_c_open(b));
    out.chi_open_equal = out.chi_open_a == out.chi_open_b;
    out.chi_c_open_equal = out.chi_c_open_a == out.chi_c_open_b;
    return out;
}

}  // namespace cdesc
