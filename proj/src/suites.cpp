#include "cdesc/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cdesc/descent.hpp"
#include "cdesc/error.hpp"
#include "cdesc/generators.hpp"

namespace cdesc {

bool SuiteReport::holds() const noexcept {
    return std::all_of(tallies.begin(), tallies.end(), [](const Tally& t) { return t.ok() && t.checked > 0; });
}

const Tally& SuiteReport::tally(const std::string& name) const {
    for (const auto& t : tallies)
        if (t.name == name) return t;
    throw UnknownNameError("no tally named " + name);
}

namespace {

class Recorder {
public:
    explicit Recorder(std::vector<std::string> names) {
        for (auto& n : names) report_.tallies.push_back({std::move(n), 0, 0, {}});
    }

    void record(const std::string& name, bool ok, std::size_t case_index) {
        Tally& t = find(name);
        ++t.checked;
        if (!ok && t.failures++ == 0) t.first_failure = "case " + std::to_string(case_index);
    }

    /// Runs a check; library errors count as failures.
    void check(const std::string& name, std::size_t case_index, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (const Error& e) {
            Tally& t = find(name);
            ++t.checked;
            if (t.failures++ == 0) t.first_failure = "case " + std::to_string(case_index) + ": " + e.what();
            return;
        }
        record(name, ok, case_index);
    }

    SuiteReport finish(std::uint64_t seed, std::size_t cases) {
        report_.seed = seed;
        report_.cases = cases;
        return report_;
    }

private:
    Tally& find(const std::string& name) {
        for (auto& t : report_.tallies)
            if (t.name == name) return t;
        throw UnknownNameError("no tally named " + name);
    }

    SuiteReport report_;
};

const gen::Limits limits{-2, 2, 3};

/// Block permutation s(x + y) -> s(x) + s(y).
ChainMap product_comparison(const CubicalDiagram& x, const CubicalDiagram& y) {
    const CubicalDiagram xy = product_diagram(x, y);
    const QComplex sxy = simple(xy);
    const QComplex target = direct_sum(simple(x), simple(y));
    const QComplex sx = simple(x);
    const SimpleLayout lxy(xy), lx(x), ly(y);
    std::map<int, Matrix> comps;
    for (int n = sxy.lo(); n <= sxy.hi(); ++n) {
        Matrix m(target.dim(n), sxy.dim(n));
        for (const auto& a : x.shape().members()) {
            const std::size_t dx = lx.block_dim(a, n), dy = ly.block_dim(a, n);
            const std::size_t col = lxy.offset(a, n);
            if (dx > 0) m.set_block(lx.offset(a, n), col, Matrix::identity(dx));
            if (dy > 0) m.set_block(sx.dim(n) + ly.offset(a, n), col + dx, Matrix::identity(dy));
        }
        comps.emplace(n, std::move(m));
    }
    return ChainMap(sxy, target, std::move(comps));
}

bool is_isomorphism(const ChainMap& f) {
    const QComplex& s = f.source();
    const QComplex& t = f.target();
    const int lo = std::min(s.is_zero() ? t.lo() : s.lo(), t.is_zero() ? s.lo() : t.lo());
    const int hi = std::max(s.hi(), t.hi());
    for (int k = lo; k <= hi; ++k) {
        const Matrix m = f.component(k);
        if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
    }
    return true;
}

/// A diagram of the same shape with acyclic vertices and zero edges.
CubicalDiagram acyclic_diagram(gen::Rng& rng, const CubicalOrder& shape) {
    std::map<CubeIndex, QComplex> vertices;
    for (const auto& a : shape.members()) vertices.emplace(a, gen::random_acyclic(rng, limits));
    return CubicalDiagram(shape, std::move(vertices), {});
}

DiagramMorphism inclusion_into_product(const CubicalDiagram& x, const CubicalDiagram& e) {
    const CubicalDiagram xe = product_diagram(x, e);
    std::map<CubeIndex, ChainMap> comps;
    for (const auto& a : x.shape().members()) {
        const QComplex& c = x.vertex(a);
        const QComplex& t = xe.vertex(a);
        std::map<int, Matrix> m;
        for (int k = c.lo(); k <= c.hi(); ++k) {
            Matrix block(t.dim(k), c.dim(k));
            block.set_block(0, 0, Matrix::identity(c.dim(k)));
            m.emplace(k, std::move(block));
        }
        comps.emplace(a, ChainMap(c, t, std::move(m)));
    }
    return DiagramMorphism(x, xe, std::move(comps));
}

/// Vertexwise cylinder of a diagram together with the delta0 inclusion.
DiagramMorphism cylinder_inclusion(const CubicalDiagram& x) {
    std::map<CubeIndex, QComplex> vertices;
    std::map<CubeIndex, ChainMap> comps;
    std::map<CubeIndex, Cylinder> cyl;
    for (const auto& a : x.shape().members()) cyl.emplace(a, cylinder(x.vertex(a)));
    for (const auto& [a, c] : cyl) vertices.emplace(a, c.complex);
    std::map<EdgeKey, ChainMap> edges;
    for (const auto& e : covering_edges(x.shape())) {
        const ChainMap f = x.edge(e.from, e.to);
        const Cylinder& s = cyl.at(e.from);
        const Cylinder& t = cyl.at(e.to);
        std::map<int, Matrix> m;
        for (int k = s.complex.lo(); k <= s.complex.hi(); ++k) {
            const Matrix block = direct_sum(direct_sum(f.component(k), f.component(k + 1)), f.component(k));
            if (block.rows() == t.complex.dim(k) && block.cols() == s.complex.dim(k)) m.emplace(k, block);
        }
        edges.emplace(EdgeKey{e.from, e.to}, ChainMap(s.complex, t.complex, std::move(m)));
    }
    const CubicalDiagram target(x.shape(), std::move(vertices), std::move(edges));
    for (const auto& [a, c] : cyl) comps.emplace(a, c.delta0);
    return DiagramMorphism(x, target, std::move(comps));
}

ChainMap random_map_from(gen::Rng& rng, const QComplex& source, bool want_qis) {
    if (want_qis) return gen::random_quasi_iso_from(rng, source, limits);
    return gen::random_chain_map(rng, source, gen::random_complex(rng, limits));
}

}  // namespace

SuiteReport run_axiom_suite(std::uint64_t seed, std::size_t cases) {
    gen::Rng rng(seed);
    Recorder rec({"C1", "C2", "E1", "E2", "S1", "S2", "S3", "S4", "S5"});
    for (std::size_t i = 0; i < cases; ++i) {
        const std::size_t arity = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const CubicalOrder shape = gen::random_order(rng, arity);
        const CubicalDiagram x = gen::random_diagram(rng, shape, limits);
        const CubicalDiagram y = gen::random_diagram(rng, shape, limits);

        rec.check("C1", i, [&] {
            const CubicalDiagram zero(shape, {}, {});
            return simple(product_diagram(x, zero)) == simple(x) && simple(zero).is_zero();
        });
        rec.check("C2", i, [&] {
            const QComplex sxy = simple(product_diagram(x, y));
            const QComplex sx = simple(x), sy = simple(y);
            for (int k = sxy.lo() - 1; k <= sxy.hi() + 1; ++k)
                if (sxy.dim(k) != sx.dim(k) + sy.dim(k)) return false;
            return true;
        });
        rec.check("S1", i, [&] {
            const QComplex c = gen::random_complex(rng, limits);
            const ChainMap to_final = ChainMap::zero(c, QComplex::zero());
            const QComplex s = simple(tot(to_final));
            return s == c;
        });
        rec.check("S2", i, [&] { return is_isomorphism(product_comparison(x, y)); });
        rec.check("S3", i, [&] {
            const QComplex c = gen::random_complex(rng, limits);
            const bool want = gen::coin(rng);
            const ChainMap f = random_map_from(rng, c, want);
            const bool qis = is_quasi_iso(f);
            if (want && !qis) return false;
            return qis == is_acyclic(simple(tot(f)));
        });
        rec.check("E1", i, [&] {
            // isomorphisms lie in E, and E is saturated (two-of-three instance)
            const QComplex c = gen::random_complex(rng, limits);
            const ChainMap f = gen::random_quasi_iso_from(rng, c, limits);
            const ChainMap g = gen::random_quasi_iso_from(rng, f.target(), limits);
            return is_quasi_iso(ChainMap::identity(c)) && is_quasi_iso(compose(g, f));
        });
        rec.check("E2", i, [&] {
            const ChainMap f = gen::random_quasi_iso_from(rng, gen::random_complex(rng, limits), limits);
            const ChainMap g = gen::random_quasi_iso_onto(rng, gen::random_complex(rng, limits), limits);
            return is_quasi_iso(f) && is_quasi_iso(g) && is_quasi_iso(direct_sum(f, g));
        });
        rec.check("S4", i, [&] {
            const DiagramMorphism inc = inclusion_into_product(x, acyclic_diagram(rng, shape));
            const QisImplication a = componentwise_qis_implies_total(inc);
            const QisImplication b = componentwise_qis_implies_total(cylinder_inclusion(x));
            const QisImplication c = componentwise_qis_implies_total(gen::random_morphism(rng, x, y));
            return a.all_vertices_qis && a.total_qis && b.all_vertices_qis && b.total_qis && c.holds();
        });
        rec.check("S5", i, [&] {
            const std::size_t total = static_cast<std::size_t>(gen::uniform(rng, 2, 3));
            const std::size_t left = static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<long>(total) - 1));
            const ProductOrder prod = product(gen::random_order(rng, left), gen::random_order(rng, total - left));
            const CubicalDiagram d = gen::random_diagram(rng, prod.order, limits);
            const CubicalDiagram e = gen::coin(rng) ? d : gen::random_diagram(rng, prod.order, limits);
            const IteratedSimple it = iterate_simple(d, prod.split);
            if (!is_quasi_iso(it.total_to_left_first) || !is_quasi_iso(it.total_to_right_first)) return false;
            const DiagramMorphism phi = gen::random_morphism(rng, d, e);
            const IteratedSimple jt = iterate_simple(e, prod.split);
            const ChainMap sphi = simple_map(phi);
            const ChainMap lphi = simple_map(partial_simple_map(phi, prod.split, Collapse::left_first));
            const ChainMap rphi = simple_map(partial_simple_map(phi, prod.split, Collapse::right_first));
            return compose(jt.total_to_left_first, sphi) == compose(lphi, it.total_to_left_first) &&
                   compose(jt.total_to_right_first, sphi) == compose(rphi, it.total_to_right_first);
        });
    }
    return rec.finish(seed, cases);
}

SuiteReport run_saturation_suite(std::uint64_t seed, std::size_t cases) {
    gen::Rng rng(seed);
    Recorder rec({"two-of-three", "three-for-two"});
    auto next = [&](const QComplex& source) {
        if (gen::coin(rng, 0.6)) return gen::random_quasi_iso_from(rng, source, limits);
        if (gen::coin(rng)) return gen::random_chain_map(rng, source, source);
        return gen::random_chain_map(rng, source, gen::random_complex(rng, limits));
    };
    for (std::size_t i = 0; i < cases; ++i) {
        const QComplex a = gen::random_complex(rng, limits);
        const ChainMap f = next(a);
        const ChainMap g = next(f.target());
        const ChainMap h = next(g.target());
        rec.check("two-of-three", i, [&] {
            const bool qf = is_quasi_iso(f), qg = is_quasi_iso(g), qgf = is_quasi_iso(compose(g, f));
            const int count = int(qf) + int(qg) + int(qgf);
            return count != 2;
        });
        rec.check("three-for-two", i, [&] {
            const bool qgf = is_quasi_iso(compose(g, f)), qhg = is_quasi_iso(compose(h, g));
            if (!(qgf && qhg)) return true;
            return is_quasi_iso(f) && is_quasi_iso(g) && is_quasi_iso(h) && is_quasi_iso(compose(h, compose(g, f)));
        });
    }
    return rec.finish(seed, cases);
}

SuiteReport run_splitting_suite(std::uint64_t seed, std::size_t cases) {
    gen::Rng rng(seed);
    Recorder rec({"find_contraction", "contractile_split", "euler_class"});
    for (std::size_t i = 0; i < cases; ++i) {
        QComplex c = gen::random_acyclic(rng, limits);
        if (gen::coin(rng, 0.3)) c = cone(ChainMap::identity(gen::random_complex(rng, limits)));
        std::optional<Contraction> h;
        rec.check("find_contraction", i, [&] {
            h = find_contraction(c);
            return h.has_value() && is_contraction(c, *h);
        });
        rec.check("contractile_split", i, [&] {
            if (!h) return false;
            const ContractileSplitting s = contractile_split(c, *h);
            for (int k = s.p.lo(); k < s.p.hi(); ++k)
                if (!s.p.d(k).is_zero()) return false;
            return compose(s.from_complex, s.to_complex) == ChainMap::identity(s.cone_of_p) &&
                   compose(s.to_complex, s.from_complex) == ChainMap::identity(c);
        });
        rec.check("euler_class", i, [&] { return euler_class(c) == 0; });
    }
    return rec.finish(seed, cases);
}

}  // namespace cdesc
