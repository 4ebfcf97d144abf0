#include "cdesc/generators.hpp"

#include <algorithm>

#include "cdesc/error.hpp"

namespace cdesc::gen {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long range) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -range, range);
    return m;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
    Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) {
            lower(r, c) = uniform(rng, -1, 1);
            upper(c, r) = uniform(rng, -1, 1);
        }
    for (std::size_t i = 0; i < n; ++i)
        if (coin(rng)) upper(i, i) = -1;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return (lower * upper).columns(perm);
}

namespace {

std::vector<std::size_t> random_dims(Rng& rng, const Limits& limits) {
    std::vector<std::size_t> dims;
    for (int k = limits.lo; k <= limits.hi; ++k)
        dims.push_back(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(limits.max_dim))));
    return dims;
}

/// Solves homogeneous equations sum P X Q = 0 in matrix unknowns.
class LinearSystem {
public:
    std::size_t add_unknown(std::size_t rows, std::size_t cols) {
        unknowns_.push_back({rows, cols, width_});
        width_ += rows * cols;
        return unknowns_.size() - 1;
    }

    struct Term {
        std::size_t unknown;
        Matrix left;
        Matrix right;
    };

    /// One matrix equation of shape rows x cols.
    void add_equation(std::size_t rows, std::size_t cols, const std::vector<Term>& terms) {
        if (terms.empty() || rows == 0 || cols == 0) return;
        for (std::size_t a = 0; a < rows; ++a)
            for (std::size_t b = 0; b < cols; ++b) {
                std::vector<Rational> row(width_);
                bool any = false;
                for (const auto& t : terms) {
                    const Unknown& u = unknowns_[t.unknown];
                    for (std::size_t i = 0; i < u.rows; ++i) {
                        if (t.left(a, i) == 0) continue;
                        for (std::size_t j = 0; j < u.cols; ++j) {
                            if (t.right(j, b) == 0) continue;
                            row[u.offset + i + j * u.rows] += t.left(a, i) * t.right(j, b);
                            any = true;
                        }
                    }
                }
                if (any) rows_.push_back(std::move(row));
            }
    }

    /// A random solution, returned unknown by unknown.
    std::vector<Matrix> random_solution(Rng& rng) const {
        Matrix system(rows_.size(), width_);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t c = 0; c < width_; ++c) system(r, c) = rows_[r][c];
        const Matrix basis = width_ == 0 ? Matrix(0, 0) : nullspace(system);
        std::vector<Rational> x(width_);
        for (std::size_t k = 0; k < basis.cols(); ++k) {
            const long coefficient = uniform(rng, -2, 2);
            if (coefficient == 0) continue;
            for (std::size_t i = 0; i < width_; ++i) x[i] += coefficient * basis(i, k);
        }
        std::vector<Matrix> out;
        for (const auto& u : unknowns_) {
            Matrix m(u.rows, u.cols);
            for (std::size_t i = 0; i < u.rows; ++i)
                for (std::size_t j = 0; j < u.cols; ++j) m(i, j) = x[u.offset + i + j * u.rows];
            out.push_back(std::move(m));
        }
        return out;
    }

private:
    struct Unknown {
        std::size_t rows;
        std::size_t cols;
        std::size_t offset;
    };
    std::vector<Unknown> unknowns_;
    std::vector<std::vector<Rational>> rows_;
    std::size_t width_ = 0;
};

/// P_(k+1) d^k P_k^-1, degree by degree.
QComplex transport(const QComplex& c, const std::map<int, Matrix>& p, const std::map<int, Matrix>& p_inv) {
    if (c.is_zero()) return c;
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int k = c.lo(); k <= c.hi(); ++k) dims.push_back(c.dim(k));
    for (int k = c.lo(); k < c.hi(); ++k) diffs.push_back(p.at(k + 1) * c.d(k) * p_inv.at(k));
    return QComplex(c.lo(), dims, diffs);
}

struct Automorphism {
    std::map<int, Matrix> forward;
    std::map<int, Matrix> backward;
};

Automorphism random_automorphism(Rng& rng, const QComplex& c) {
    Automorphism a;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        Matrix p = random_invertible(rng, c.dim(k));
        a.backward[k] = *inverse(p);
        a.forward[k] = std::move(p);
    }
    return a;
}

}  // namespace

QComplex random_complex(Rng& rng, const Limits& limits) {
    const std::vector<std::size_t> dims = random_dims(rng, limits);
    std::vector<Matrix> diffs;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
        if (i == 0) {
            diffs.push_back(random_matrix(rng, dims[1], dims[0], 1));
            continue;
        }
        // rows of d^k must kill the image of d^(k-1)
        const Matrix allowed = nullspace(diffs.back().transpose());
        Matrix coefficients = random_matrix(rng, dims[i + 1], allowed.cols(), 1);
        if (coin(rng, 0.2)) coefficients = Matrix(dims[i + 1], allowed.cols());
        diffs.push_back(coefficients * allowed.transpose());
    }
    return QComplex(limits.lo, dims, diffs);
}

namespace {

/// Identity pieces placed under per-degree capacities, then conjugated.
QComplex acyclic_within(Rng& rng, int lo, std::vector<std::size_t> caps) {
    const int span = static_cast<int>(caps.size());
    if (span < 2) return QComplex::zero();
    std::vector<std::size_t> used(caps.size(), 0);
    std::vector<std::size_t> slots;
    const long attempts = uniform(rng, 0, span + 1);
    for (long a = 0; a < attempts; ++a) {
        const auto at = static_cast<std::size_t>(uniform(rng, 0, span - 2));
        if (used[at] >= caps[at] || used[at + 1] >= caps[at + 1]) continue;
        slots.push_back(at);
        ++used[at];
        ++used[at + 1];
    }
    std::vector<Matrix> diffs;
    for (std::size_t i = 0; i + 1 < used.size(); ++i) diffs.emplace_back(used[i + 1], used[i]);
    std::vector<std::size_t> filled(used.size(), 0);
    for (std::size_t i : slots) {
        diffs[i](filled[i + 1], filled[i]) = 1;
        ++filled[i];
        ++filled[i + 1];
    }
    QComplex plain(lo, used, diffs);
    if (plain.is_zero()) return plain;
    const Automorphism a = random_automorphism(rng, plain);
    return transport(plain, a.forward, a.backward);
}

/// Room left in each degree of [limits.lo, limits.hi] next to c.
std::vector<std::size_t> room_beside(const QComplex& c, const Limits& limits) {
    std::vector<std::size_t> caps;
    for (int k = limits.lo; k <= limits.hi; ++k)
        caps.push_back(c.dim(k) >= limits.max_dim ? 0 : limits.max_dim - c.dim(k));
    return caps;
}

}  // namespace

QComplex random_acyclic(Rng& rng, const Limits& limits) {
    return acyclic_within(rng, limits.lo,
                          std::vector<std::size_t>(static_cast<std::size_t>(limits.hi - limits.lo + 1), limits.max_dim));
}

ChainMap random_chain_map(Rng& rng, const QComplex& source, const QComplex& target) {
    if (source.is_zero() || target.is_zero()) return ChainMap::zero(source, target);
    const int lo = std::max(source.lo(), target.lo());
    const int hi = std::min(source.hi(), target.hi());
    LinearSystem system;
    std::map<int, std::size_t> unknown;
    for (int k = lo; k <= hi; ++k)
        if (source.dim(k) > 0 && target.dim(k) > 0) unknown[k] = system.add_unknown(target.dim(k), source.dim(k));
    for (int k = lo - 1; k <= hi; ++k) {
        std::vector<LinearSystem::Term> terms;
        if (unknown.count(k)) terms.push_back({unknown[k], target.d(k), Matrix::identity(source.dim(k))});
        if (unknown.count(k + 1)) terms.push_back({unknown[k + 1], -Matrix::identity(target.dim(k + 1)), source.d(k)});
        system.add_equation(target.dim(k + 1), source.dim(k), terms);
    }
    const std::vector<Matrix> solution = system.random_solution(rng);
    std::map<int, Matrix> components;
    for (const auto& [k, index] : unknown) components[k] = solution[index];
    return ChainMap(source, target, std::move(components));
}

ChainMap random_quasi_iso_from(Rng& rng, const QComplex& source, const Limits& limits) {
    const QComplex extra = acyclic_within(rng, limits.lo, room_beside(source, limits));
    const QComplex sum = direct_sum(source, extra);
    const Automorphism a = random_automorphism(rng, sum);
    const QComplex target = transport(sum, a.forward, a.backward);
    std::map<int, Matrix> components;
    for (int k = source.lo(); k <= source.hi(); ++k) {
        Matrix inclusion(sum.dim(k), source.dim(k));
        inclusion.set_block(0, 0, Matrix::identity(source.dim(k)));
        components[k] = a.forward.at(k) * inclusion;
    }
    return ChainMap(source, target, std::move(components));
}

ChainMap random_quasi_iso_onto(Rng& rng, const QComplex& target, const Limits& limits) {
    const QComplex extra = acyclic_within(rng, limits.lo, room_beside(target, limits));
    const QComplex sum = direct_sum(target, extra);
    const Automorphism a = random_automorphism(rng, sum);
    const QComplex source = transport(sum, a.forward, a.backward);
    std::map<int, Matrix> components;
    for (int k = target.lo(); k <= target.hi(); ++k) {
        Matrix projection(target.dim(k), sum.dim(k));
        projection.set_block(0, 0, Matrix::identity(target.dim(k)));
        components[k] = projection * a.backward.at(k);
    }
    return ChainMap(source, target, std::move(components));
}

CubicalDiagram random_cube_diagram(Rng& rng, std::size_t n, const Limits& limits) {
    if (n == 0) {
        const QComplex source = random_complex(rng, limits);
        if (coin(rng)) return tot(random_quasi_iso_from(rng, source, limits));
        return tot(random_chain_map(rng, source, coin(rng) ? source : random_complex(rng, limits)));
    }
    const CubicalDiagram source = random_cube_diagram(rng, n - 1, limits);
    const CubicalDiagram target = coin(rng) ? source : random_cube_diagram(rng, n - 1, limits);
    return tot(random_morphism(rng, source, target));
}

CubicalOrder random_order(Rng& rng, std::size_t arity) {
    const std::uint64_t full = (std::uint64_t{1} << arity) - 1;
    switch (uniform(rng, 0, 3)) {
        case 0: return standard_cube(arity - 1, true);
        case 1:
            if (arity > 1) return standard_cube(arity - 1, false);
            [[fallthrough]];
        default: {
            const std::uint64_t lo = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long>(full)));
            const std::uint64_t hi = lo | static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long>(full)));
            std::vector<CubeIndex> members = interval(CubeIndex(lo), CubeIndex(hi));
            // optionally add another interval when the union stays closed
            const std::uint64_t lo2 = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long>(full)));
            std::vector<CubeIndex> extra = interval(CubeIndex(lo2), CubeIndex(lo2 | hi));
            std::vector<CubeIndex> merged = members;
            merged.insert(merged.end(), extra.begin(), extra.end());
            std::sort(merged.begin(), merged.end());
            merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
            if (is_cubical_order(merged)) return CubicalOrder(merged, arity);
            return CubicalOrder(members, arity);
        }
    }
}

CubicalDiagram random_diagram(Rng& rng, const CubicalOrder& shape, const Limits& limits) {
    if (shape.arity() == 0)
        return CubicalDiagram(shape, {{CubeIndex(0), random_complex(rng, limits)}}, {});
    const CubicalDiagram cube = random_cube_diagram(rng, shape.arity() - 1, limits);
    return restrict(cube, shape);
}

DiagramMorphism random_morphism(Rng& rng, const CubicalDiagram& source, const CubicalDiagram& target) {
    if (!(source.shape() == target.shape())) throw DiagramError("random_morphism: shapes differ");
    LinearSystem system;
    std::map<std::pair<CubeIndex, int>, std::size_t> unknown;
    for (const auto& a : source.shape().members()) {
        const QComplex& s = source.vertex(a);
        const QComplex& t = target.vertex(a);
        if (s.is_zero() || t.is_zero()) continue;
        for (int k = std::max(s.lo(), t.lo()); k <= std::min(s.hi(), t.hi()); ++k)
            if (s.dim(k) > 0 && t.dim(k) > 0) unknown[{a, k}] = system.add_unknown(t.dim(k), s.dim(k));
    }
    auto find = [&](const CubeIndex& a, int k) -> const std::size_t* {
        auto it = unknown.find({a, k});
        return it == unknown.end() ? nullptr : &it->second;
    };
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& a : source.shape().members())
        for (const QComplex* c : {&source.vertex(a), &target.vertex(a)}) {
            if (c->is_zero()) continue;
            lo = any ? std::min(lo, c->lo()) : c->lo();
            hi = any ? std::max(hi, c->hi()) : c->hi();
            any = true;
        }
    for (const auto& a : source.shape().members()) {
        const QComplex& s = source.vertex(a);
        const QComplex& t = target.vertex(a);
        for (int k = lo - 1; k <= hi; ++k) {
            std::vector<LinearSystem::Term> terms;
            if (auto u = find(a, k)) terms.push_back({*u, t.d(k), Matrix::identity(s.dim(k))});
            if (auto u = find(a, k + 1)) terms.push_back({*u, -Matrix::identity(t.dim(k + 1)), s.d(k)});
            system.add_equation(t.dim(k + 1), s.dim(k), terms);
        }
    }
    for (const auto& e : covering_edges(source.shape())) {
        const ChainMap se = source.edge(e.from, e.to);
        const ChainMap te = target.edge(e.from, e.to);
        for (int k = lo; k <= hi; ++k) {
            std::vector<LinearSystem::Term> terms;
            if (auto u = find(e.from, k))
                terms.push_back({*u, te.component(k), Matrix::identity(source.vertex(e.from).dim(k))});
            if (auto u = find(e.to, k))
                terms.push_back({*u, -Matrix::identity(target.vertex(e.to).dim(k)), se.component(k)});
            system.add_equation(target.vertex(e.to).dim(k), source.vertex(e.from).dim(k), terms);
        }
    }
    const std::vector<Matrix> solution = system.random_solution(rng);
    std::map<CubeIndex, std::map<int, Matrix>> per_vertex;
    for (const auto& [key, index] : unknown) per_vertex[key.first][key.second] = solution[index];
    std::map<CubeIndex, ChainMap> components;
    for (const auto& a : source.shape().members())
        components[a] = ChainMap(source.vertex(a), target.vertex(a), per_vertex[a]);
    return DiagramMorphism(source, target, std::move(components));
}

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long max_entry) {
    IntMatrix m(rows, std::vector<long>(cols));
    for (auto& row : m)
        for (auto& v : row) v = uniform(rng, 0, max_entry);
    return m;
}

Atom projective_space(int n) {
    Atom a;
    a.name = n == 0 ? std::string(point_atom) : "P" + std::to_string(n);
    a.dim = n;
    for (int i = 0; i <= n; ++i) a.hodge.push_back({2 * i, i, i, 1});
    return a;
}

SNCPair random_snc_pair(Rng& rng, AtomRegistry& registry, int rank, int dim) {
    for (int n = 0; n <= dim; ++n) {
        const Atom a = projective_space(n);
        if (!registry.contains(a.name)) registry.add(a);
    }
    std::vector<std::string> components;
    std::map<Subset, std::string> strata;
    for (int a = 1; a <= rank; ++a) {
        components.push_back("D" + std::to_string(a));
        strata[{a}] = projective_space(dim - 1).name;
    }
    for (int p = 2; p <= std::min(rank, dim); ++p)
        for (const auto& sigma : subsets_of_size(rank, p)) {
            bool faces = true;
            for (int x : sigma) {
                Subset face = sigma;
                face.erase(std::find(face.begin(), face.end(), x));
                if (strata.count(face) == 0) faces = false;
            }
            if (faces && coin(rng, 0.7)) strata[sigma] = projective_space(dim - p).name;
        }
    return SNCPair(registry, projective_space(dim).name, components, strata);
}

}  // namespace cdesc::gen
