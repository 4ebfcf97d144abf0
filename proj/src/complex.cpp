#include "cdesc/complex.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cdesc/error.hpp"

namespace cdesc {
namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

/// Assembles a complex over [lo, hi] from per-degree callbacks.
QComplex build_complex(int lo, int hi, const std::function<std::size_t(int)>& dim,
                       const std::function<Matrix(int)>& diff) {
    if (hi < lo) return {};
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int k = lo; k <= hi; ++k) dims.push_back(dim(k));
    for (int k = lo; k < hi; ++k) diffs.push_back(diff(k));
    return QComplex(lo, std::move(dims), std::move(diffs));
}

bool odd(int k) { return k % 2 != 0; }

}  // namespace

QComplex::QComplex(int lo, std::vector<std::size_t> dims, std::vector<Matrix> differentials)
    : lo_(lo), dims_(std::move(dims)), diffs_(std::move(differentials)) {
    const std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
    if (diffs_.size() != expected)
        throw InvalidMapError("complex needs " + std::to_string(expected) + " differentials, got " +
                              std::to_string(diffs_.size()));
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].rows() != dims_[i + 1] || diffs_[i].cols() != dims_[i])
            throw InvalidMapError("differential d^" + std::to_string(lo_ + static_cast<int>(i)) + " has shape " +
                                  shape(diffs_[i]) + ", expected " + std::to_string(dims_[i + 1]) + "x" +
                                  std::to_string(dims_[i]));
    }
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i)
        if (!(diffs_[i + 1] * diffs_[i]).is_zero())
            throw InvariantViolation("d^2=0", "d^" + std::to_string(lo_ + static_cast<int>(i) + 1) + " d^" +
                                                  std::to_string(lo_ + static_cast<int>(i)) + " != 0");
    while (!dims_.empty() && dims_.front() == 0) {
        dims_.erase(dims_.begin());
        if (!diffs_.empty()) diffs_.erase(diffs_.begin());
        ++lo_;
    }
    while (!dims_.empty() && dims_.back() == 0) {
        dims_.pop_back();
        if (!diffs_.empty()) diffs_.pop_back();
    }
    if (dims_.empty()) lo_ = 0;
}

QComplex QComplex::concentrated(int degree, std::size_t dim) { return QComplex(degree, {dim}, {}); }

QComplex QComplex::zero_differential(int lo, std::vector<std::size_t> dims) {
    std::vector<Matrix> diffs;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) diffs.emplace_back(dims[i + 1], dims[i]);
    return QComplex(lo, std::move(dims), std::move(diffs));
}

std::size_t QComplex::dim(int k) const noexcept {
    if (k < lo_ || k > hi()) return 0;
    return dims_[static_cast<std::size_t>(k - lo_)];
}

std::size_t QComplex::total_dim() const noexcept {
    std::size_t total = 0;
    for (auto d : dims_) total += d;
    return total;
}

Matrix QComplex::d(int k) const {
    if (k < lo_ || k >= hi()) return Matrix(dim(k + 1), dim(k));
    return diffs_[static_cast<std::size_t>(k - lo_)];
}

ChainMap::ChainMap(QComplex source, QComplex target, std::map<int, Matrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
    for (auto& [k, m] : components) {
        if (m.rows() != target_.dim(k) || m.cols() != source_.dim(k))
            throw InvalidMapError("chain map component in degree " + std::to_string(k) + " has shape " + shape(m) +
                                  ", expected " + std::to_string(target_.dim(k)) + "x" +
                                  std::to_string(source_.dim(k)));
        if (m.rows() > 0 && m.cols() > 0) components_.emplace(k, std::move(m));
    }
    const int lo = std::min(source_.lo(), target_.lo()) - 1;
    const int hi = std::max(source_.hi(), target_.hi());
    for (int k = lo; k <= hi; ++k)
        if (target_.d(k) * component(k) != component(k + 1) * source_.d(k))
            throw InvalidMapError("map does not commute with differentials in degree " + std::to_string(k));
}

ChainMap ChainMap::identity(const QComplex& c) {
    std::map<int, Matrix> comps;
    for (int k = c.lo(); k <= c.hi(); ++k) comps.emplace(k, Matrix::identity(c.dim(k)));
    return ChainMap(c, c, std::move(comps));
}

ChainMap ChainMap::zero(const QComplex& source, const QComplex& target) { return ChainMap(source, target, {}); }

Matrix ChainMap::component(int k) const {
    auto it = components_.find(k);
    if (it != components_.end()) return it->second;
    return Matrix(target_.dim(k), source_.dim(k));
}

std::vector<int> ChainMap::degrees() const {
    std::vector<int> out;
    for (const auto& entry : components_) out.push_back(entry.first);
    return out;
}

bool operator==(const ChainMap& a, const ChainMap& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_) return false;
    const int lo = std::min(a.source_.lo(), a.target_.lo());
    const int hi = std::max(a.source_.hi(), a.target_.hi());
    for (int k = lo; k <= hi; ++k)
        if (a.component(k) != b.component(k)) return false;
    return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (f.target() != g.source()) throw InvalidMapError("compose: target of f differs from source of g");
    std::map<int, Matrix> comps;
    const QComplex& s = f.source();
    for (int k = s.lo(); k <= s.hi(); ++k) comps.emplace(k, g.component(k) * f.component(k));
    return ChainMap(f.source(), g.target(), std::move(comps));
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
    if (a.source() != b.source() || a.target() != b.target()) throw InvalidMapError("sum of chain maps with different ends");
    std::map<int, Matrix> comps;
    for (int k = a.source().lo(); k <= a.source().hi(); ++k) comps.emplace(k, a.component(k) + b.component(k));
    return ChainMap(a.source(), a.target(), std::move(comps));
}

ChainMap operator-(const ChainMap& a) {
    std::map<int, Matrix> comps;
    for (int k = a.source().lo(); k <= a.source().hi(); ++k) comps.emplace(k, -a.component(k));
    return ChainMap(a.source(), a.target(), std::move(comps));
}

QComplex direct_sum(const QComplex& a, const QComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return build_complex(
        std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()), [&](int k) { return a.dim(k) + b.dim(k); },
        [&](int k) { return direct_sum(a.d(k), b.d(k)); });
}

ChainMap direct_sum(const ChainMap& a, const ChainMap& b) {
    const QComplex src = direct_sum(a.source(), b.source());
    const QComplex tgt = direct_sum(a.target(), b.target());
    std::map<int, Matrix> comps;
    for (int k = src.lo(); k <= src.hi(); ++k) comps.emplace(k, direct_sum(a.component(k), b.component(k)));
    return ChainMap(src, tgt, std::move(comps));
}

std::map<int, std::size_t> homology_dims(const QComplex& c) {
    std::map<int, std::size_t> out;
    for (int k = c.lo(); k <= c.hi(); ++k) out[k] = c.dim(k) - rank(c.d(k)) - rank(c.d(k - 1));
    return out;
}

bool is_acyclic(const QComplex& c) {
    for (const auto& [k, h] : homology_dims(c))
        if (h != 0) return false;
    return true;
}

QComplex cone(const ChainMap& f) {
    const QComplex& s = f.source();
    const QComplex& t = f.target();
    if (s.is_zero() && t.is_zero()) return {};
    const int lo = s.is_zero() ? t.lo() : (t.is_zero() ? s.lo() - 1 : std::min(s.lo() - 1, t.lo()));
    const int hi = s.is_zero() ? t.hi() : (t.is_zero() ? s.hi() - 1 : std::max(s.hi() - 1, t.hi()));
    return build_complex(
        lo, hi, [&](int k) { return s.dim(k + 1) + t.dim(k); },
        [&](int k) {
            Matrix d(s.dim(k + 2) + t.dim(k + 1), s.dim(k + 1) + t.dim(k));
            d.set_block(0, 0, -s.d(k + 1));
            d.set_block(s.dim(k + 2), 0, f.component(k + 1));
            d.set_block(s.dim(k + 2), s.dim(k + 1), t.d(k));
            return d;
        });
}

bool is_quasi_iso(const ChainMap& f) { return is_acyclic(cone(f)); }

Cylinder cylinder(const QComplex& c) {
    if (c.is_zero()) {
        const QComplex z;
        return {z, ChainMap::zero(z, z), ChainMap::zero(z, z), ChainMap::zero(z, z)};
    }
    auto cyl_dim = [&](int k) { return c.dim(k) + c.dim(k + 1) + c.dim(k); };
    QComplex cyl = build_complex(c.lo() - 1, c.hi(), cyl_dim, [&](int k) {
        const std::size_t a = c.dim(k), b = c.dim(k + 1), e = c.dim(k + 2);
        Matrix d(b + e + b, a + b + a);
        d.set_block(0, 0, c.d(k));
        d.set_block(0, a, Matrix::identity(b));
        d.set_block(b, a, -c.d(k + 1));
        d.set_block(b + e, a, -Matrix::identity(b));
        d.set_block(b + e, a + b, c.d(k));
        return d;
    });
    std::map<int, Matrix> d0, d1, sg;
    for (int k = c.lo() - 1; k <= c.hi(); ++k) {
        const std::size_t a = c.dim(k), b = c.dim(k + 1);
        Matrix in0(a + b + a, a), in1(a + b + a, a), proj(a, a + b + a);
        in0.set_block(0, 0, Matrix::identity(a));
        in1.set_block(a + b, 0, Matrix::identity(a));
        proj.set_block(0, 0, Matrix::identity(a));
        proj.set_block(0, a + b, Matrix::identity(a));
        d0.emplace(k, std::move(in0));
        d1.emplace(k, std::move(in1));
        sg.emplace(k, std::move(proj));
    }
    ChainMap delta0(c, cyl, std::move(d0));
    ChainMap delta1(c, cyl, std::move(d1));
    ChainMap sigma(cyl, c, std::move(sg));
    return {std::move(cyl), std::move(delta0), std::move(delta1), std::move(sigma)};
}

namespace {

Matrix contraction_component(const QComplex& c, const Contraction& h, int k) {
    auto it = h.find(k);
    if (it == h.end()) return Matrix(c.dim(k - 1), c.dim(k));
    return it->second;
}

}  // namespace

bool is_contraction(const QComplex& c, const Contraction& h) {
    for (const auto& [k, m] : h)
        if (m.rows() != c.dim(k - 1) || m.cols() != c.dim(k)) return false;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        const Matrix lhs = contraction_component(c, h, k + 1) * c.d(k) + c.d(k - 1) * contraction_component(c, h, k);
        if (!lhs.is_identity()) return false;
    }
    return true;
}

std::optional<Contraction> find_contraction(const QComplex& c) {
    if (!is_acyclic(c)) return std::nullopt;
    Contraction h;
    if (c.is_zero()) return h;
    // complement[k] spans a complement of ker d^k inside C^k
    std::map<int, Matrix> complement;
    for (int k = c.lo() - 1; k <= c.hi(); ++k) complement.emplace(k, complement_basis(nullspace(c.d(k))));
    for (int k = c.lo(); k <= c.hi(); ++k) {
        const Matrix& w_prev = complement.at(k - 1);
        const Matrix adapted = hstack(c.d(k - 1) * w_prev, complement.at(k));
        const auto adapted_inv = inverse(adapted);
        if (!adapted_inv) return std::nullopt;
        Matrix lift(c.dim(k - 1), c.dim(k));
        lift.set_block(0, 0, w_prev);
        h.emplace(k, lift * *adapted_inv);
    }
    if (!is_contraction(c, h)) throw ContractViolation("find_contraction produced an invalid contraction");
    return h;
}

ContractileSplitting contractile_split(const QComplex& c, const Contraction& h) {
    if (!is_contraction(c, h)) throw ContractViolation("h is not a contraction: 1 != h d + d h");
    if (!is_acyclic(c)) throw ContractViolation("complex admits a contraction but has homology");

    std::map<int, Matrix> basis, projector;
    std::vector<std::size_t> p_dims;
    const int lo = c.is_zero() ? 0 : c.lo();
    const int hi = c.is_zero() ? -1 : c.hi();
    for (int k = lo; k <= hi; ++k) {
        projector.emplace(k, c.d(k - 1) * contraction_component(c, h, k));
        basis.emplace(k, column_basis(projector.at(k)));
        p_dims.push_back(basis.at(k).cols());
    }
    auto basis_at = [&](int k) {
        auto it = basis.find(k);
        return it == basis.end() ? Matrix(c.dim(k), 0) : it->second;
    };
    auto projector_at = [&](int k) {
        auto it = projector.find(k);
        return it == projector.end() ? Matrix(c.dim(k), c.dim(k)) : it->second;
    };

    QComplex p = QComplex::zero_differential(lo, p_dims);
    QComplex cone_p = cone(ChainMap::identity(p));

    std::map<int, Matrix> to, from;
    for (int k = lo - 1; k <= hi; ++k) {
        const Matrix b_next = basis_at(k + 1);
        const Matrix b_here = basis_at(k);
        to.emplace(k, hstack(contraction_component(c, h, k + 1) * b_next, b_here));
        from.emplace(k, vstack(left_inverse(b_next) * c.d(k), left_inverse(b_here) * projector_at(k)));
    }
    ChainMap to_complex(cone_p, c, std::move(to));
    ChainMap from_complex(c, cone_p, std::move(from));
    if (compose(to_complex, from_complex) != ChainMap::identity(c) ||
        compose(from_complex, to_complex) != ChainMap::identity(cone_p))
        throw ContractViolation("splitting isomorphism failed to invert");
    return {std::move(p), std::move(basis), std::move(cone_p), std::move(to_complex), std::move(from_complex)};
}

long euler_class(const QComplex& c) {
    long chi = 0;
    for (int k = c.lo(); k <= c.hi(); ++k) chi += (odd(k) ? -1L : 1L) * static_cast<long>(c.dim(k));
    return chi;
}

}  // namespace cdesc
