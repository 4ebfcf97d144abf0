#include "cdesc/cubical.hpp"

#include <algorithm>
#include <bit>

#include "cdesc/error.hpp"

namespace cdesc {

CubeIndex CubeIndex::parse(std::string_view bits) {
    if (bits.size() > max_arity) throw ParseError("cube index longer than 64 coordinates");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            mask |= std::uint64_t{1} << i;
        else if (bits[i] != '0')
            throw ParseError("cube index '" + std::string(bits) + "' must consist of 0 and 1");
    }
    return CubeIndex(mask);
}

std::size_t CubeIndex::weight() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::size_t CubeIndex::support_length() const noexcept {
    return mask_ == 0 ? 0 : max_arity - static_cast<std::size_t>(std::countl_zero(mask_));
}

CubeIndex CubeIndex::with(std::size_t i) const {
    if (i >= max_arity) throw DiagramError("cube coordinate out of range");
    return CubeIndex(mask_ | (std::uint64_t{1} << i));
}

CubeIndex CubeIndex::without(std::size_t i) const {
    if (i >= max_arity) throw DiagramError("cube coordinate out of range");
    return CubeIndex(mask_ & ~(std::uint64_t{1} << i));
}

std::size_t CubeIndex::ones_before(std::size_t i) const noexcept {
    if (i == 0) return 0;
    const std::uint64_t below = i >= max_arity ? ~std::uint64_t{0} : ((std::uint64_t{1} << i) - 1);
    return static_cast<std::size_t>(std::popcount(mask_ & below));
}

std::string CubeIndex::to_string(std::size_t arity) const {
    std::string s(std::max(arity, support_length()), '0');
    for (std::size_t i = 0; i < s.size(); ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

std::vector<CubeIndex> interval(const CubeIndex& lo, const CubeIndex& hi) {
    if (!lo.leq(hi)) return {};
    // enumerate submasks of the free coordinates
    const std::uint64_t free = hi.mask() & ~lo.mask();
    std::vector<CubeIndex> out;
    std::uint64_t sub = free;
    while (true) {
        out.emplace_back(lo.mask() | sub);
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_cubical_order(const std::vector<CubeIndex>& s) {
    if (s.empty()) return false;
    std::vector<CubeIndex> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto member = [&](const CubeIndex& c) { return std::binary_search(sorted.begin(), sorted.end(), c); };
    for (const auto& a : sorted)
        for (const auto& b : sorted) {
            if (!a.leq(b) || a == b) continue;
            for (const auto& c : interval(a, b))
                if (!member(c)) return false;
        }
    return true;
}

CubicalOrder::CubicalOrder(std::vector<CubeIndex> members, std::size_t arity) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!is_cubical_order(members_)) throw InvariantViolation("interval-closed", "member set is empty or not interval-closed");
    std::size_t minimal = 0;
    for (const auto& m : members_) minimal = std::max(minimal, m.support_length());
    if (arity != 0 && arity < minimal) throw DiagramError("declared arity smaller than the support of a member");
    arity_ = std::max(arity, minimal);
}

bool CubicalOrder::contains(const CubeIndex& a) const { return std::binary_search(members_.begin(), members_.end(), a); }

std::size_t CubicalOrder::position(const CubeIndex& a) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), a);
    if (it == members_.end() || *it != a) throw DiagramError("index " + a.to_string(arity_) + " not in cubical order");
    return static_cast<std::size_t>(it - members_.begin());
}

std::vector<std::string> CubicalOrder::to_strings() const {
    std::vector<std::string> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.push_back(m.to_string(arity_));
    return out;
}

CubicalOrder standard_cube(std::size_t n, bool augmented) {
    const std::size_t arity = n + 1;
    if (arity >= 20) throw DiagramError("standard_cube: dimension too large to materialize");
    std::vector<CubeIndex> members;
    for (std::uint64_t m = augmented ? 0 : 1; m < (std::uint64_t{1} << arity); ++m) members.emplace_back(m);
    return CubicalOrder(std::move(members), arity);
}

CubeIndex CoordinateSplit::left_part(const CubeIndex& a) const {
    const std::uint64_t mask = left_arity >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << left_arity) - 1);
    return CubeIndex(a.mask() & mask);
}

CubeIndex CoordinateSplit::right_part(const CubeIndex& a) const {
    return CubeIndex(left_arity >= 64 ? 0 : a.mask() >> left_arity);
}

CubeIndex CoordinateSplit::join(const CubeIndex& left, const CubeIndex& right) const {
    if (left.support_length() > left_arity) throw DiagramError("left factor index exceeds its arity");
    return CubeIndex(left.mask() | (right.mask() << left_arity));
}

ProductOrder product(const CubicalOrder& a, const CubicalOrder& b) {
    if (a.arity() + b.arity() > CubeIndex::max_arity) throw DiagramError("product arity exceeds 64");
    const CoordinateSplit split{a.arity(), b.arity()};
    std::vector<CubeIndex> members;
    members.reserve(a.size() * b.size());
    for (const auto& x : a.members())
        for (const auto& y : b.members()) members.push_back(split.join(x, y));
    return ProductOrder{CubicalOrder(std::move(members), a.arity() + b.arity()), split};
}

std::vector<CoveringEdge> covering_edges(const CubicalOrder& o) {
    std::vector<CoveringEdge> edges;
    for (const auto& a : o.members())
        for (std::size_t i = 0; i < o.arity(); ++i) {
            if (a.bit(i)) continue;
            const CubeIndex b = a.with(i);
            if (o.contains(b)) edges.push_back({a, b, i});
        }
    return edges;
}

}  // namespace cdesc
