#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cdesc {

/// A finitely supported 0/1 sequence, i.e. an element of the infinite
/// augmented cube. Coordinate i is bit i of the mask, so trailing zeros do
/// not exist as data and equality is equality of supports.
class CubeIndex {
public:
    static constexpr std::size_t max_arity = 64;

    constexpr CubeIndex() = default;
    constexpr explicit CubeIndex(std::uint64_t mask) : mask_(mask) {}

    /// "0110" -> coordinates 1 and 2 set. Characters other than 0/1 throw.
    static CubeIndex parse(std::string_view bits);

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    bool bit(std::size_t i) const noexcept { return i < max_arity && ((mask_ >> i) & 1U) != 0; }
    std::size_t weight() const noexcept;
    /// One past the highest set coordinate (0 for the all-zero index).
    std::size_t support_length() const noexcept;

    CubeIndex with(std::size_t i) const;
    CubeIndex without(std::size_t i) const;

    /// Number of 1-entries strictly before coordinate i (the Koszul exponent).
    std::size_t ones_before(std::size_t i) const noexcept;

    /// Componentwise order.
    bool leq(const CubeIndex& other) const noexcept { return (mask_ & ~other.mask_) == 0; }

    /// Bit-string of the given length, coordinate 0 first.
    std::string to_string(std::size_t arity) const;

    friend constexpr auto operator<=>(const CubeIndex&, const CubeIndex&) = default;

private:
    std::uint64_t mask_ = 0;
};

/// A nonempty interval-closed finite subset of the infinite augmented cube,
/// together with the number of coordinates it is presented in.
class CubicalOrder {
public:
    /// Validates interval closure; `arity` defaults to the minimal one.
    explicit CubicalOrder(std::vector<CubeIndex> members, std::size_t arity = 0);

    const std::vector<CubeIndex>& members() const noexcept { return members_; }
    std::size_t arity() const noexcept { return arity_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(const CubeIndex& a) const;
    /// Position of `a` in `members()`; throws if absent.
    std::size_t position(const CubeIndex& a) const;

    std::vector<std::string> to_strings() const;

    friend bool operator==(const CubicalOrder&, const CubicalOrder&) = default;

private:
    std::vector<CubeIndex> members_;
    std::size_t arity_ = 0;
};

/// The n-cube: all 0/1 vectors of length n+1, minus the zero vector unless augmented.
CubicalOrder standard_cube(std::size_t n, bool augmented);

/// True iff `s` is nonempty and closed under intervals.
bool is_cubical_order(const std::vector<CubeIndex>& s);

/// Records that coordinates [0, left_arity) come from the first factor and
/// [left_arity, left_arity + right_arity) from the second.
struct CoordinateSplit {
    std::size_t left_arity = 0;
    std::size_t right_arity = 0;

    CubeIndex left_part(const CubeIndex& a) const;
    CubeIndex right_part(const CubeIndex& a) const;
    CubeIndex join(const CubeIndex& left, const CubeIndex& right) const;

    friend bool operator==(const CoordinateSplit&, const CoordinateSplit&) = default;
};

struct ProductOrder {
    CubicalOrder order;
    CoordinateSplit split;
};

ProductOrder product(const CubicalOrder& a, const CubicalOrder& b);

struct CoveringEdge {
    CubeIndex from;
    CubeIndex to;
    std::size_t direction;

    friend bool operator==(const CoveringEdge&, const CoveringEdge&) = default;
};

/// Every pair a < a + e_i inside the order, sorted by (from, direction).
std::vector<CoveringEdge> covering_edges(const CubicalOrder& o);

/// The interval {c : lo <= c <= hi}.
std::vector<CubeIndex> interval(const CubeIndex& lo, const CubeIndex& hi);

}  // namespace cdesc
