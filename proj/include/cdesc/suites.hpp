#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cdesc {

struct Tally {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const noexcept { return failures == 0; }
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::vector<Tally> tallies;

    bool holds() const noexcept;
    const Tally& tally(const std::string& name) const;
};

/// C1, C2, E1, E2 and S1-S5 on `cases` random cubical diagrams with shapes
/// up to the augmented 2-cube, vertex dims <= 3, degrees in [-2, 2].
SuiteReport run_axiom_suite(std::uint64_t seed, std::size_t cases);

/// Two-of-three and three-for-two for quasi-isomorphisms on random
/// composable chains.
SuiteReport run_saturation_suite(std::uint64_t seed, std::size_t cases);

/// find_contraction, contractile_split and euler_class on random acyclic complexes.
SuiteReport run_splitting_suite(std::uint64_t seed, std::size_t cases);

}  // namespace cdesc
