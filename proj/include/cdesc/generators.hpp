#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "cdesc/complex.hpp"
#include "cdesc/descent.hpp"
#include "cdesc/gysin.hpp"
#include "cdesc/motive.hpp"
#include "cdesc/snc.hpp"

namespace cdesc::gen {

using Rng = std::mt19937_64;

struct Limits {
    int lo = -2;
    int hi = 2;
    std::size_t max_dim = 3;
};

long uniform(Rng& rng, long lo, long hi);
bool coin(Rng& rng, double p = 0.5);

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long range = 2);
/// Integer matrix with determinant +-1.
Matrix random_invertible(Rng& rng, std::size_t n);

/// Complex with degrees inside [lo, hi]; each differential is a random
/// combination of the relations allowed by the previous one.
QComplex random_complex(Rng& rng, const Limits& limits);
/// Sum of identity pieces Q -> Q conjugated by random invertible matrices.
QComplex random_acyclic(Rng& rng, const Limits& limits);

/// Random element of the space of chain maps source -> target.
ChainMap random_chain_map(Rng& rng, const QComplex& source, const QComplex& target);
/// Quasi-isomorphism from `source` into source + (acyclic), transported by
/// a random automorphism.
ChainMap random_quasi_iso_from(Rng& rng, const QComplex& source, const Limits& limits);
/// Quasi-isomorphism from a random enlargement onto `target`.
ChainMap random_quasi_iso_onto(Rng& rng, const QComplex& target, const Limits& limits);

/// Random commuting diagram over the augmented n-cube (arity n + 1).
CubicalDiagram random_cube_diagram(Rng& rng, std::size_t n, const Limits& limits);
/// Random commuting diagram over `shape`, restricted from an augmented cube.
CubicalDiagram random_diagram(Rng& rng, const CubicalOrder& shape, const Limits& limits);
/// A random interval-closed sub-order of the augmented cube of arity `arity`.
CubicalOrder random_order(Rng& rng, std::size_t arity);
/// Random morphism between diagrams of the same shape.
DiagramMorphism random_morphism(Rng& rng, const CubicalDiagram& source, const CubicalDiagram& target);

/// Non-negative integer matrix with entries in [0, max_entry].
IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long max_entry);

/// "P<n>" with its Hodge table.
Atom projective_space(int n);
/// An SNC pair on P<dim> with `rank` components and a random monotone
/// strata lattice; registers the projective spaces it needs.
SNCPair random_snc_pair(Rng& rng, AtomRegistry& registry, int rank, int dim);

}  // namespace cdesc::gen
