/**
 * Homological checks of a presentation against the discretized
 * configuration space.
 */

#ifndef RAAGTREE_ORACLE_HPP
#define RAAGTREE_ORACLE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "raagtree/cube_complex.hpp"
#include "raagtree/presentation.hpp"

namespace raagtree {

struct HomologyReport {
    std::vector<std::size_t> cells;               // counts for dimensions 0..d_max
    std::vector<std::size_t> boundary_ranks;      // rank of boundary d for d = 1..d_max (index d-1)
    std::vector<std::size_t> betti;               // b_0 .. b_{d_max-1}
    std::vector<std::vector<BigInt>> torsion;     // invariant factors > 1 of H_d, d = 0..d_max-1
    bool boundary_squares_vanish = true;          // every composite boundary map is zero

    bool torsion_free() const;
    /// {"cells": [...], "betti": [...], "torsion": [[...], ...]}
    std::string to_json() const;
};

/// b_d = |cells_d| - rank d_d - rank d_{d+1}; torsion of H_d from the Smith
/// form of d_{d+1}. Also checks that consecutive boundaries compose to zero.
HomologyReport betti(const CubeComplex& c, bool want_torsion = true);

struct Pi1Presentation {
    std::size_t generator_count = 0;
    /// Each relator is a word of (generator, +1/-1) letters, tree edges elided.
    std::vector<std::vector<std::pair<std::size_t, int>>> relators;
    std::size_t abelianization_rank = 0;
};

/// Breadth-first spanning tree of the 1-skeleton from cell 0; generators
/// are the remaining 1-cells, one relator per square. Throws
/// std::runtime_error("disconnected") if the 1-skeleton is not connected.
Pi1Presentation pi1_presentation(const CubeComplex& c);

/// Number of cliques of sizes 1..max_size (max_size <= 3) in the defining
/// graph of the presentation: generators, relations, triangles.
std::vector<std::size_t> raag_cliques(const Presentation& p, int max_size = 3);

}  // namespace raagtree

#endif
