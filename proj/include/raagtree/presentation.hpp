/**
 * Right-angled Artin presentations of braid groups of linear trees,
 * assembled star by star from the marked endpoint.
 */

#ifndef RAAGTREE_PRESENTATION_HPP
#define RAAGTREE_PRESENTATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raagtree/star_complex.hpp"
#include "raagtree/tree.hpp"

namespace raagtree {

struct Generator {
    int star = 0;  // 1-based position in the star decomposition
    DEdge edge;

    auto operator<=>(const Generator&) const = default;
};

std::string to_string(const Generator& g);

/// Generators are kept sorted; a relation is an index pair (i, j) with
/// i < j into that list and stands for the commutator of the two.
struct Presentation {
    int n = 0;
    std::vector<Generator> generators;
    std::vector<std::pair<std::size_t, std::size_t>> relations;

    std::optional<std::size_t> index_of(const Generator& g) const;
    bool commute(std::size_t i, std::size_t j) const;
};

/// Builds the presentation by the recursive gluing sweep: for each split
/// X_i = S_i u X_{i+1} and each k = 1..n-1, generators of S_i that are
/// k-fold arm-2 images of level n-k basis edges commute with generators of
/// X_{i+1} that are (n-k)-fold left-endpoint images of level k generators.
Presentation assemble(const std::vector<int>& arities, int n);
Presentation assemble(const StarDecomposition& d, int n);

/// Closed form of the gluing relations for generators of distinct stars.
/// Throws std::invalid_argument when both lie in the same star.
bool commutation_predicate(const Generator& g, const Generator& h, int n);

/// Presentation with the same generators and relations taken from
/// commutation_predicate over all pairs.
Presentation assemble_closed_form(const std::vector<int>& arities, int n);

struct StabilizationMap {
    Presentation source;  // level n - 1
    Presentation target;  // level n
    std::vector<std::size_t> mapping;  // source generator index -> target index
    std::size_t mapped_relations = 0;
};

/// Adds a strand at the marked endpoint: every generator (i, e) goes to
/// (i, e + arm-1). Throws std::logic_error if an image generator or
/// relation is missing from the level-n presentation.
StabilizationMap stabilize(const std::vector<int>& arities, int n);
StabilizationMap stabilize(const StarDecomposition& d, int n);

enum class ExportFormat { json, dot };
ExportFormat parse_export_format(const std::string& name);
std::string export_presentation(const Presentation& p, ExportFormat format);

}  // namespace raagtree

#endif
