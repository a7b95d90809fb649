/**
 * The discretized configuration space UD_n of a tree: a cube complex whose
 * d-cells are d pairwise disjoint edges together with n - d further
 * vertices, all closures mutually disjoint.
 *
 * Cells of dimension d are ordered lexicographically by (sorted edge
 * tuple, sorted vertex tuple). Edges are oriented from the smaller to the
 * larger vertex id, and the boundary of a cell with edges e_1 < ... < e_d is
 *   sum_i (-1)^(i+1) ( face with e_i -> head(e_i) - face with e_i -> tail(e_i) ).
 */

#ifndef RAAGTREE_CUBE_COMPLEX_HPP
#define RAAGTREE_CUBE_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raagtree/integer_homology.hpp"
#include "raagtree/tree.hpp"

namespace raagtree {

class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_cell_cap = 5'000'000;

struct Cell {
    std::vector<std::uint32_t> edges;     // indices into CubeComplex::tree_edges, ascending
    std::vector<std::uint32_t> vertices;  // ascending

    bool operator==(const Cell&) const = default;
};

class CubeComplex {
public:
    CubeComplex(const Tree& t, int n, int d_max, std::size_t cell_cap = default_cell_cap);

    int strands() const { return n_; }
    int max_dimension() const { return d_max_; }
    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& tree_edges() const { return edges_; }

    std::size_t cell_count(int d) const;
    std::vector<std::size_t> cell_counts() const;

    Cell cell(int d, std::size_t index) const;
    std::size_t index_of(const Cell& c) const;

    /// Calls f(index, cell) for every d-cell in order.
    template <class F>
    void for_each_cell(int d, F&& f) const;

    /// Boundary map from d-cells to (d-1)-cells, d >= 1.
    SparseIntMatrix boundary(int d) const;

    /// One cell per line: "<d> e=<u>-<v>,... v=<x>,...", tree vertex names.
    void dump(std::ostream& out, const Tree& t) const;

private:
    struct EdgeTuple {
        std::vector<std::uint32_t> edges;
        std::vector<std::uint32_t> free_vertices;   // vertices not touched by the edges
        std::vector<std::int32_t> position;         // vertex -> index in free_vertices or -1
        std::size_t offset = 0;                     // index of the first cell using this tuple
    };
    struct Level {
        std::vector<EdgeTuple> tuples;
        std::unordered_map<std::uint64_t, std::uint32_t> lookup;
        std::size_t cells = 0;
    };

    std::uint64_t tuple_key(const std::vector<std::uint32_t>& edges) const;
    std::size_t subset_rank(const EdgeTuple& tuple, std::vector<std::uint32_t> vertices) const;

    int n_;
    int d_max_;
    std::size_t vertex_count_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<Level> levels_;
};

inline CubeComplex build_udc(const Tree& t, int n, int d_max, std::size_t cell_cap = default_cell_cap) {
    return CubeComplex(t, n, d_max, cell_cap);
}

template <class F>
void CubeComplex::for_each_cell(int d, F&& f) const {
    const Level& level = levels_.at(d);
    if (d > n_) return;
    const std::size_t choose = static_cast<std::size_t>(n_ - d);
    Cell c;
    std::vector<std::size_t> pick(choose);
    for (const auto& tuple : level.tuples) {
        const std::size_t avail = tuple.free_vertices.size();
        if (choose > avail) continue;
        c.edges = tuple.edges;
        for (std::size_t i = 0; i < choose; ++i) pick[i] = i;
        std::size_t index = tuple.offset;
        for (;;) {
            c.vertices.resize(choose);
            for (std::size_t i = 0; i < choose; ++i) c.vertices[i] = tuple.free_vertices[pick[i]];
            f(index++, static_cast<const Cell&>(c));
            // Next combination in lexicographic order.
            std::size_t i = choose;
            while (i > 0 && pick[i - 1] == avail - choose + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < choose; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
}

}  // namespace raagtree

#endif
