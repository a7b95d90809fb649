#include "raagtree/cube_complex.hpp"

#include <algorithm>
#include <ostream>

#include "raagtree/star_complex.hpp"

namespace raagtree {

CubeComplex::CubeComplex(const Tree& t, int n, int d_max, std::size_t cell_cap)
    : n_(n), d_max_(d_max), vertex_count_(t.vertex_count()) {
    if (n < 1) throw std::invalid_argument("the cube complex needs n >= 1");
    if (d_max < 1 || d_max > 3) throw std::invalid_argument("d_max must be 1, 2 or 3");
    if (t.edge_count() >= 0xFFFF) throw ResourceCapError("too many tree edges for the cell index");
    for (const auto& [u, v] : t.edges())
        edges_.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));

    levels_.resize(d_max + 1);
    for (int d = 0; d <= d_max; ++d) {
        Level& level = levels_[d];
        if (d > n) continue;
        const auto choose = static_cast<std::int64_t>(n - d);
        const auto avail = static_cast<std::int64_t>(vertex_count_) - 2 * d;
        const auto per_tuple = static_cast<std::size_t>(binomial(avail, choose));

        std::vector<std::uint32_t> current;
        std::vector<char> used(vertex_count_, 0);
        auto rec = [&](auto&& self, std::uint32_t from) -> void {
            if (static_cast<int>(current.size()) == d) {
                EdgeTuple tuple;
                tuple.edges = current;
                tuple.position.assign(vertex_count_, -1);
                for (std::uint32_t v = 0; v < vertex_count_; ++v)
                    if (!used[v]) {
                        tuple.position[v] = static_cast<std::int32_t>(tuple.free_vertices.size());
                        tuple.free_vertices.push_back(v);
                    }
                tuple.offset = level.cells;
                level.cells += per_tuple;
                if (level.cells > cell_cap)
                    throw ResourceCapError("dimension " + std::to_string(d) + " exceeds the cell cap of " +
                                           std::to_string(cell_cap) + " cells");
                level.lookup.emplace(tuple_key(tuple.edges), static_cast<std::uint32_t>(level.tuples.size()));
                level.tuples.push_back(std::move(tuple));
                return;
            }
            for (std::uint32_t e = from; e < edges_.size(); ++e) {
                auto [u, v] = edges_[e];
                if (used[u] || used[v]) continue;
                used[u] = used[v] = 1;
                current.push_back(e);
                self(self, e + 1);
                current.pop_back();
                used[u] = used[v] = 0;
            }
        };
        if (per_tuple > 0) rec(rec, 0);
    }
}

std::uint64_t CubeComplex::tuple_key(const std::vector<std::uint32_t>& edges) const {
    std::uint64_t key = 0;
    for (auto e : edges) key = (key << 16) | (e + 1);
    return key;
}

std::size_t CubeComplex::cell_count(int d) const {
    if (d < 0 || d > d_max_) return 0;
    return levels_[d].cells;
}

std::vector<std::size_t> CubeComplex::cell_counts() const {
    std::vector<std::size_t> out;
    for (int d = 0; d <= d_max_; ++d) out.push_back(cell_count(d));
    return out;
}

std::size_t CubeComplex::subset_rank(const EdgeTuple& tuple, std::vector<std::uint32_t> vertices) const {
    // Lexicographic rank of a k-subset c_0 < ... < c_{k-1} of {0..N-1}:
    // C(N, k) - 1 - sum_i C(N - 1 - c_i, k - i).
    const auto total = static_cast<std::int64_t>(tuple.free_vertices.size());
    const auto k = static_cast<std::int64_t>(vertices.size());
    for (auto& v : vertices) {
        auto pos = tuple.position.at(v);
        if (pos < 0) throw std::invalid_argument("vertex collides with a cell edge");
        v = static_cast<std::uint32_t>(pos);
    }
    std::sort(vertices.begin(), vertices.end());
    std::int64_t rank = binomial(total, k) - 1;
    for (std::int64_t i = 0; i < k; ++i) rank -= binomial(total - 1 - vertices[i], k - i);
    return static_cast<std::size_t>(rank);
}

std::size_t CubeComplex::index_of(const Cell& c) const {
    const int d = static_cast<int>(c.edges.size());
    if (d > d_max_ || static_cast<int>(c.vertices.size()) != n_ - d) throw std::invalid_argument("cell has wrong shape");
    const Level& level = levels_[d];
    auto it = level.lookup.find(tuple_key(c.edges));
    if (it == level.lookup.end()) throw std::invalid_argument("edges of the cell are not pairwise disjoint");
    const EdgeTuple& tuple = level.tuples[it->second];
    return tuple.offset + subset_rank(tuple, c.vertices);
}

Cell CubeComplex::cell(int d, std::size_t index) const {
    const Level& level = levels_.at(d);
    if (index >= level.cells) throw std::out_of_range("cell index out of range");
    auto it = std::upper_bound(level.tuples.begin(), level.tuples.end(), index,
                               [](std::size_t i, const EdgeTuple& t) { return i < t.offset; });
    const EdgeTuple& tuple = *std::prev(it);
    // Unrank the lexicographic subset.
    auto rank = static_cast<std::int64_t>(index - tuple.offset);
    const auto total = static_cast<std::int64_t>(tuple.free_vertices.size());
    std::int64_t k = n_ - d;
    Cell c{tuple.edges, {}};
    std::int64_t x = 0;
    while (k > 0) {
        auto block = binomial(total - x - 1, k - 1);
        if (rank < block) {
            c.vertices.push_back(tuple.free_vertices[x]);
            --k;
        } else {
            rank -= block;
        }
        ++x;
    }
    return c;
}

SparseIntMatrix CubeComplex::boundary(int d) const {
    if (d < 1 || d > d_max_) throw std::invalid_argument("boundary dimension out of range");
    SparseIntMatrix m(cell_count(d - 1), cell_count(d));
    Cell face;
    for_each_cell(d, [&](std::size_t col, const Cell& c) {
        auto& column = m.columns[col];
        for (int i = 0; i < d; ++i) {
            const std::int64_t sign = i % 2 == 0 ? 1 : -1;
            face.edges = c.edges;
            face.edges.erase(face.edges.begin() + i);
            const auto [tail, head] = edges_[c.edges[i]];
            for (auto [endpoint, coeff] : {std::pair{head, sign}, std::pair{tail, -sign}}) {
                face.vertices = c.vertices;
                face.vertices.insert(std::upper_bound(face.vertices.begin(), face.vertices.end(), endpoint), endpoint);
                column.emplace_back(static_cast<std::uint32_t>(index_of(face)), coeff);
            }
        }
        std::sort(column.begin(), column.end());
    });
    return m;
}

void CubeComplex::dump(std::ostream& out, const Tree& t) const {
    for (int d = 0; d <= d_max_; ++d)
        for_each_cell(d, [&](std::size_t, const Cell& c) {
            out << d << " e=";
            for (std::size_t i = 0; i < c.edges.size(); ++i) {
                auto [u, v] = edges_[c.edges[i]];
                out << (i ? "," : "") << t.name(u) << "-" << t.name(v);
            }
            out << " v=";
            for (std::size_t i = 0; i < c.vertices.size(); ++i) out << (i ? "," : "") << t.name(c.vertices[i]);
            out << '\n';
        });
}

}  // namespace raagtree
