#include "raagtree/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include <json.hpp>

namespace raagtree {

bool HomologyReport::torsion_free() const {
    return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

std::string HomologyReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["cells"] = cells;
    doc["betti"] = betti;
    doc["torsion"] = nlohmann::ordered_json::array();
    for (const auto& factors : torsion) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& f : factors) {
            // Invariant factors of these complexes fit comfortably; larger
            // ones are written as decimal strings.
            if (f <= BigInt(INT64_MAX))
                row.push_back(static_cast<std::int64_t>(f));
            else
                row.push_back(f.str());
        }
        doc["torsion"].push_back(std::move(row));
    }
    return doc.dump() + "\n";
}

HomologyReport betti(const CubeComplex& c, bool want_torsion) {
    const int top = c.max_dimension();
    HomologyReport report;
    report.cells = c.cell_counts();

    std::vector<SparseIntMatrix> boundaries;
    for (int d = 1; d <= top; ++d) boundaries.push_back(c.boundary(d));
    for (int d = 2; d <= top; ++d)
        if (!boundaries[d - 2].multiply(boundaries[d - 1]).is_zero()) report.boundary_squares_vanish = false;

    std::vector<std::size_t> rank(top + 2, 0);  // rank[d] = rank of boundary d
    std::vector<std::vector<BigInt>> factors(top + 2);
    for (int d = 1; d <= top; ++d) {
        auto r = reduce(boundaries[d - 1], want_torsion);
        rank[d] = r.rank;
        factors[d] = std::move(r.torsion);
        report.boundary_ranks.push_back(r.rank);
    }
    for (int d = 0; d < top; ++d) {
        report.betti.push_back(report.cells[d] - rank[d] - rank[d + 1]);
        report.torsion.push_back(factors[d + 1]);
    }
    return report;
}

Pi1Presentation pi1_presentation(const CubeComplex& c) {
    if (c.max_dimension() < 2) throw std::invalid_argument("pi1 presentation needs squares (d_max >= 2)");
    const std::size_t vertices = c.cell_count(0);
    const std::size_t edges = c.cell_count(1);

    // 1-cell endpoints: tail and head 0-cells.
    std::vector<std::pair<std::size_t, std::size_t>> ends(edges);
    std::vector<std::vector<std::size_t>> incident(vertices);
    const auto& tree_edges = c.tree_edges();
    c.for_each_cell(1, [&](std::size_t idx, const Cell& cell) {
        auto [tail, head] = tree_edges[cell.edges[0]];
        Cell v{{}, cell.vertices};
        v.vertices.insert(std::upper_bound(v.vertices.begin(), v.vertices.end(), tail), tail);
        std::size_t from = c.index_of(v);
        v.vertices = cell.vertices;
        v.vertices.insert(std::upper_bound(v.vertices.begin(), v.vertices.end(), head), head);
        std::size_t to = c.index_of(v);
        ends[idx] = {from, to};
        incident[from].push_back(idx);
        incident[to].push_back(idx);
    });

    std::vector<char> seen(vertices, 0), in_tree(edges, 0);
    std::deque<std::size_t> queue;
    if (vertices > 0) {
        seen[0] = 1;
        queue.push_back(0);
    }
    std::size_t reached = queue.size();
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (auto e : incident[x]) {  // ascending 1-cell index
            auto y = ends[e].first == x ? ends[e].second : ends[e].first;
            if (seen[y]) continue;
            seen[y] = 1;
            in_tree[e] = 1;
            ++reached;
            queue.push_back(y);
        }
    }
    if (reached != vertices) throw std::runtime_error("disconnected");

    Pi1Presentation out;
    std::vector<std::size_t> generator(edges, 0);
    for (std::size_t e = 0; e < edges; ++e)
        if (!in_tree[e]) generator[e] = out.generator_count++;

    // Square with edges e0 < e1 and corners (x0, x1): the loop
    // (t0,t1) -> (h0,t1) -> (h0,h1) -> (t0,h1) -> (t0,t1).
    auto one_cell = [&](std::uint32_t edge, std::vector<std::uint32_t> verts, std::uint32_t extra) {
        verts.insert(std::upper_bound(verts.begin(), verts.end(), extra), extra);
        return c.index_of(Cell{{edge}, std::move(verts)});
    };
    SparseIntMatrix exponents(out.generator_count, c.cell_count(2));
    c.for_each_cell(2, [&](std::size_t idx, const Cell& sq) {
        auto [t0, h0] = tree_edges[sq.edges[0]];
        auto [t1, h1] = tree_edges[sq.edges[1]];
        const std::pair<std::size_t, int> loop[4] = {
            {one_cell(sq.edges[0], sq.vertices, t1), +1},
            {one_cell(sq.edges[1], sq.vertices, h0), +1},
            {one_cell(sq.edges[0], sq.vertices, h1), -1},
            {one_cell(sq.edges[1], sq.vertices, t0), -1},
        };
        std::vector<std::pair<std::size_t, int>> word;
        for (auto [e, sign] : loop)
            if (!in_tree[e]) word.emplace_back(generator[e], sign);
        std::vector<std::pair<std::uint32_t, std::int64_t>> col;
        for (auto [g, sign] : word) col.emplace_back(static_cast<std::uint32_t>(g), sign);
        std::sort(col.begin(), col.end());
        // Merge repeated letters into exponent sums.
        auto& column = exponents.columns[idx];
        for (auto& [g, s] : col) {
            if (!column.empty() && column.back().first == g)
                column.back().second += s;
            else
                column.emplace_back(g, s);
        }
        column.erase(std::remove_if(column.begin(), column.end(), [](const auto& x) { return x.second == 0; }),
                     column.end());
        out.relators.push_back(std::move(word));
    });
    out.abelianization_rank = out.generator_count - rational_rank(exponents);
    return out;
}

std::vector<std::size_t> raag_cliques(const Presentation& p, int max_size) {
    if (max_size < 1 || max_size > 3) throw std::invalid_argument("max_size must be 1, 2 or 3");
    std::vector<std::size_t> out{p.generators.size()};
    if (max_size >= 2) out.push_back(p.relations.size());
    if (max_size >= 3) {
        std::vector<std::vector<std::size_t>> higher(p.generators.size());
        for (const auto& [i, j] : p.relations) higher[i].push_back(j);
        std::size_t triangles = 0;
        for (const auto& [i, j] : p.relations)
            for (auto k : higher[j])
                if (p.commute(i, k)) ++triangles;
        out.push_back(triangles);
    }
    return out;
}

}  // namespace raagtree
