#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "raagtree/star_complex.hpp"

using namespace raagtree;

namespace {

// Independent model of D_n(S) written directly in inclusive arm counts,
// where a Type I vertex counts the node v in every arm. Vertices are keyed
// by (type, counts).
struct InclusiveModel {
    using Key = std::pair<int, ArmCounts>;  // 1 = Type I, 2 = Type II
    std::vector<Key> vertices;
    std::vector<std::pair<Key, Key>> edges;        // (Type II, Type I)
    std::vector<std::pair<ArmCounts, int>> labels;  // Type II counts and arm, per edge
    std::set<std::pair<ArmCounts, int>> tree;

    InclusiveModel(int k, int n) {
        if (n == 0) return;
        // Brute force over all count vectors with entries up to n.
        ArmCounts c(k, 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == k) {
                int sum = std::accumulate(c.begin(), c.end(), 0);
                int occupied = static_cast<int>(std::count_if(c.begin(), c.end(), [](int x) { return x > 0; }));
                // Type I: every arm contains v, so each count is >= 1 and the
                // configuration has sum - (k - 1) points.
                if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 1; }) && sum - (k - 1) == n)
                    vertices.push_back({1, c});
                if (sum == n && occupied >= 2) vertices.push_back({2, c});
                return;
            }
            for (int x = 0; x <= n; ++x) {
                c[pos] = x;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
        // One edge per Type II vertex and occupied arm p: |A_p| kept, every
        // other arm gains v.
        for (const auto& [type, a] : vertices) {
            if (type != 2) continue;
            for (int p = 0; p < k; ++p) {
                if (a[p] == 0) continue;
                ArmCounts b = a;
                for (int q = 0; q < k; ++q)
                    if (q != p) ++b[q];
                edges.push_back({{2, a}, {1, b}});
                labels.push_back({a, p + 1});
            }
        }
        // Successor rule in inclusive counts.
        for (const auto& [type, c0] : vertices) {
            if (type == 1) {
                bool base = true;
                for (int j = 1; j < k; ++j) base = base && c0[j] == 1;
                if (base) continue;
                ArmCounts s = c0;
                for (int j = 1; j < k; ++j) --s[j];
                tree.insert({s, 1});
            } else {
                int r = 0;
                for (int j = 0; j < k; ++j)
                    if (c0[j] > 0) r = j + 1;
                tree.insert({c0, r});
            }
        }
    }
};

struct UnionFind {
    std::map<InclusiveModel::Key, InclusiveModel::Key> parent;
    InclusiveModel::Key find(const InclusiveModel::Key& x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return x;
        return it->second = find(it->second);
    }
    bool unite(const InclusiveModel::Key& a, const InclusiveModel::Key& b) {
        auto ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    }
};

std::set<std::pair<ArmCounts, int>> as_set(const std::vector<DEdge>& edges) {
    std::set<std::pair<ArmCounts, int>> out;
    for (const auto& e : edges) out.insert({e.a, e.p});
    return out;
}

DEdge E(ArmCounts a, int p) { return {std::move(a), p}; }

}  // namespace

TEST_CASE("enumerate_type2 examples") {
    auto v = enumerate_type2(3, 2);
    std::set<ArmCounts> got;
    for (const auto& x : v) got.insert(x.a);
    CHECK(got == std::set<ArmCounts>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(enumerate_type2(3, 1).empty());
    CHECK(enumerate_type2(3, 3).size() == 7);
    CHECK(enumerate_type2(3, 0).empty());
}

TEST_CASE("successor examples") {
    CHECK(successor(TypeIVertex{{0, 1, 0}}) == E({1, 1, 0}, 1));
    CHECK(successor(TypeIIVertex{{0, 1, 1}}) == E({0, 1, 1}, 3));
    CHECK_THROWS_WITH_AS(successor(TypeIVertex{{1, 0, 0}}), "base vertex has no successor", std::invalid_argument);
}

TEST_CASE("successor edge contains its vertex") {
    for (int k = 2; k <= 5; ++k)
        for (int n = 1; n <= 5; ++n) {
            for (const auto& v : enumerate_type1(k, n)) {
                if (is_base_vertex(v)) continue;
                CHECK(successor(v).type1() == v);
            }
            for (const auto& v : enumerate_type2(k, n)) CHECK(successor(v).type2() == v);
        }
}

TEST_CASE("spanning_tree examples") {
    auto t = spanning_tree(3, 2);
    CHECK(as_set(t) == std::set<std::pair<ArmCounts, int>>{
                           {{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{1, 1, 0}, 2}, {{1, 0, 1}, 3}, {{0, 1, 1}, 3}});
    CHECK(enumerate_type1(3, 2).size() + enumerate_type2(3, 2).size() == 6);

    CHECK(spanning_tree(2, 3) == enumerate_edges(2, 3));
    CHECK(spanning_tree(3, 1).empty());
    CHECK(enumerate_type1(3, 1).size() == 1);
}

TEST_CASE("basis examples") {
    CHECK(basis(3, 2).edges == std::vector<DEdge>{E({0, 1, 1}, 2)});

    auto b34 = basis(3, 4);
    CHECK(b34.edges.size() == 6);
    for (const auto& e : b34.edges) {
        CHECK(e.p == 2);
        CHECK(e.a[1] >= 1);
        CHECK(e.a[2] >= 1);
    }

    CHECK(as_set(basis(4, 2).edges) ==
          std::set<std::pair<ArmCounts, int>>{{{0, 1, 1, 0}, 2}, {{0, 1, 0, 1}, 2}, {{0, 0, 1, 1}, 3}});
    CHECK(basis(3, 4).base_vertex.b == ArmCounts{3, 0, 0});
}

TEST_CASE("rank examples") {
    CHECK(rank(3, 2) == 1);
    CHECK(rank(3, 3) == 3);
    CHECK(euler_characteristic(3, 3) == 13 - 15);
    CHECK(rank(4, 2) == 3);
    CHECK(rank_closed_form(4, 2) == 1 + 12 - 10);
    std::int64_t variant = 0;
    CHECK_FALSE(rank_closed_form_variant(3, 2, variant));
    for (int k = 2; k <= 5; ++k) {
        CHECK(rank(k, 0) == 0);
        CHECK(rank(k, 1) == 0);
    }
    for (int n = 0; n <= 8; ++n) CHECK(rank(2, n) == 0);
}

TEST_CASE("vertex and edge counts") {
    for (int k = 2; k <= 5; ++k)
        for (int n = 1; n <= 6; ++n) {
            CHECK(static_cast<std::int64_t>(enumerate_type1(k, n).size()) == binomial(n + k - 2, k - 1));
            CHECK(static_cast<std::int64_t>(enumerate_type2(k, n).size()) == binomial(n + k - 1, k - 1) - k);
            std::size_t expected_edges = 0;
            for (const auto& v : enumerate_type2(k, n))
                expected_edges += std::count_if(v.a.begin(), v.a.end(), [](int x) { return x > 0; });
            CHECK(enumerate_edges(k, n).size() == expected_edges);
        }
}

TEST_CASE("agreement with the inclusive-count model") {
    for (int k = 2; k <= 5; ++k)
        for (int n = 0; n <= 6; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            InclusiveModel model(k, n);
            CHECK(model.vertices.size() == enumerate_type1(k, n).size() + enumerate_type2(k, n).size());
            CHECK(model.edges.size() == enumerate_edges(k, n).size());
            CHECK(model.tree == as_set(spanning_tree(k, n)));

            // Tree is acyclic and spanning in the model's own graph.
            UnionFind uf;
            std::size_t joined = 0;
            for (std::size_t i = 0; i < model.edges.size(); ++i) {
                if (!model.tree.count(model.labels[i])) continue;
                CHECK(uf.unite(model.edges[i].first, model.edges[i].second));
                ++joined;
            }
            if (!model.vertices.empty()) CHECK(joined + 1 == model.vertices.size());

            // Basis = edges minus tree.
            std::set<std::pair<ArmCounts, int>> expected;
            for (const auto& l : model.labels)
                if (!model.tree.count(l)) expected.insert(l);
            CHECK(expected == as_set(basis(k, n).edges));
            auto chi = static_cast<std::int64_t>(model.vertices.size()) - static_cast<std::int64_t>(model.edges.size());
            if (n == 0) chi = 1;
            CHECK(static_cast<std::int64_t>(expected.size()) == 1 - chi);
        }
}

TEST_CASE("spanning tree contains the interval subcomplex") {
    for (int k = 2; k <= 5; ++k)
        for (int n = 0; n <= 6; ++n) {
            auto tree = as_set(spanning_tree(k, n));
            auto all = enumerate_edges(k, n);
            auto basis_edges = basis(k, n).edges;
            CHECK(tree.size() + basis_edges.size() == all.size());
            for (const auto& e : basis_edges) CHECK_FALSE(tree.count({e.a, e.p}));
            for (const auto& e : all)
                if (std::all_of(e.a.begin() + 2, e.a.end(), [](int x) { return x == 0; })) CHECK(tree.count({e.a, e.p}));
        }
}

TEST_CASE("iota examples") {
    CHECK(iota(E({0, 1, 1}, 2), 2) == E({0, 2, 1}, 2));
    CHECK(is_basis_edge(iota(E({0, 1, 1}, 2), 2)));
    CHECK(iota(E({0, 1, 1}, 2), 1) == E({1, 1, 1}, 2));
    CHECK(is_basis_edge(E({1, 1, 1}, 2)));
    CHECK(iota(E({1, 1, 0}, 1), 2) == E({1, 2, 0}, 1));
    CHECK(is_tree_edge(E({1, 2, 0}, 1)));
}

TEST_CASE("iota preserves tree and basis and commutes") {
    for (int k = 2; k <= 5; ++k)
        for (int n = 1; n <= 6; ++n) {
            auto lower_basis = basis(k, n - 1).edges;
            auto upper_basis = as_set(basis(k, n).edges);
            auto upper_tree = as_set(spanning_tree(k, n));
            for (int arm : {1, 2}) {
                std::set<std::pair<ArmCounts, int>> images;
                for (const auto& e : lower_basis) {
                    auto f = iota(e, arm);
                    CHECK(upper_basis.count({f.a, f.p}));
                    images.insert({f.a, f.p});
                }
                CHECK(images.size() == lower_basis.size());
                for (const auto& e : spanning_tree(k, n - 1)) {
                    auto f = iota(e, arm);
                    CHECK(upper_tree.count({f.a, f.p}));
                }
            }
            if (n >= 2)
                for (const auto& e : basis(k, n - 2).edges) CHECK(iota(iota(e, 1), 2) == iota(iota(e, 2), 1));
        }
}

TEST_CASE("capacity examples") {
    CHECK(capacity(E({0, 3, 1}, 2), 2) == 2);
    CHECK(capacity(E({2, 1, 1}, 2), 1) == 2);
    CHECK(capacity(E({0, 1, 1}, 2), 2) == 0);
    CHECK_THROWS_WITH_AS(capacity(E({1, 1, 0}, 1), 2), doctest::Contains("not a basis edge"), std::invalid_argument);
}

TEST_CASE("capacity matches exhaustive forward images") {
    for (int k = 2; k <= 4; ++k)
        for (int n = 0; n <= 6; ++n)
            for (int arm : {1, 2}) {
                // images[t] = t-fold iota image of basis(k, n - t).
                std::vector<std::set<std::pair<ArmCounts, int>>> images(n + 1);
                for (int t = 0; t <= n; ++t)
                    for (auto e : basis(k, n - t).edges) {
                        for (int i = 0; i < t; ++i) e = iota(e, arm);
                        images[t].insert({e.a, e.p});
                    }
                for (const auto& e : basis(k, n).edges) {
                    int cap = capacity(e, arm);
                    for (int t = 0; t <= n; ++t) CHECK((images[t].count({e.a, e.p}) > 0) == (t <= cap));
                }
            }
}

TEST_CASE("debug dump format") {
    std::ostringstream out;
    dump_star_complex(out, 3, 2);
    auto text = out.str();
    CHECK(text.find("a=(0,1,1) p=2 basis\n") != std::string::npos);
    CHECK(text.find("a=(1,1,0) p=1 tree\n") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
}
