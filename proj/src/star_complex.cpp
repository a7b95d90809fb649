#include "raagtree/star_complex.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace raagtree {

int DEdge::strands() const { return std::accumulate(a.begin(), a.end(), 0); }

TypeIVertex DEdge::type1() const {
    ArmCounts b = a;
    --b.at(p - 1);
    return {b};
}

std::string to_string(const ArmCounts& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

std::string to_string(const DEdge& e) { return "a=" + to_string(e.a) + " p=" + std::to_string(e.p); }

std::int64_t binomial(std::int64_t m, std::int64_t r) {
    if (r < 0 || m < 0 || r > m) return 0;
    r = std::min(r, m - r);
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= r; ++i) out = out * (m - r + i) / i;
    return out;
}

std::vector<ArmCounts> compositions(int k, int total) {
    std::vector<ArmCounts> out;
    if (k <= 0 || total < 0) return out;
    ArmCounts cur(k, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == k - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur[pos] = x;
            self(self, pos + 1, left - x);
        }
    };
    rec(rec, 0, total);
    return out;
}

namespace {

int occupied(const ArmCounts& a) {
    return static_cast<int>(std::count_if(a.begin(), a.end(), [](int x) { return x > 0; }));
}

void check_star(int k, int n) {
    if (k < 2) throw std::invalid_argument("a star needs at least two arms");
    if (n < 0) throw std::invalid_argument("strand count must be non-negative");
}

}  // namespace

std::vector<TypeIVertex> enumerate_type1(int k, int n) {
    check_star(k, n);
    std::vector<TypeIVertex> out;
    if (n == 0) return out;
    for (auto& b : compositions(k, n - 1)) out.push_back({std::move(b)});
    return out;
}

std::vector<TypeIIVertex> enumerate_type2(int k, int n) {
    check_star(k, n);
    std::vector<TypeIIVertex> out;
    for (auto& a : compositions(k, n))
        if (occupied(a) >= 2) out.push_back({std::move(a)});
    return out;
}

std::vector<DEdge> enumerate_edges(int k, int n) {
    std::vector<DEdge> out;
    for (const auto& v : enumerate_type2(k, n))
        for (int p = 1; p <= k; ++p)
            if (v.a[p - 1] > 0) out.push_back({v.a, p});
    return out;
}

int last_occupied(const ArmCounts& a) {
    for (int j = static_cast<int>(a.size()); j >= 1; --j)
        if (a[j - 1] > 0) return j;
    return 0;
}

bool is_base_vertex(const TypeIVertex& v) {
    return std::all_of(v.b.begin() + 1, v.b.end(), [](int x) { return x == 0; });
}

DEdge successor(const DVertex& v) {
    if (const auto* t1 = std::get_if<TypeIVertex>(&v)) {
        if (is_base_vertex(*t1)) throw std::invalid_argument("base vertex has no successor");
        ArmCounts a = t1->b;
        ++a[0];
        return {a, 1};
    }
    const auto& t2 = std::get<TypeIIVertex>(v);
    if (occupied(t2.a) < 2) throw std::invalid_argument("not a Type II vertex: " + to_string(t2.a));
    return {t2.a, last_occupied(t2.a)};
}

bool is_tree_edge(const DEdge& e) { return e.p == 1 || e.p == last_occupied(e.a); }

bool is_basis_edge(const DEdge& e) {
    return e.p >= 2 && e.p <= e.k() && e.a[e.p - 1] > 0 && occupied(e.a) >= 2 && !is_tree_edge(e);
}

std::vector<DEdge> spanning_tree(int k, int n) {
    std::vector<DEdge> out;
    for (const auto& v : enumerate_type1(k, n))
        if (!is_base_vertex(v)) out.push_back(successor(v));
    for (const auto& v : enumerate_type2(k, n)) out.push_back(successor(v));
    std::sort(out.begin(), out.end());
    return out;
}

StarBasis basis(int k, int n) {
    StarBasis out;
    out.n = n;
    out.k = k;
    if (n >= 1) {
        out.base_vertex.b.assign(k, 0);
        out.base_vertex.b[0] = n - 1;
    }
    auto all = enumerate_edges(k, n);
    auto tree = spanning_tree(k, n);
    std::set_difference(all.begin(), all.end(), tree.begin(), tree.end(), std::back_inserter(out.edges));
    return out;
}

std::int64_t euler_characteristic(int k, int n) {
    check_star(k, n);
    if (n == 0) return 1;
    auto vertices = static_cast<std::int64_t>(enumerate_type1(k, n).size() + enumerate_type2(k, n).size());
    return vertices - static_cast<std::int64_t>(enumerate_edges(k, n).size());
}

std::int64_t rank_closed_form(int k, int n) {
    return 1 + (k - 1) * binomial(n + k - 2, k - 1) - binomial(n + k - 1, k - 1);
}

bool rank_closed_form_variant(int k, int n, std::int64_t& out) {
    if (n - k - 1 < 0) return false;
    out = 1 + (k - 1) * binomial(n + k - 2, k - 1) - binomial(n - k - 1, k - 1);
    return true;
}

std::int64_t rank(int k, int n) {
    auto enumerated = static_cast<std::int64_t>(basis(k, n).edges.size());
    auto from_euler = 1 - euler_characteristic(k, n);
    auto closed = rank_closed_form(k, n);
    if (enumerated != from_euler || enumerated != closed)
        throw std::logic_error("rank mismatch at k=" + std::to_string(k) + " n=" + std::to_string(n) + ": basis " +
                               std::to_string(enumerated) + ", 1-chi " + std::to_string(from_euler) +
                               ", closed form " + std::to_string(closed));
    return enumerated;
}

DEdge iota(const DEdge& e, int arm) {
    if (arm < 1 || arm > e.k()) throw std::invalid_argument("arm index out of range");
    DEdge out = e;
    ++out.a[arm - 1];
    return out;
}

int capacity(const DEdge& e, int arm) {
    if (!is_basis_edge(e)) throw std::invalid_argument("not a basis edge: " + to_string(e));
    if (arm != 1 && arm != 2) throw std::invalid_argument("capacity is defined for arms 1 and 2 only");
    return arm == e.p ? e.a[arm - 1] - 1 : e.a[arm - 1];
}

void dump_star_complex(std::ostream& out, int k, int n) {
    for (const auto& e : enumerate_edges(k, n))
        out << to_string(e) << (is_tree_edge(e) ? " tree" : " basis") << '\n';
}

}  // namespace raagtree
