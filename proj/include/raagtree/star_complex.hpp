/**
 * Combinatorial model of the one-dimensional deformation retract D_n(S) of
 * the n-point configuration space of a star S with k arms.
 *
 * Vertices come in two kinds. A Type I vertex contains the node v and is
 * stored by its exclusive arm counts b (v counted in no arm, sum n - 1).
 * A Type II vertex avoids v and is stored by its arm counts a (sum n, at
 * least two arms occupied). An edge is keyed by a Type II vertex a and an
 * occupied arm p; its Type I end is b = a - e_p, obtained by sliding the
 * innermost point of arm p onto v.
 *
 * Arms are numbered 1..k. Arm 1 points toward the marked endpoint and arm 2
 * is the other distinguished endpoint.
 */

#ifndef RAAGTREE_STAR_COMPLEX_HPP
#define RAAGTREE_STAR_COMPLEX_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace raagtree {

using ArmCounts = std::vector<int>;

struct TypeIVertex {
    ArmCounts b;
    auto operator<=>(const TypeIVertex&) const = default;
};

struct TypeIIVertex {
    ArmCounts a;
    auto operator<=>(const TypeIIVertex&) const = default;
};

using DVertex = std::variant<TypeIVertex, TypeIIVertex>;

struct DEdge {
    ArmCounts a;
    int p = 0;  // 1-based arm index

    int k() const { return static_cast<int>(a.size()); }
    int strands() const;
    TypeIIVertex type2() const { return {a}; }
    TypeIVertex type1() const;

    auto operator<=>(const DEdge&) const = default;
};

std::string to_string(const ArmCounts& a);
std::string to_string(const DEdge& e);

struct StarBasis {
    int n = 0;
    int k = 0;
    std::vector<DEdge> edges;  // sorted
    TypeIVertex base_vertex;   // (n-1, 0, ..., 0); empty for n = 0
};

/// Exact binomial coefficient, zero outside 0 <= r <= m.
std::int64_t binomial(std::int64_t m, std::int64_t r);

/// All length-k vectors of non-negative integers summing to total, in
/// lexicographic order.
std::vector<ArmCounts> compositions(int k, int total);

std::vector<TypeIVertex> enumerate_type1(int k, int n);
std::vector<TypeIIVertex> enumerate_type2(int k, int n);
/// Every edge of D_n(S), sorted.
std::vector<DEdge> enumerate_edges(int k, int n);

/// Largest occupied arm index (1-based).
int last_occupied(const ArmCounts& a);

bool is_base_vertex(const TypeIVertex& v);
/// Edge joining a vertex to its successor. Throws std::invalid_argument for
/// the base vertex (n - 1, 0, ..., 0).
DEdge successor(const DVertex& v);

/// Edges of the successor tree, sorted.
std::vector<DEdge> spanning_tree(int k, int n);
bool is_tree_edge(const DEdge& e);
bool is_basis_edge(const DEdge& e);
StarBasis basis(int k, int n);

/// Euler characteristic of D_n(S). For n = 0 the complex is a single point
/// (the empty configuration).
std::int64_t euler_characteristic(int k, int n);
/// 1 + (k-1) C(n+k-2, k-1) - C(n+k-1, k-1).
std::int64_t rank_closed_form(int k, int n);
/// The variant with C(n-k-1, k-1) as last term, kept for the comparison
/// column of the rank table. Returns false when the binomial is undefined
/// (negative upper index).
bool rank_closed_form_variant(int k, int n, std::int64_t& out);
/// Size of the enumerated basis, checked against 1 - chi and the closed
/// form. Throws std::logic_error on disagreement.
std::int64_t rank(int k, int n);

/// Adds one strand at the end of the given arm (1 or 2).
DEdge iota(const DEdge& e, int arm);
/// Largest t such that e is a t-fold iota image on `arm` of a basis edge.
/// Throws std::invalid_argument for non-basis edges.
int capacity(const DEdge& e, int arm);

/// One edge per line: "a=(a1,...,ak) p=<arm> tree|basis".
void dump_star_complex(std::ostream& out, int k, int n);

}  // namespace raagtree

#endif
