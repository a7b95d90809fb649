/**
 * Finite combinatorial trees with a marked endpoint, the linear-tree
 * predicate, and the decomposition of a linear tree into a chain of stars.
 */

#ifndef RAAGTREE_TREE_HPP
#define RAAGTREE_TREE_HPP

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace raagtree {

using VertexId = std::size_t;

/// Raised for malformed tree input. Carries a line (text format) or field
/// (JSON format) locator in its message.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a well-formed edge list does not describe a tree with a
/// valid marked endpoint.
class TreeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when no path from the marked endpoint covers every node.
class NotLinearError : public TreeError {
public:
    NotLinearError(const std::string& what, std::vector<std::string> offending)
        : TreeError(what), offending_nodes(std::move(offending)) {}

    std::vector<std::string> offending_nodes;
};

/**
 * A validated finite tree. Vertex ids are the positions of the names in
 * lexicographic order, so two inputs naming the same vertices and edges
 * produce identical internal ids regardless of input order.
 */
class Tree {
public:
    /// Validates connectivity, acyclicity and the endpoint mark.
    Tree(std::vector<std::string> names,
         std::vector<std::pair<std::string, std::string>> edges,
         const std::string& marked_endpoint);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(VertexId v) const { return names_.at(v); }
    VertexId id_of(const std::string& name) const;

    /// Edges as (u, v) with u < v, sorted.
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    /// Neighbours of v in ascending id order.
    const std::vector<VertexId>& neighbours(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

    VertexId marked_endpoint() const { return marked_; }

    /// Vertices of degree at least 3.
    std::vector<VertexId> nodes() const;
    /// Vertices of degree 1.
    std::vector<VertexId> endpoints() const;

    /// Unique path between two vertices, both ends included.
    std::vector<VertexId> path(VertexId from, VertexId to) const;

private:
    std::vector<std::string> names_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
    VertexId marked_ = 0;
};

Tree parse_tree_json(const std::string& text);
Tree parse_tree_text(const std::string& text);
/// Dispatches on content: a leading '{' selects JSON.
Tree parse_tree(const std::string& text);
Tree load_tree(const std::filesystem::path& file);

/**
 * Returns a path from the marked endpoint to another endpoint containing
 * every node. Beyond the last node the path follows the branch whose
 * endpoint has the lowest id. Throws NotLinearError otherwise.
 */
std::vector<VertexId> validate_linear(const Tree& t);

struct Arm {
    std::string endpoint;
    std::size_t length = 0;  // in edges, measured in the normalized tree
};

struct Star {
    std::string node;
    /// arms[0] points toward the marked endpoint, arms[1] along the spine.
    std::vector<Arm> arms;
    /// Edges of the normalized tree belonging to this star, as name pairs.
    std::vector<std::pair<std::string, std::string>> edges;

    int k() const { return static_cast<int>(arms.size()); }
};

struct StarDecomposition {
    /// The input tree with one vertex inserted between each pair of adjacent
    /// nodes, so that every glue point is an endpoint of both its stars.
    Tree normalized;
    std::vector<Star> stars;
    std::vector<std::string> glue_points;
    /// Spine of the original tree, as names.
    std::vector<std::string> spine;

    bool is_interval() const { return stars.empty(); }
    std::vector<int> arities() const;
};

StarDecomposition decompose(const Tree& t);

/// Replaces every edge by a path of `pieces` edges. New vertices are named
/// "u|v|i" with u < v the original endpoints and i = 1..pieces-1.
Tree subdivide_edges(const Tree& t, int pieces);

/// Subdivision sufficient for the discretized model at n strands: n + 1
/// edges per original edge.
inline Tree subdivide(const Tree& t, int strands) { return subdivide_edges(t, strands + 1); }

}  // namespace raagtree

#endif
