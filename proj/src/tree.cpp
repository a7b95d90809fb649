#include "raagtree/tree.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace raagtree {

namespace {

// Union-find over vertex ids, used only for cycle detection while loading.
struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    std::vector<std::size_t> parent;
};

}  // namespace

Tree::Tree(std::vector<std::string> names,
           std::vector<std::pair<std::string, std::string>> edges,
           const std::string& marked_endpoint) {
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
        throw TreeError("duplicate vertex id");
    if (names.empty()) throw TreeError("empty vertex set");
    names_ = std::move(names);

    DisjointSets sets(names_.size());
    for (const auto& [a, b] : edges) {
        VertexId u = id_of(a), v = id_of(b);
        if (u == v) throw TreeError("self-loop at '" + a + "'");
        if (u > v) std::swap(u, v);
        if (!sets.unite(u, v)) throw TreeError("not a tree: edge {" + a + ", " + b + "} closes a cycle");
        edges_.emplace_back(u, v);
    }
    if (edges_.size() + 1 != names_.size())
        throw TreeError("not a tree: graph is disconnected");
    std::sort(edges_.begin(), edges_.end());

    adjacency_.resize(names_.size());
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    marked_ = id_of(marked_endpoint);
    if (degree(marked_) != 1)
        throw TreeError("marked vertex '" + marked_endpoint + "' is not an endpoint");
}

VertexId Tree::id_of(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) throw TreeError("unknown vertex '" + name + "'");
    return static_cast<VertexId>(it - names_.begin());
}

std::vector<VertexId> Tree::nodes() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (degree(v) >= 3) out.push_back(v);
    return out;
}

std::vector<VertexId> Tree::endpoints() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

std::vector<VertexId> Tree::path(VertexId from, VertexId to) const {
    constexpr VertexId none = static_cast<VertexId>(-1);
    std::vector<VertexId> parent(vertex_count(), none);
    std::vector<VertexId> stack{from};
    parent[from] = from;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        if (x == to) break;
        for (VertexId y : adjacency_[x])
            if (parent[y] == none) {
                parent[y] = x;
                stack.push_back(y);
            }
    }
    std::vector<VertexId> out{to};
    while (out.back() != from) out.push_back(parent[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
}

Tree parse_tree_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("tree JSON must be an object");
    for (const char* field : {"vertices", "edges", "endpoint"})
        if (!doc.contains(field)) throw ParseError(std::string("missing field '") + field + "'");

    const auto& jv = doc["vertices"];
    if (!jv.is_array()) throw ParseError("field 'vertices' must be an array");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < jv.size(); ++i) {
        if (!jv[i].is_string()) throw ParseError("field 'vertices[" + std::to_string(i) + "]' must be a string");
        names.push_back(jv[i].get<std::string>());
    }
    std::set<std::string> known(names.begin(), names.end());

    const auto& je = doc["edges"];
    if (!je.is_array()) throw ParseError("field 'edges' must be an array");
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < je.size(); ++i) {
        const std::string where = "field 'edges[" + std::to_string(i) + "]'";
        const auto& e = je[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError(where + " must be a pair of vertex ids");
        auto a = e[0].get<std::string>(), b = e[1].get<std::string>();
        if (a == b) throw ParseError(where + ": self-loop at '" + a + "'");
        for (const auto& x : {a, b})
            if (!known.count(x)) throw ParseError(where + ": unknown vertex '" + x + "'");
        edges.emplace_back(std::move(a), std::move(b));
    }

    if (!doc["endpoint"].is_string()) throw ParseError("field 'endpoint' must be a string");
    auto endpoint = doc["endpoint"].get<std::string>();
    if (!known.count(endpoint)) throw ParseError("field 'endpoint': unknown vertex '" + endpoint + "'");
    return Tree(std::move(names), std::move(edges), endpoint);
}

Tree parse_tree_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::string endpoint;
    std::set<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string s; fields >> s;) tok.push_back(s);
        if (tok.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);
        if (endpoint.empty()) {
            if (tok.size() != 2 || tok[0] != "endpoint")
                throw ParseError(where + ": expected 'endpoint <id>'");
            endpoint = tok[1];
            continue;
        }
        if (tok.size() != 2) throw ParseError(where + ": expected '<u> <v>'");
        if (tok[0] == tok[1]) throw ParseError(where + ": self-loop at '" + tok[0] + "'");
        names.insert(tok[0]);
        names.insert(tok[1]);
        edges.emplace_back(tok[0], tok[1]);
    }
    if (endpoint.empty()) throw ParseError("missing 'endpoint' line");
    if (!names.count(endpoint)) throw ParseError("endpoint '" + endpoint + "' does not appear in any edge");
    return Tree({names.begin(), names.end()}, std::move(edges), endpoint);
}

Tree parse_tree(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_tree_json(text);
    return parse_tree_text(text);
}

Tree load_tree(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::ios_base::failure("cannot open '" + file.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_tree(buf.str());
}

std::vector<VertexId> validate_linear(const Tree& t) {
    const VertexId p = t.marked_endpoint();
    const auto nodes = t.nodes();

    // Depth and parent from p; all nodes must lie on the root path of the
    // deepest one.
    constexpr VertexId none = static_cast<VertexId>(-1);
    std::vector<VertexId> parent(t.vertex_count(), none);
    std::vector<std::size_t> depth(t.vertex_count(), 0);
    std::vector<VertexId> order{p};
    parent[p] = p;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (VertexId y : t.neighbours(order[i]))
            if (parent[y] == none) {
                parent[y] = order[i];
                depth[y] = depth[order[i]] + 1;
                order.push_back(y);
            }

    VertexId last = p;
    for (VertexId v : nodes)
        if (depth[v] > depth[last]) last = v;

    std::vector<VertexId> spine{last};
    while (spine.back() != p) spine.push_back(parent[spine.back()]);
    std::reverse(spine.begin(), spine.end());

    std::set<VertexId> on_spine(spine.begin(), spine.end());
    std::vector<std::string> off;
    for (VertexId v : nodes)
        if (!on_spine.count(v)) off.push_back(t.name(v));
    if (!off.empty()) {
        std::string msg = "not linear: no path from '" + t.name(p) + "' passes through every node; off-path nodes:";
        for (const auto& s : off) msg += " " + s;
        throw NotLinearError(msg, off);
    }

    // Extend to an endpoint through the branch with the lowest endpoint id.
    while (t.degree(spine.back()) != 1 || spine.size() == 1) {
        const VertexId here = spine.back();
        VertexId best_branch = none, best_end = none;
        for (VertexId y : t.neighbours(here)) {
            if (spine.size() > 1 && y == spine[spine.size() - 2]) continue;
            VertexId prev = here, cur = y;
            while (t.degree(cur) == 2) {
                VertexId next = t.neighbours(cur)[0] == prev ? t.neighbours(cur)[1] : t.neighbours(cur)[0];
                prev = cur;
                cur = next;
            }
            if (best_end == none || cur < best_end) {
                best_end = cur;
                best_branch = y;
            }
        }
        VertexId prev = here, cur = best_branch;
        spine.push_back(cur);
        while (t.degree(cur) == 2) {
            VertexId next = t.neighbours(cur)[0] == prev ? t.neighbours(cur)[1] : t.neighbours(cur)[0];
            prev = cur;
            cur = next;
            spine.push_back(cur);
        }
    }
    return spine;
}

std::vector<int> StarDecomposition::arities() const {
    std::vector<int> out;
    for (const auto& s : stars) out.push_back(s.k());
    return out;
}

namespace {

std::string fresh_name(const std::set<std::string>& taken, std::string base) {
    while (taken.count(base)) base += "'";
    return base;
}

}  // namespace

StarDecomposition decompose(const Tree& t) {
    const auto spine = validate_linear(t);
    std::vector<std::size_t> node_pos;
    for (std::size_t i = 0; i < spine.size(); ++i)
        if (t.degree(spine[i]) >= 3) node_pos.push_back(i);

    std::vector<std::string> spine_names;
    for (VertexId v : spine) spine_names.push_back(t.name(v));

    if (node_pos.empty())
        return StarDecomposition{t, {}, {}, spine_names};

    // Build the normalized tree: a glue vertex between every pair of
    // consecutive nodes, inserted when they are adjacent.
    std::set<std::string> taken(t.names().begin(), t.names().end());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : t.edges()) edges.emplace_back(t.name(u), t.name(v));
    std::vector<std::string> glue;
    for (std::size_t j = 0; j + 1 < node_pos.size(); ++j) {
        std::size_t a = node_pos[j], b = node_pos[j + 1];
        if (b - a >= 2) {
            glue.push_back(spine_names[a + (b - a) / 2]);
            continue;
        }
        const std::string& x = spine_names[a];
        const std::string& y = spine_names[b];
        auto name = fresh_name(taken, std::min(x, y) + "|" + std::max(x, y) + "|glue");
        taken.insert(name);
        auto it = std::find_if(edges.begin(), edges.end(), [&](const auto& e) {
            return (e.first == x && e.second == y) || (e.first == y && e.second == x);
        });
        *it = {x, name};
        edges.emplace_back(name, y);
        glue.push_back(name);
    }
    Tree normalized({taken.begin(), taken.end()}, edges, t.name(t.marked_endpoint()));
    std::set<VertexId> glue_ids;
    for (const auto& g : glue) glue_ids.insert(normalized.id_of(g));

    std::vector<Star> stars;
    for (std::size_t j = 0; j < node_pos.size(); ++j) {
        const VertexId v = normalized.id_of(spine_names[node_pos[j]]);
        const VertexId toward_p = normalized.id_of(
            j > 0 && node_pos[j - 1] + 1 == node_pos[j] ? glue[j - 1] : spine_names[node_pos[j] - 1]);
        // The spine successor in the original tree may have been replaced by
        // a glue vertex in the normalized tree.
        VertexId along_spine = normalized.id_of(
            j + 1 < node_pos.size() && node_pos[j + 1] == node_pos[j] + 1 ? glue[j]
                                                                          : spine_names[node_pos[j] + 1]);

        Star star;
        star.node = normalized.name(v);
        struct Walk {
            Arm arm;
            std::vector<std::pair<std::string, std::string>> edges;
        };
        auto walk = [&](VertexId first) {
            Walk w;
            VertexId prev = v, cur = first;
            w.edges.emplace_back(normalized.name(prev), normalized.name(cur));
            while (normalized.degree(cur) == 2 && !glue_ids.count(cur)) {
                const auto& nb = normalized.neighbours(cur);
                VertexId next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
                w.edges.emplace_back(normalized.name(prev), normalized.name(cur));
            }
            w.arm = Arm{normalized.name(cur), w.edges.size()};
            return w;
        };

        std::vector<Walk> walks{walk(toward_p), walk(along_spine)};
        std::vector<Walk> rest;
        for (VertexId y : normalized.neighbours(v))
            if (y != toward_p && y != along_spine) rest.push_back(walk(y));
        std::sort(rest.begin(), rest.end(), [](const Walk& a, const Walk& b) { return a.arm.endpoint < b.arm.endpoint; });
        walks.insert(walks.end(), rest.begin(), rest.end());
        for (auto& w : walks) {
            star.arms.push_back(w.arm);
            star.edges.insert(star.edges.end(), w.edges.begin(), w.edges.end());
        }
        stars.push_back(std::move(star));
    }
    return StarDecomposition{std::move(normalized), std::move(stars), std::move(glue), std::move(spine_names)};
}

Tree subdivide_edges(const Tree& t, int pieces) {
    if (pieces < 1) throw std::invalid_argument("subdivision needs at least one piece per edge");
    std::vector<std::string> names = t.names();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : t.edges()) {
        std::string prev = t.name(u);
        for (int i = 1; i < pieces; ++i) {
            std::string mid = t.name(u) + "|" + t.name(v) + "|" + std::to_string(i);
            names.push_back(mid);
            edges.emplace_back(prev, mid);
            prev = mid;
        }
        edges.emplace_back(prev, t.name(v));
    }
    return Tree(std::move(names), std::move(edges), t.name(t.marked_endpoint()));
}

}  // namespace raagtree
