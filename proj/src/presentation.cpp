#include "raagtree/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace raagtree {

std::string to_string(const Generator& g) { return "(" + std::to_string(g.star) + ", " + to_string(g.edge) + ")"; }

std::optional<std::size_t> Presentation::index_of(const Generator& g) const {
    auto it = std::lower_bound(generators.begin(), generators.end(), g);
    if (it == generators.end() || *it != g) return std::nullopt;
    return static_cast<std::size_t>(it - generators.begin());
}

bool Presentation::commute(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(relations.begin(), relations.end(), std::make_pair(i, j));
}

namespace {

struct Partial {
    std::vector<Generator> generators;  // sorted
    std::set<std::pair<Generator, Generator>> relations;
};

Generator push_left(Generator g, int times) {
    g.edge.a[0] += times;
    return g;
}

class Assembler {
public:
    explicit Assembler(std::vector<int> arities) : arities_(std::move(arities)) {}

    // Presentation of the union of stars i..m (1-based) at the given level.
    const Partial& suffix(int i, int level) {
        auto key = std::make_pair(i, level);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        Partial out;
        const int k = arities_[i - 1];
        for (auto& e : basis(k, level).edges) out.generators.push_back({i, std::move(e)});
        if (i < static_cast<int>(arities_.size())) {
            const Partial& rest = suffix(i + 1, level);
            out.generators.insert(out.generators.end(), rest.generators.begin(), rest.generators.end());
            out.relations = rest.relations;
            for (int split = 1; split <= level - 1; ++split) {
                // Star side: `split` strands parked at the glue point.
                std::vector<Generator> left;
                for (auto e : basis(k, level - split).edges) {
                    for (int t = 0; t < split; ++t) e = iota(e, 2);
                    left.push_back({i, std::move(e)});
                }
                // Remainder side: level - split strands parked at the glue point.
                std::vector<Generator> right;
                for (const auto& h : suffix(i + 1, split).generators) right.push_back(push_left(h, level - split));
                for (const auto& g : left)
                    for (const auto& h : right) out.relations.emplace(g, h);
            }
        }
        std::sort(out.generators.begin(), out.generators.end());
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    std::vector<int> arities_;
    std::map<std::pair<int, int>, Partial> memo_;
};

Presentation finish(int n, const Partial& partial) {
    Presentation p;
    p.n = n;
    p.generators = partial.generators;
    for (const auto& [g, h] : partial.relations) {
        auto i = p.index_of(g), j = p.index_of(h);
        if (!i || !j)
            throw std::logic_error("relation references a non-generator: " + to_string(i ? h : g));
        p.relations.emplace_back(std::min(*i, *j), std::max(*i, *j));
    }
    std::sort(p.relations.begin(), p.relations.end());
    return p;
}

void check_arities(const std::vector<int>& arities, int n) {
    if (n < 0) throw std::invalid_argument("strand count must be non-negative");
    for (int k : arities)
        if (k < 2) throw std::invalid_argument("a star needs at least two arms");
}

}  // namespace

Presentation assemble(const std::vector<int>& arities, int n) {
    check_arities(arities, n);
    if (arities.empty()) return Presentation{n, {}, {}};
    Assembler assembler(arities);
    return finish(n, assembler.suffix(1, n));
}

Presentation assemble(const StarDecomposition& d, int n) { return assemble(d.arities(), n); }

bool commutation_predicate(const Generator& g, const Generator& h, int n) {
    if (g.star == h.star) throw std::invalid_argument("same star");
    const Generator& near = g.star < h.star ? g : h;
    const Generator& far = g.star < h.star ? h : g;
    const int cap = capacity(near.edge, 2);
    return cap >= 1 && cap + far.edge.a[0] >= n;
}

Presentation assemble_closed_form(const std::vector<int>& arities, int n) {
    check_arities(arities, n);
    Presentation p{n, {}, {}};
    for (std::size_t i = 0; i < arities.size(); ++i)
        for (auto& e : basis(arities[i], n).edges) p.generators.push_back({static_cast<int>(i + 1), std::move(e)});
    std::sort(p.generators.begin(), p.generators.end());
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        for (std::size_t j = i + 1; j < p.generators.size(); ++j)
            if (p.generators[i].star != p.generators[j].star &&
                commutation_predicate(p.generators[i], p.generators[j], n))
                p.relations.emplace_back(i, j);
    return p;
}

StabilizationMap stabilize(const std::vector<int>& arities, int n) {
    if (n < 1) throw std::invalid_argument("stabilization needs n >= 1");
    StabilizationMap map{assemble(arities, n - 1), assemble(arities, n), {}, 0};
    for (const auto& g : map.source.generators) {
        auto image = map.target.index_of(push_left(g, 1));
        if (!image) throw std::logic_error("stabilization image missing: " + to_string(push_left(g, 1)));
        map.mapping.push_back(*image);
    }
    for (const auto& [i, j] : map.source.relations) {
        if (!map.target.commute(map.mapping[i], map.mapping[j]))
            throw std::logic_error("stabilization does not preserve the relation " + to_string(map.source.generators[i]) +
                                   " <-> " + to_string(map.source.generators[j]));
        ++map.mapped_relations;
    }
    std::vector<std::size_t> sorted = map.mapping;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::logic_error("stabilization is not injective");
    return map;
}

StabilizationMap stabilize(const StarDecomposition& d, int n) { return stabilize(d.arities(), n); }

ExportFormat parse_export_format(const std::string& name) {
    if (name == "json") return ExportFormat::json;
    if (name == "dot") return ExportFormat::dot;
    throw std::invalid_argument("unknown format '" + name + "'");
}

std::string export_presentation(const Presentation& p, ExportFormat format) {
    if (format == ExportFormat::json) {
        nlohmann::ordered_json doc;
        doc["n"] = p.n;
        doc["generators"] = nlohmann::ordered_json::array();
        for (const auto& g : p.generators) {
            nlohmann::ordered_json jg;
            jg["star"] = g.star;
            jg["a"] = g.edge.a;
            jg["p"] = g.edge.p;
            doc["generators"].push_back(std::move(jg));
        }
        doc["relations"] = nlohmann::ordered_json::array();
        for (const auto& [i, j] : p.relations) doc["relations"].push_back({i, j});
        return doc.dump(2) + "\n";
    }
    std::string out = "graph raag_n" + std::to_string(p.n) + " {\n";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        const auto& g = p.generators[i];
        out += "  g" + std::to_string(i) + " [label=\"S" + std::to_string(g.star) + " " + to_string(g.edge.a) +
               " p=" + std::to_string(g.edge.p) + "\"];\n";
    }
    for (const auto& [i, j] : p.relations) out += "  g" + std::to_string(i) + " -- g" + std::to_string(j) + ";\n";
    return out + "}\n";
}

}  // namespace raagtree
