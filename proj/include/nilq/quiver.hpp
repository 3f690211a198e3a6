#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilq {

using DimVector = std::vector<std::int64_t>;

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

/// Finite quiver: named vertices and named arrows, loops and multiple
/// arrows allowed. Vertex and arrow order is the input order; every basis
/// and report downstream inherits it.
class Quiver {
public:
    Quiver() = default;

    Quiver(std::vector<std::string> vertices,
           const std::vector<std::tuple<std::string, std::string, std::string>>& arrows)
        : vertices_(std::move(vertices)) {
        std::set<std::string> seen(vertices_.begin(), vertices_.end());
        if (seen.size() != vertices_.size())
            throw std::invalid_argument("duplicate vertex name");
        std::set<std::string> arrow_names;
        for (const auto& [name, from, to] : arrows) {
            if (!arrow_names.insert(name).second)
                throw std::invalid_argument("duplicate arrow name: " + name);
            arrows_.push_back({name, require_vertex(from), require_vertex(to)});
        }
    }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::string& vertex_name(int v) const { return vertices_.at(v); }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::optional<int> vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    std::optional<int> arrow_index(const std::string& name) const {
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].name == name) return static_cast<int>(i);
        return std::nullopt;
    }

    std::vector<int> arrows_from(int v) const {
        std::vector<int> out;
        for (std::size_t a = 0; a < arrows_.size(); ++a)
            if (arrows_[a].src == v) out.push_back(static_cast<int>(a));
        return out;
    }

    std::vector<int> arrows_into(int v) const {
        std::vector<int> out;
        for (std::size_t a = 0; a < arrows_.size(); ++a)
            if (arrows_[a].tgt == v) out.push_back(static_cast<int>(a));
        return out;
    }

private:
    int require_vertex(const std::string& name) const {
        auto idx = vertex_index(name);
        if (!idx) throw std::invalid_argument("arrow endpoint is not a vertex: " + name);
        return *idx;
    }

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// Weakly increasing sequence of dimension vectors dd = (d^(1), ..., d^(s)).
/// Also serves, flattened layer by layer, as a dimension vector for N_s(Q).
struct DimFiltration {
    std::vector<DimVector> layers;

    int s() const { return static_cast<int>(layers.size()); }
    const DimVector& top() const { return layers.back(); }

    /// d^(t) with the paper's convention d^(0) = 0.
    std::int64_t at(int vertex, int t) const {
        if (t <= 0) return 0;
        return layers.at(t - 1).at(vertex);
    }

    bool is_monotone() const {
        for (std::size_t t = 1; t < layers.size(); ++t)
            for (std::size_t i = 0; i < layers[t].size(); ++i)
                if (layers[t - 1][i] > layers[t][i]) return false;
        return true;
    }

    bool operator==(const DimFiltration& o) const { return layers == o.layers; }

    bool pointwise_leq(const DimFiltration& o) const {
        if (layers.size() != o.layers.size()) return false;
        for (std::size_t t = 0; t < layers.size(); ++t)
            for (std::size_t i = 0; i < layers[t].size(); ++i)
                if (layers[t][i] > o.layers[t][i]) return false;
        return true;
    }
};

/// A path, stored in application order: arrows[0] is traversed first.
struct Path {
    int start = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    int end(const Quiver& q) const {
        return arrows.empty() ? start : q.arrow(arrows.back()).tgt;
    }
};

/// All paths of length 0..max_len, trivial paths first, then by length and
/// extension order. Deterministic.
inline std::vector<Path> paths_up_to_length(const Quiver& q, int max_len) {
    if (max_len < 0) throw std::invalid_argument("paths_up_to_length: negative length");
    std::vector<Path> all;
    std::vector<Path> frontier;
    for (int v = 0; v < static_cast<int>(q.vertex_count()); ++v) frontier.push_back({v, {}});
    all = frontier;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Path> next;
        for (const Path& p : frontier) {
            const int at = p.end(q);
            for (int a = 0; a < static_cast<int>(q.arrow_count()); ++a) {
                if (q.arrow(a).src != at) continue;
                Path ext = p;
                ext.arrows.push_back(a);
                next.push_back(std::move(ext));
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return all;
}

/// The staircase quiver Q^(s): vertices i_t, vertical arrows b(i_t) raising
/// the layer, and one diagonal copy a_t: i_t -> j_{t-1} of every arrow of Q
/// for t = 2..s. Vertices are ordered layer by layer so that a flattened
/// DimFiltration lines up with the vertex order.
struct StaircaseQuiver {
    Quiver quiver;
    Quiver base;
    int s = 1;

    enum class ArrowKind { Vertical, Diagonal };
    struct ArrowInfo {
        ArrowKind kind;
        int base_index;  // base vertex (vertical) or base arrow (diagonal)
        int layer;       // t of b(i_t), or t of a_t
    };
    std::vector<ArrowInfo> arrow_info;

    int vertex_at(int base_vertex, int layer) const {
        return (layer - 1) * static_cast<int>(base.vertex_count()) + base_vertex;
    }
    std::pair<int, int> base_of(int vertex) const {
        const int n = static_cast<int>(base.vertex_count());
        return {vertex % n, vertex / n + 1};
    }
    int layer_of(int vertex) const { return base_of(vertex).second; }

    int vertical_arrow(int base_vertex, int t) const {  // b(i_t), 1 <= t <= s-1
        return (t - 1) * static_cast<int>(base.vertex_count()) + base_vertex;
    }
    int diagonal_arrow(int base_arrow, int t) const {  // a_t, 2 <= t <= s
        return static_cast<int>(base.vertex_count()) * (s - 1) +
               (t - 2) * static_cast<int>(base.arrow_count()) + base_arrow;
    }

    /// Flatten a filtration into a dimension vector on the staircase.
    DimVector flatten(const DimFiltration& dd) const {
        DimVector out;
        for (const auto& layer : dd.layers) out.insert(out.end(), layer.begin(), layer.end());
        return out;
    }

    DimFiltration unflatten(const DimVector& dims) const {
        const std::size_t n = base.vertex_count();
        DimFiltration dd;
        for (int t = 0; t < s; ++t)
            dd.layers.emplace_back(dims.begin() + t * n, dims.begin() + (t + 1) * n);
        return dd;
    }
};

inline StaircaseQuiver staircase(const Quiver& q, int s) {
    if (s < 1) throw std::invalid_argument("staircase: s must be >= 1");
    std::vector<std::string> vertices;
    for (int t = 1; t <= s; ++t)
        for (const auto& v : q.vertices()) vertices.push_back(v + "_" + std::to_string(t));
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    StaircaseQuiver sq;
    for (int t = 1; t <= s - 1; ++t)
        for (int i = 0; i < static_cast<int>(q.vertex_count()); ++i) {
            const std::string vt = q.vertex_name(i) + "_" + std::to_string(t);
            const std::string vt1 = q.vertex_name(i) + "_" + std::to_string(t + 1);
            arrows.emplace_back("b(" + vt + ")", vt, vt1);
            sq.arrow_info.push_back({StaircaseQuiver::ArrowKind::Vertical, i, t});
        }
    for (int t = 2; t <= s; ++t)
        for (int a = 0; a < static_cast<int>(q.arrow_count()); ++a) {
            const Arrow& ar = q.arrow(a);
            arrows.emplace_back(ar.name + "_" + std::to_string(t),
                                q.vertex_name(ar.src) + "_" + std::to_string(t),
                                q.vertex_name(ar.tgt) + "_" + std::to_string(t - 1));
            sq.arrow_info.push_back({StaircaseQuiver::ArrowKind::Diagonal, a, t});
        }
    sq.quiver = Quiver(std::move(vertices), arrows);
    sq.base = q;
    sq.s = s;
    return sq;
}

/// Separation quiver: vertices Q_0 together with a starred copy, one arrow
/// i -> j* per arrow i -> j. No paths of length two exist in it.
inline Quiver separation_quiver(const Quiver& q) {
    std::vector<std::string> vertices = q.vertices();
    for (const auto& v : q.vertices()) vertices.push_back(v + "*");
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (const Arrow& a : q.arrows())
        arrows.emplace_back(a.name + "'", q.vertex_name(a.src), q.vertex_name(a.tgt) + "*");
    return Quiver(std::move(vertices), arrows);
}

struct DynkinType {
    char family = 'A';  // 'A', 'D' or 'E'
    int n = 1;

    std::string str() const { return std::string(1, family) + std::to_string(n); }
    bool operator==(const DynkinType& o) const { return family == o.family && n == o.n; }
};

namespace detail {

/// Classify one connected component (vertex list) of the underlying graph.
inline std::optional<DynkinType> classify_component(const Quiver& q,
                                                    const std::vector<int>& comp) {
    std::map<int, int> degree;
    for (int v : comp) degree[v] = 0;
    std::size_t edges = 0;
    for (const Arrow& a : q.arrows()) {
        if (!degree.count(a.src) && !degree.count(a.tgt)) continue;
        if (a.src == a.tgt) return std::nullopt;  // loop
        ++edges;
        ++degree[a.src];
        ++degree[a.tgt];
    }
    const std::size_t n = comp.size();
    if (edges != n - 1) return std::nullopt;  // not a tree (covers multi-edges and cycles)
    std::vector<int> branch_nodes;
    for (auto& [v, d] : degree) {
        if (d > 3) return std::nullopt;
        if (d == 3) branch_nodes.push_back(v);
    }
    if (branch_nodes.size() > 1) return std::nullopt;
    if (branch_nodes.empty()) return DynkinType{'A', static_cast<int>(n)};
    // one degree-3 node: measure the three leg lengths
    const int center = branch_nodes.front();
    std::vector<int> legs;
    for (const Arrow& a : q.arrows()) {
        int next = -1;
        if (a.src == center && degree.count(a.tgt)) next = a.tgt;
        if (a.tgt == center && degree.count(a.src)) next = a.src;
        if (next < 0) continue;
        int len = 1, prev = center, at = next;
        while (true) {
            int follow = -1;
            for (const Arrow& b : q.arrows()) {
                if (&b == &a && len == 1) continue;
                int other = -1;
                if (b.src == at && b.tgt != prev)
                    other = b.tgt;
                else if (b.tgt == at && b.src != prev)
                    other = b.src;
                if (other >= 0 && degree.count(other)) {
                    follow = other;
                    break;
                }
            }
            if (follow < 0) break;
            prev = at;
            at = follow;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs.size() != 3) return std::nullopt;
    if (legs[0] == 1 && legs[1] == 1) return DynkinType{'D', static_cast<int>(n)};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
        return DynkinType{'E', static_cast<int>(n)};
    return std::nullopt;
}

inline std::vector<std::vector<int>> underlying_components(const Quiver& q) {
    const int n = static_cast<int>(q.vertex_count());
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack{start};
        comp[start] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Arrow& a : q.arrows()) {
                int other = -1;
                if (a.src == v) other = a.tgt;
                if (a.tgt == v) other = a.src;
                if (other >= 0 && comp[other] < 0) {
                    comp[other] = count;
                    stack.push_back(other);
                }
            }
        }
        ++count;
    }
    std::vector<std::vector<int>> out(count);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

}  // namespace detail

/// ADE classification of every underlying connected component, or nullopt
/// if any component fails (loops and multiple edges disqualify at once).
inline std::optional<std::vector<DynkinType>> is_dynkin(const Quiver& q) {
    std::vector<DynkinType> types;
    for (const auto& comp : detail::underlying_components(q)) {
        auto t = detail::classify_component(q, comp);
        if (!t) return std::nullopt;
        types.push_back(*t);
    }
    return types;
}

/// True iff every vertex has in-degree and out-degree exactly one; each
/// underlying component is then a single oriented cycle.
inline bool is_union_of_oriented_cycles(const Quiver& q) {
    std::vector<int> indeg(q.vertex_count(), 0), outdeg(q.vertex_count(), 0);
    for (const Arrow& a : q.arrows()) {
        ++outdeg[a.src];
        ++indeg[a.tgt];
    }
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        if (indeg[v] != 1 || outdeg[v] != 1) return false;
    return true;
}

/// dim rep_dd = sum over arrows (i->j) and layers t of
/// d_j^(t-1) (d_i^(t) - d_i^(t-1)).
inline std::int64_t dim_repdd(const Quiver& q, const DimFiltration& dd) {
    std::int64_t total = 0;
    for (const Arrow& a : q.arrows())
        for (int t = 1; t <= dd.s(); ++t)
            total += dd.at(a.tgt, t - 1) * (dd.at(a.src, t) - dd.at(a.src, t - 1));
    return total;
}

/// dim RF(dd) = dim rep_dd + dim GL_d/P.
inline std::int64_t dim_rf(const Quiver& q, const DimFiltration& dd) {
    std::int64_t flag = 0;
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        for (int r = 2; r <= dd.s(); ++r)
            for (int t = 1; t < r; ++t)
                flag += (dd.at(static_cast<int>(i), r) - dd.at(static_cast<int>(i), r - 1)) *
                        (dd.at(static_cast<int>(i), t) - dd.at(static_cast<int>(i), t - 1));
    return dim_repdd(q, dd) + flag;
}

/// <dd, dd>^(1) = d.d - dim RF.
inline std::int64_t euler_form_one(const Quiver& q, const DimFiltration& dd) {
    std::int64_t dot = 0;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        const std::int64_t d = dd.at(static_cast<int>(i), dd.s());
        dot += d * d;
    }
    return dot - dim_rf(q, dd);
}

}  // namespace nilq
