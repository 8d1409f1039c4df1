#pragma once

// Graph-level views of a block decomposition: the dual block graph, the
// modified decomposition with thin T^2 x I blocks, transitional clusters,
// interior blocks, the Helly property for subtrees, and cap-count planning.

#include "vcs/error.hpp"
#include "vcs/integer.hpp"
#include "vcs/manifold_model.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace vcs {

struct BlockGraphEdge {
    std::string torus;
    std::string a;
    std::string b;
    bool is_loop() const { return a == b; }
};

struct BlockGraph {
    std::vector<std::string> vertices;
    std::vector<BlockGraphEdge> edges;

    std::set<std::string> neighbors(const std::string& v) const {
        std::set<std::string> out;
        for (const auto& e : edges) {
            if (e.a == v) out.insert(e.b);
            if (e.b == v) out.insert(e.a);
        }
        return out;
    }
};

inline BlockGraph jsj_graph(const ManifoldGraph& m) {
    BlockGraph g;
    for (const auto& [id, _] : m.blocks) g.vertices.push_back(id);
    for (const auto& t : m.jsj_tori) g.edges.push_back({t.id, t.end_a.block, t.end_b.block});
    return g;
}

namespace detail {

inline std::string fresh_name(const std::set<std::string>& taken, std::string base) {
    while (taken.contains(base)) base += "_";
    return base;
}

}  // namespace detail

/// Inserts a thin block at every JSJ torus with two hyperbolic sides and at
/// every manifold-boundary torus of a hyperbolic block. The thin block's
/// boundary 0 uses the hyperbolic side's basis (so its fiber is (0,1) there);
/// boundary 1 differs from boundary 0 by reversing the section.
inline ManifoldGraph modify_jsj(const ManifoldGraph& m) {
    ManifoldGraph out = m;
    out.jsj_tori.clear();
    out.boundary_tori.clear();

    std::set<std::string> names;
    for (const auto& [id, _] : m.blocks) names.insert(id);
    for (const auto& t : m.jsj_tori) names.insert(t.id);

    const GluingMatrix flip_section = GluingMatrix::from(-1, 0, 0, 1);
    auto hyperbolic = [&](const TorusEnd& e) { return is_hyperbolic(m.block(e.block)); };

    for (const auto& t : m.jsj_tori) {
        if (!(hyperbolic(t.end_a) && hyperbolic(t.end_b))) {
            out.jsj_tori.push_back(t);
            continue;
        }
        const std::string thin = detail::fresh_name(names, "thin_" + t.id);
        names.insert(thin);
        const std::string ta = detail::fresh_name(names, t.id + "_a");
        names.insert(ta);
        const std::string tb = detail::fresh_name(names, t.id + "_b");
        names.insert(tb);
        out.blocks.emplace(thin, SeifertBlockData::thin());
        out.jsj_tori.push_back({ta, t.end_a, TorusEnd{thin, 0}, GluingMatrix::identity()});
        out.jsj_tori.push_back({tb, TorusEnd{thin, 1}, t.end_b, t.glue * flip_section});
    }
    for (const auto& e : m.boundary_tori) {
        if (!hyperbolic(e)) {
            out.boundary_tori.push_back(e);
            continue;
        }
        const std::string suffix = e.block + "_" + std::to_string(e.boundary_index);
        const std::string thin = detail::fresh_name(names, "thin_" + suffix);
        names.insert(thin);
        const std::string tid = detail::fresh_name(names, "bd_" + suffix);
        names.insert(tid);
        out.blocks.emplace(thin, SeifertBlockData::thin());
        out.jsj_tori.push_back({tid, e, TorusEnd{thin, 0}, GluingMatrix::identity()});
        out.boundary_tori.push_back(TorusEnd{thin, 1});
    }
    return out;
}

inline bool is_modified(const ManifoldGraph& m) {
    for (const auto& t : m.jsj_tori)
        if (is_hyperbolic(m.block(t.end_a.block)) && is_hyperbolic(m.block(t.end_b.block))) return false;
    for (const auto& e : m.boundary_tori)
        if (is_hyperbolic(m.block(e.block))) return false;
    return true;
}

enum class ClusterKind { Hyperbolic, GraphManifold };

struct Cluster {
    ClusterKind kind;
    std::vector<std::string> blocks;  // sorted
    bool thin = false;
};

struct ClusterPartition {
    std::vector<Cluster> clusters;
    std::vector<std::string> transitional_tori;
    bool bipartite = true;

    std::size_t cluster_of(const std::string& block) const {
        for (std::size_t i = 0; i < clusters.size(); ++i)
            if (std::binary_search(clusters[i].blocks.begin(), clusters[i].blocks.end(), block)) return i;
        throw Error(ErrorCode::UnknownBlock, "block '" + block + "' is in no cluster");
    }
};

/// Transitional decomposition: cut along every torus with a hyperbolic side.
inline ClusterPartition clusters(const ManifoldGraph& m) {
    ClusterPartition out;
    std::map<std::string, std::string> parent;
    for (const auto& [id, _] : m.blocks) parent[id] = id;
    auto find = [&](std::string x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (const auto& t : m.jsj_tori) {
        const bool ha = is_hyperbolic(m.block(t.end_a.block));
        const bool hb = is_hyperbolic(m.block(t.end_b.block));
        if (ha && hb)
            throw Error(ErrorCode::NotModified,
                        "torus " + t.id + " has two hyperbolic sides; apply modify_jsj first");
        if (ha || hb) {
            out.transitional_tori.push_back(t.id);
        } else {
            parent[find(t.end_a.block)] = find(t.end_b.block);
        }
    }

    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& [id, _] : m.blocks) groups[find(id)].push_back(id);
    for (auto& [_, ids] : groups) {
        std::sort(ids.begin(), ids.end());
        Cluster c;
        c.kind = is_hyperbolic(m.block(ids.front())) ? ClusterKind::Hyperbolic : ClusterKind::GraphManifold;
        if (c.kind == ClusterKind::GraphManifold && ids.size() == 1) {
            const auto& s = std::get<SeifertBlockData>(m.block(ids.front()));
            c.thin = s.is_thin;
        }
        c.blocks = std::move(ids);
        out.clusters.push_back(std::move(c));
    }
    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const Cluster& x, const Cluster& y) { return x.blocks.front() < y.blocks.front(); });

    for (const auto& tid : out.transitional_tori) {
        const JsjTorus& t = *m.torus(tid);
        const auto ka = out.clusters[out.cluster_of(t.end_a.block)].kind;
        const auto kb = out.clusters[out.cluster_of(t.end_b.block)].kind;
        if (ka == kb) out.bipartite = false;
    }
    return out;
}

/// Seifert blocks with no manifold-boundary torus and no hyperbolic neighbor.
inline std::set<std::string> interior_blocks(const ManifoldGraph& m) {
    std::set<std::string> out;
    for (const auto& [id, data] : m.blocks) {
        if (!is_seifert(data)) continue;
        bool interior = true;
        for (const auto& e : m.boundary_tori)
            if (e.block == id) interior = false;
        for (const auto& t : m.jsj_tori) {
            if (t.end_a.block == id && is_hyperbolic(m.block(t.end_b.block))) interior = false;
            if (t.end_b.block == id && is_hyperbolic(m.block(t.end_a.block))) interior = false;
        }
        if (interior) out.insert(id);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Helly property for subtrees of a finite tree.

struct Tree {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

using Subtree = std::vector<std::size_t>;

struct HellyResult {
    std::optional<std::size_t> common_vertex;
    // set when some pair of subtrees is disjoint (indices into the input list)
    std::optional<std::pair<std::size_t, std::size_t>> disjoint_pair;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> tree_adjacency(const Tree& t) {
    std::vector<std::vector<std::size_t>> adj(t.vertex_count);
    for (auto [u, v] : t.edges) {
        if (u >= t.vertex_count || v >= t.vertex_count)
            throw Error(ErrorCode::NotATree, "edge endpoint out of range");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

}  // namespace detail

/// Finds a vertex common to all subtrees. The subtree whose top vertex (the
/// one closest to the root) is deepest has that top in every other subtree
/// whenever the family pairwise intersects.
inline HellyResult helly_intersection(const Tree& tree, const std::vector<Subtree>& subtrees) {
    const std::size_t n = tree.vertex_count;
    if (n == 0) throw Error(ErrorCode::NotATree, "empty graph");
    if (tree.edges.size() != n - 1)
        throw Error(ErrorCode::NotATree, std::to_string(tree.edges.size()) + " edges on " + std::to_string(n) +
                                             " vertices cannot form a tree");
    const auto adj = detail::tree_adjacency(tree);

    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> depth(n, unseen);
    std::queue<std::size_t> bfs;
    depth[0] = 0;
    bfs.push(0);
    while (!bfs.empty()) {
        const std::size_t u = bfs.front();
        bfs.pop();
        for (std::size_t v : adj[u])
            if (depth[v] == unseen) {
                depth[v] = depth[u] + 1;
                bfs.push(v);
            }
    }
    if (std::find(depth.begin(), depth.end(), unseen) != depth.end())
        throw Error(ErrorCode::NotATree, "graph is disconnected (so, with n-1 edges, has a cycle)");

    std::vector<std::vector<char>> member(subtrees.size(), std::vector<char>(n, 0));
    for (std::size_t s = 0; s < subtrees.size(); ++s) {
        if (subtrees[s].empty()) throw Error(ErrorCode::InvalidSubtree, "subtree " + std::to_string(s) + " is empty");
        for (std::size_t v : subtrees[s]) {
            if (v >= n) throw Error(ErrorCode::InvalidSubtree, "subtree vertex out of range");
            member[s][v] = 1;
        }
        // connectivity inside the subtree
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{subtrees[s].front()};
        seen[subtrees[s].front()] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            ++reached;
            for (std::size_t v : adj[u])
                if (member[s][v] && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        const auto size = static_cast<std::size_t>(std::count(member[s].begin(), member[s].end(), 1));
        if (reached != size)
            throw Error(ErrorCode::InvalidSubtree, "subtree " + std::to_string(s) + " is not connected");
    }

    if (subtrees.empty()) return HellyResult{0, std::nullopt};

    std::size_t candidate = 0;
    std::size_t best_depth = 0;
    bool first = true;
    for (const auto& s : subtrees) {
        const std::size_t top = *std::min_element(s.begin(), s.end(), [&](std::size_t a, std::size_t b) {
            return depth[a] != depth[b] ? depth[a] < depth[b] : a < b;
        });
        if (first || depth[top] > best_depth) {
            candidate = top;
            best_depth = depth[top];
            first = false;
        }
    }
    const bool everywhere =
        std::all_of(member.begin(), member.end(), [&](const auto& mask) { return mask[candidate] != 0; });
    if (everywhere) return HellyResult{candidate, std::nullopt};

    for (std::size_t i = 0; i < subtrees.size(); ++i)
        for (std::size_t j = i + 1; j < subtrees.size(); ++j) {
            bool meet = false;
            for (std::size_t v = 0; v < n && !meet; ++v) meet = member[i][v] && member[j][v];
            if (!meet) return HellyResult{std::nullopt, std::make_pair(i, j)};
        }
    throw Error(ErrorCode::NotATree, "pairwise-intersecting subtrees without a common vertex");
}

// ---------------------------------------------------------------------------
// Matching multiplicities of core surfaces and caps along a set of tori.

struct TorusCapCounts {
    std::string torus;
    Integer r;  // alpha-curves contributed by the core surface
    Integer s;  // beta-curves contributed by the core surface
    Integer a;  // alpha-curves per alpha-cap
    Integer b;  // beta-curves per beta-cap
};

struct TorusCapPlan {
    std::string torus;
    Integer alpha_caps;
    Integer beta_caps;
};

struct AssemblyPlan {
    Integer core_copies;  // lcm of the nonzero counts
    std::vector<TorusCapPlan> caps;
};

inline AssemblyPlan plan_surface_assembly(const std::vector<TorusCapCounts>& tori) {
    if (tori.empty()) throw Error(ErrorCode::EmptyInput, "no tori to plan for");
    Integer ell = 1;
    for (const auto& t : tori) {
        if (t.a < 1 || t.b < 1)
            throw Error(ErrorCode::InvalidArgument, "torus " + t.torus + ": cap curve counts must be positive");
        if (t.r < 0 || t.s < 0)
            throw Error(ErrorCode::InvalidArgument, "torus " + t.torus + ": core curve counts must be non-negative");
        for (const Integer* x : {&t.r, &t.s, &t.a, &t.b})
            if (*x != 0) ell = lcm(ell, *x);
    }
    AssemblyPlan plan{ell, {}};
    for (const auto& t : tori) plan.caps.push_back({t.torus, t.r * ell / t.a, t.s * ell / t.b});
    return plan;
}

}  // namespace vcs
