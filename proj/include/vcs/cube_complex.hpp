#pragma once

// Finite cube complexes given by corner maps, their hyperplanes, the link
// condition, and the specialness pathologies (one-sided, self-intersecting,
// directly self-osculating, inter-osculating hyperplanes).
//
// A d-cube is a list of 2^d vertex indices in binary-counter order: corner x
// has coordinate i equal to bit i of x. Identifications in a quotient are
// expressed by corner maps that repeat vertices; an edge is determined by its
// two (distinct) endpoints.

#include "vcs/error.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace vcs {

struct Cube {
    std::size_t dim = 0;
    std::vector<std::size_t> corners;

    std::size_t corner_count() const { return std::size_t{1} << dim; }
    friend auto operator<=>(const Cube&, const Cube&) = default;
};

namespace detail {

inline std::vector<std::size_t> cube_transform(const std::vector<std::size_t>& corners, std::size_t dim,
                                               const std::vector<std::size_t>& perm, std::size_t mask) {
    const std::size_t n = std::size_t{1} << dim;
    std::vector<std::size_t> out(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t y = 0;
        for (std::size_t i = 0; i < dim; ++i)
            if (((x >> i) & 1U) ^ ((mask >> i) & 1U)) y |= std::size_t{1} << perm[i];
        out[x] = corners[y];
    }
    return out;
}

/// Lexicographically least corner list over the symmetries of the cube.
inline std::vector<std::size_t> canonical_corners(const std::vector<std::size_t>& corners, std::size_t dim) {
    std::vector<std::size_t> sorted = corners;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
        // distinct corners: start at the least one, axes by increasing neighbour
        const auto base = static_cast<std::size_t>(std::min_element(corners.begin(), corners.end()) - corners.begin());
        std::vector<std::size_t> axes(dim);
        std::iota(axes.begin(), axes.end(), 0);
        std::sort(axes.begin(), axes.end(), [&](std::size_t i, std::size_t j) {
            return corners[base ^ (std::size_t{1} << i)] < corners[base ^ (std::size_t{1} << j)];
        });
        std::size_t mask = 0;
        for (std::size_t i = 0; i < dim; ++i) mask |= ((base >> axes[i]) & 1U) << i;
        return cube_transform(corners, dim, axes, mask);
    }
    std::vector<std::size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> best = corners;
    do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
            auto t = cube_transform(corners, dim, perm, mask);
            if (t < best) best = std::move(t);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::vector<Cube> faces_of(const Cube& c) {
    std::vector<Cube> out;
    const std::size_t d = c.dim;
    // each coordinate is free (2), fixed at 0 (0) or fixed at 1 (1)
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::size_t> free;
        std::size_t fixed = 0;
        std::size_t rest = code;
        for (std::size_t i = 0; i < d; ++i, rest /= 3) {
            const std::size_t digit = rest % 3;
            if (digit == 2) free.push_back(i);
            else if (digit == 1) fixed |= std::size_t{1} << i;
        }
        if (free.empty() || free.size() == d) continue;
        Cube f{free.size(), {}};
        for (std::size_t x = 0; x < f.corner_count(); ++x) {
            std::size_t y = fixed;
            for (std::size_t i = 0; i < free.size(); ++i)
                if ((x >> i) & 1U) y |= std::size_t{1} << free[i];
            f.corners.push_back(c.corners[y]);
        }
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace detail

/// Cube complex closed under taking faces. Cubes of dimension >= 1 are kept
/// in canonical form, sorted by (dimension, corners).
class CubeComplex {
public:
    CubeComplex() = default;

    /// `labels[i]` is the external id of vertex i.
    CubeComplex(std::vector<std::uint64_t> labels, const std::vector<Cube>& cubes) : labels_(std::move(labels)) {
        const std::size_t n = labels_.size();
        std::set<std::uint64_t> distinct(labels_.begin(), labels_.end());
        if (distinct.size() != n) throw Error(ErrorCode::InvalidComplex, "duplicate vertex id");
        std::set<Cube> all;
        std::vector<const Cube*> order;
        for (const auto& c : cubes) order.push_back(&c);
        std::stable_sort(order.begin(), order.end(), [](const Cube* a, const Cube* b) { return a->dim > b->dim; });
        for (const Cube* cp : order) {
            const Cube& c = *cp;
            if (c.dim == 0) throw Error(ErrorCode::InvalidComplex, "0-cubes are given as vertices");
            if (c.dim > 8) throw Error(ErrorCode::DimensionTooLarge, "cube dimension above 8");
            if (c.corners.size() != c.corner_count())
                throw Error(ErrorCode::InvalidComplex, "a " + std::to_string(c.dim) + "-cube needs " +
                                                           std::to_string(c.corner_count()) + " corners");
            for (std::size_t v : c.corners)
                if (v >= n) throw Error(ErrorCode::InvalidComplex, "corner refers to a missing vertex");
            for (std::size_t x = 0; x < c.corner_count(); ++x)
                for (std::size_t i = 0; i < c.dim; ++i)
                    if (c.corners[x] == c.corners[x ^ (std::size_t{1} << i)])
                        throw Error(ErrorCode::InvalidComplex, "cube has a degenerate edge at vertex " +
                                                                   std::to_string(labels_[c.corners[x]]));
            if (!all.insert(Cube{c.dim, detail::canonical_corners(c.corners, c.dim)}).second) continue;
            for (auto& f : detail::faces_of(c)) all.insert(Cube{f.dim, detail::canonical_corners(f.corners, f.dim)});
        }
        cubes_.assign(all.begin(), all.end());
        std::stable_sort(cubes_.begin(), cubes_.end(), [](const Cube& a, const Cube& b) { return a.dim < b.dim; });
        for (std::size_t i = 0; i < cubes_.size(); ++i) {
            if (cubes_[i].dim != 1) continue;
            const auto [a, b] = std::minmax(cubes_[i].corners[0], cubes_[i].corners[1]);
            edge_index_[{a, b}] = edges_.size();
            edges_.push_back({a, b});
        }
    }

    /// Vertices labelled 0..n-1.
    static CubeComplex with_count(std::size_t n, const std::vector<Cube>& cubes) {
        std::vector<std::uint64_t> labels(n);
        std::iota(labels.begin(), labels.end(), 0);
        return CubeComplex(std::move(labels), cubes);
    }

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::uint64_t>& labels() const { return labels_; }
    const std::vector<Cube>& cubes() const { return cubes_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    std::size_t edge_id(std::size_t u, std::size_t v) const {
        const auto it = edge_index_.find(std::minmax(u, v));
        if (it == edge_index_.end()) throw Error(ErrorCode::InvalidComplex, "no such edge");
        return it->second;
    }

    std::size_t count_of_dim(std::size_t d) const {
        if (d == 0) return vertex_count();
        return static_cast<std::size_t>(
            std::count_if(cubes_.begin(), cubes_.end(), [d](const Cube& c) { return c.dim == d; }));
    }

    std::size_t degree(std::size_t v) const {
        return static_cast<std::size_t>(std::count_if(
            edges_.begin(), edges_.end(), [v](const auto& e) { return e.first == v || e.second == v; }));
    }

    /// Cubes not a proper face of another cube (isolated vertices excluded).
    std::vector<Cube> maximal_cubes() const {
        std::set<Cube> faces;
        for (const auto& c : cubes_)
            for (auto& f : detail::faces_of(c)) faces.insert(Cube{f.dim, detail::canonical_corners(f.corners, f.dim)});
        std::vector<Cube> out;
        for (const auto& c : cubes_)
            if (!faces.contains(c)) out.push_back(c);
        return out;
    }

    std::size_t index_of_label(std::uint64_t label) const {
        const auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw Error(ErrorCode::InvalidComplex, "no vertex " + std::to_string(label));
        return static_cast<std::size_t>(it - labels_.begin());
    }

private:
    std::vector<std::uint64_t> labels_;
    std::vector<Cube> cubes_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index_;
};

inline std::size_t dimension(const CubeComplex& c) {
    std::size_t d = 0;
    for (const auto& cube : c.cubes()) d = std::max(d, cube.dim);
    return d;
}

// ---------------------------------------------------------------------------
// Hyperplanes as edge-parallelism classes.

namespace detail {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Directed edge u->v encoded as 2*edge + (u > v).
inline std::size_t directed(const CubeComplex& c, std::size_t u, std::size_t v) {
    return 2 * c.edge_id(u, v) + (u > v ? 1 : 0);
}

/// Parallelism on directed edges: in each cube, all edges along coordinate i
/// oriented from bit 0 to bit 1 are identified.
inline UnionFind directed_parallelism(const CubeComplex& c) {
    UnionFind uf(2 * c.edges().size());
    for (const auto& cube : c.cubes()) {
        if (cube.dim < 2) continue;
        for (std::size_t i = 0; i < cube.dim; ++i) {
            const std::size_t bit = std::size_t{1} << i;
            std::optional<std::size_t> first;
            for (std::size_t x = 0; x < cube.corner_count(); ++x) {
                if (x & bit) continue;
                const std::size_t fwd = directed(c, cube.corners[x], cube.corners[x | bit]);
                const std::size_t bwd = directed(c, cube.corners[x | bit], cube.corners[x]);
                if (!first) {
                    first = fwd;
                    continue;
                }
                uf.unite(*first, fwd);
                uf.unite(*first ^ 1U, bwd);
            }
        }
    }
    return uf;
}

}  // namespace detail

struct Hyperplane {
    std::size_t id = 0;
    std::vector<std::size_t> edges;                                // dual edges (edge ids), ascending
    std::vector<std::pair<std::size_t, std::size_t>> midcubes;     // (cube index, coordinate)
    bool two_sided = true;
};

struct HyperplaneStructure {
    std::vector<Hyperplane> hyperplanes;
    std::vector<std::size_t> of_edge;  // edge id -> hyperplane id
};

inline HyperplaneStructure hyperplane_structure(const CubeComplex& c) {
    auto dir = detail::directed_parallelism(c);
    const std::size_t m = c.edges().size();
    detail::UnionFind undirected(m);
    for (std::size_t e = 0; e < m; ++e) {
        undirected.unite(e, dir.find(2 * e) / 2);
        undirected.unite(e, dir.find(2 * e + 1) / 2);
    }

    HyperplaneStructure hs;
    hs.of_edge.assign(m, 0);
    std::map<std::size_t, std::size_t> root_to_id;
    for (std::size_t e = 0; e < m; ++e) {
        const std::size_t r = undirected.find(e);
        auto [it, fresh] = root_to_id.emplace(r, hs.hyperplanes.size());
        if (fresh) hs.hyperplanes.push_back(Hyperplane{it->second, {}, {}, true});
        hs.of_edge[e] = it->second;
        hs.hyperplanes[it->second].edges.push_back(e);
        if (dir.find(2 * e) == dir.find(2 * e + 1)) hs.hyperplanes[it->second].two_sided = false;
    }
    const auto& cubes = c.cubes();
    for (std::size_t k = 0; k < cubes.size(); ++k)
        for (std::size_t i = 0; i < cubes[k].dim; ++i) {
            const std::size_t e = c.edge_id(cubes[k].corners[0], cubes[k].corners[std::size_t{1} << i]);
            hs.hyperplanes[hs.of_edge[e]].midcubes.emplace_back(k, i);
        }
    return hs;
}

inline std::vector<Hyperplane> hyperplanes(const CubeComplex& c) { return hyperplane_structure(c).hyperplanes; }

// ---------------------------------------------------------------------------
// Gromov link condition.

enum class LinkIssueKind { NonSimplicial, NonFlag };

struct LinkIssue {
    std::size_t vertex;
    LinkIssueKind kind;
    std::vector<std::size_t> link_vertices;  // edge ids around the vertex
};

struct NpcReport {
    std::vector<LinkIssue> issues;
    bool npc() const { return issues.empty(); }
};

inline NpcReport check_npc(const CubeComplex& c) {
    const std::size_t dim = dimension(c);
    if (dim > 4) throw Error(ErrorCode::DimensionTooLarge, "link check supports dimension <= 4, got " + std::to_string(dim));
    NpcReport rep;
    const std::size_t n = c.vertex_count();
    for (std::size_t v = 0; v < n; ++v) {
        std::map<std::vector<std::size_t>, int> simplices;
        bool degenerate = false;
        for (const auto& cube : c.cubes()) {
            if (cube.dim < 2) continue;
            for (std::size_t x = 0; x < cube.corner_count(); ++x) {
                if (cube.corners[x] != v) continue;
                std::vector<std::size_t> s;
                for (std::size_t i = 0; i < cube.dim; ++i)
                    s.push_back(c.edge_id(v, cube.corners[x ^ (std::size_t{1} << i)]));
                std::sort(s.begin(), s.end());
                if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
                    rep.issues.push_back({v, LinkIssueKind::NonSimplicial, s});
                    degenerate = true;
                    continue;
                }
                if (++simplices[s] == 2) {
                    rep.issues.push_back({v, LinkIssueKind::NonSimplicial, s});
                    degenerate = true;
                }
            }
        }
        if (degenerate) continue;

        std::vector<std::size_t> around;
        for (std::size_t e = 0; e < c.edges().size(); ++e)
            if (c.edges()[e].first == v || c.edges()[e].second == v) around.push_back(e);
        std::set<std::pair<std::size_t, std::size_t>> link_edges;
        for (const auto& [s, _] : simplices)
            if (s.size() == 2) link_edges.insert({s[0], s[1]});
        auto adjacent = [&](std::size_t a, std::size_t b) { return link_edges.contains(std::minmax(a, b)); };

        // grow cliques in ascending order; every clique of size >= 3 must be a simplex
        std::optional<std::vector<std::size_t>> missing;
        std::vector<std::size_t> clique;
        auto grow = [&](auto&& self, std::size_t from) -> void {
            if (missing) return;
            if (clique.size() >= 3 && !simplices.contains(clique)) {
                missing = clique;
                return;
            }
            if (clique.size() == dim + 2) return;
            for (std::size_t i = from; i < around.size() && !missing; ++i) {
                const std::size_t e = around[i];
                if (!std::all_of(clique.begin(), clique.end(), [&](std::size_t f) { return adjacent(e, f); }))
                    continue;
                clique.push_back(e);
                self(self, i + 1);
                clique.pop_back();
            }
        };
        grow(grow, 0);
        if (missing) rep.issues.push_back({v, LinkIssueKind::NonFlag, *missing});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Specialness.

struct HyperplanePathology {
    std::size_t hyperplane = 0;
    bool one_sided = false;
    bool self_intersecting = false;
    bool self_osculating = false;           // direct
    bool indirect_self_osculating = false;  // informational only

    bool any() const { return one_sided || self_intersecting || self_osculating; }
};

struct PathologyReport {
    std::vector<HyperplanePathology> per_hyperplane;
    std::vector<std::pair<std::size_t, std::size_t>> inter_osculating;  // hyperplane id pairs, a < b
    bool special = true;

    bool any_one_sided() const {
        return std::any_of(per_hyperplane.begin(), per_hyperplane.end(), [](const auto& h) { return h.one_sided; });
    }
    bool any_self_intersecting() const {
        return std::any_of(per_hyperplane.begin(), per_hyperplane.end(),
                           [](const auto& h) { return h.self_intersecting; });
    }
    bool any_self_osculating() const {
        return std::any_of(per_hyperplane.begin(), per_hyperplane.end(),
                           [](const auto& h) { return h.self_osculating; });
    }
    bool any_inter_osculating() const { return !inter_osculating.empty(); }
};

inline PathologyReport specialness_report(const CubeComplex& c) {
    auto dir = detail::directed_parallelism(c);
    const HyperplaneStructure hs = hyperplane_structure(c);
    PathologyReport rep;
    for (const auto& h : hs.hyperplanes) rep.per_hyperplane.push_back({h.id, !h.two_sided, false, false, false});

    // corners of squares: (vertex, edge, edge) pairs that span a square there
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> spanned;
    std::set<std::pair<std::size_t, std::size_t>> crossing;
    for (const auto& cube : c.cubes()) {
        if (cube.dim != 2) continue;
        const std::size_t h0 = hs.of_edge[c.edge_id(cube.corners[0], cube.corners[1])];
        const std::size_t h1 = hs.of_edge[c.edge_id(cube.corners[0], cube.corners[2])];
        if (h0 == h1) rep.per_hyperplane[h0].self_intersecting = true;
        else crossing.insert(std::minmax(h0, h1));
        for (std::size_t x = 0; x < 4; ++x) {
            const std::size_t v = cube.corners[x];
            const std::size_t e1 = c.edge_id(v, cube.corners[x ^ 1U]);
            const std::size_t e2 = c.edge_id(v, cube.corners[x ^ 2U]);
            spanned.insert({v, std::min(e1, e2), std::max(e1, e2)});
        }
    }

    std::set<std::pair<std::size_t, std::size_t>> osculating;
    const auto& edges = c.edges();
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        std::vector<std::size_t> around;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].first == v || edges[e].second == v) around.push_back(e);
        for (std::size_t i = 0; i < around.size(); ++i)
            for (std::size_t j = i + 1; j < around.size(); ++j) {
                const std::size_t e1 = around[i], e2 = around[j];
                if (spanned.contains({v, std::min(e1, e2), std::max(e1, e2)})) continue;
                const std::size_t h1 = hs.of_edge[e1], h2 = hs.of_edge[e2];
                if (h1 != h2) {
                    osculating.insert(std::minmax(h1, h2));
                    continue;
                }
                const auto other = [&](std::size_t e) { return edges[e].first == v ? edges[e].second : edges[e].first; };
                const bool same_way = dir.find(detail::directed(c, v, other(e1))) ==
                                      dir.find(detail::directed(c, v, other(e2)));
                if (same_way || !hs.hyperplanes[h1].two_sided) rep.per_hyperplane[h1].self_osculating = true;
                else rep.per_hyperplane[h1].indirect_self_osculating = true;
            }
    }
    for (const auto& p : crossing)
        if (osculating.contains(p)) rep.inter_osculating.push_back(p);

    rep.special = rep.inter_osculating.empty() &&
                  std::none_of(rep.per_hyperplane.begin(), rep.per_hyperplane.end(), [](const auto& h) { return h.any(); });
    return rep;
}

// ---------------------------------------------------------------------------
// Text format: `vertex <id>` and `cube <dim> <corner ids...>` lines.

inline CubeComplex parse_cube_complex(std::string_view text) {
    std::vector<std::uint64_t> labels;
    std::map<std::uint64_t, std::size_t> index;
    std::vector<Cube> cubes;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto number = [&](const std::string& tok) -> std::uint64_t {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
            tok.size() > 18)
            throw Error(ErrorCode::NotInteger, "expected a non-negative integer, got '" + tok + "'", line_no);
        return std::stoull(tok);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks[0] == "vertex") {
            if (toks.size() != 2) throw Error(ErrorCode::Syntax, "vertex takes one id", line_no);
            const auto id = number(toks[1]);
            if (!index.emplace(id, labels.size()).second)
                throw Error(ErrorCode::InvalidComplex, "vertex " + toks[1] + " declared twice", line_no);
            labels.push_back(id);
        } else if (toks[0] == "cube") {
            if (toks.size() < 2) throw Error(ErrorCode::MissingField, "cube needs a dimension", line_no);
            const auto d = number(toks[1]);
            if (d < 1 || d > 8) throw Error(ErrorCode::InvalidComplex, "cube dimension must be 1..8", line_no);
            Cube c{static_cast<std::size_t>(d), {}};
            if (toks.size() != 2 + c.corner_count())
                throw Error(ErrorCode::MissingField, "a " + toks[1] + "-cube needs " + std::to_string(c.corner_count()) +
                                                         " corners", line_no);
            for (std::size_t i = 2; i < toks.size(); ++i) {
                const auto it = index.find(number(toks[i]));
                if (it == index.end()) throw Error(ErrorCode::InvalidComplex, "undeclared vertex " + toks[i], line_no);
                c.corners.push_back(it->second);
            }
            cubes.push_back(std::move(c));
        } else {
            throw Error(ErrorCode::Syntax, "unknown record '" + toks[0] + "'", line_no);
        }
    }
    try {
        return CubeComplex(std::move(labels), cubes);
    } catch (const Error& e) {
        throw Error(e.code(), e.what(), 0);
    }
}

/// Vertices by ascending id, then maximal cubes by (dimension, corner ids).
inline std::string serialize_cube_complex(const CubeComplex& c) {
    std::ostringstream os;
    std::vector<std::uint64_t> ids = c.labels();
    std::sort(ids.begin(), ids.end());
    for (auto id : ids) os << "vertex " << id << "\n";
    std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> lines;
    for (const auto& cube : c.maximal_cubes()) {
        std::vector<std::uint64_t> corners;
        for (std::size_t v : cube.corners) corners.push_back(c.labels()[v]);
        lines.emplace_back(cube.dim, std::move(corners));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [d, corners] : lines) {
        os << "cube " << d;
        for (auto id : corners) os << " " << id;
        os << "\n";
    }
    return os.str();
}

}  // namespace vcs
