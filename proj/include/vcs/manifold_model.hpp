#pragma once

// Block decompositions of compact 3-manifolds: slopes on boundary tori,
// torus gluings, Seifert and hyperbolic block data, and structural checks.
//
// Coordinates. Every boundary torus of a Seifert block carries the ordered
// basis (section curve d_k, regular fiber h); a hyperbolic block declares an
// arbitrary basis per boundary torus. A JSJ torus joining ends A and B has a
// gluing matrix that maps A-coordinates to B-coordinates (column vectors).

#include "vcs/error.hpp"
#include "vcs/integer.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace vcs {

/// Primitive integer pair up to sign, normalized so that p > 0, or p = 0 and q = 1.
struct Slope {
    Integer p;
    Integer q;

    friend bool operator==(const Slope&, const Slope&) = default;
    friend bool operator<(const Slope& x, const Slope& y) {
        return x.p != y.p ? x.p < y.p : x.q < y.q;
    }
};

inline std::string to_string(const Slope& s) { return "(" + s.p.str() + "," + s.q.str() + ")"; }

inline Slope slope_normalize(const Integer& p, const Integer& q) {
    if (p == 0 && q == 0) throw Error(ErrorCode::ZeroVector, "slope (0,0) is not a curve class");
    const Integer g = gcd(p, q);
    Integer np = p / g;
    Integer nq = q / g;
    if (np < 0 || (np == 0 && nq < 0)) {
        np = -np;
        nq = -nq;
    }
    return Slope{std::move(np), std::move(nq)};
}

/// 2x2 integer matrix [[m00, m01], [m10, m11]] acting on column vectors.
struct GluingMatrix {
    std::array<Integer, 4> entries{1, 0, 0, 1};

    static GluingMatrix identity() { return {}; }
    static GluingMatrix from(Integer m00, Integer m01, Integer m10, Integer m11) {
        return GluingMatrix{{std::move(m00), std::move(m01), std::move(m10), std::move(m11)}};
    }

    const Integer& operator()(std::size_t r, std::size_t c) const { return entries[2 * r + c]; }

    Integer determinant() const { return entries[0] * entries[3] - entries[1] * entries[2]; }
    bool is_unimodular() const {
        const Integer d = determinant();
        return d == 1 || d == -1;
    }

    std::pair<Integer, Integer> apply(const Integer& x, const Integer& y) const {
        return {entries[0] * x + entries[1] * y, entries[2] * x + entries[3] * y};
    }

    GluingMatrix operator*(const GluingMatrix& o) const {
        const auto& a = entries;
        const auto& b = o.entries;
        return from(a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                    a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]);
    }

    // Requires a unimodular matrix.
    GluingMatrix inverse() const {
        if (!is_unimodular())
            throw Error(ErrorCode::Determinant, "gluing matrix is not invertible over the integers");
        const Integer d = determinant();
        return from(entries[3] * d, -entries[1] * d, -entries[2] * d, entries[0] * d);
    }

    friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;
};

inline Slope transport_slope(const Slope& s, const GluingMatrix& g) {
    auto [x, y] = g.apply(s.p, s.q);
    return slope_normalize(x, y);
}

struct ExceptionalFiber {
    Integer a;
    Integer b;
    friend bool operator==(const ExceptionalFiber&, const ExceptionalFiber&) = default;
};

struct SeifertBlockData {
    std::size_t genus = 0;
    std::size_t num_boundary = 0;
    std::vector<ExceptionalFiber> exceptional;
    Integer section_obstruction = 0;
    bool is_thin = false;

    static SeifertBlockData thin() { return SeifertBlockData{0, 2, {}, 0, true}; }

    friend bool operator==(const SeifertBlockData&, const SeifertBlockData&) = default;
};

struct HyperbolicBlockData {
    std::size_t num_boundary = 0;
    // boundary index -> (C, D) frame curves in that torus's declared basis
    std::map<std::size_t, std::pair<Slope, Slope>> framing;

    friend bool operator==(const HyperbolicBlockData&, const HyperbolicBlockData&) = default;
};

using BlockData = std::variant<SeifertBlockData, HyperbolicBlockData>;

inline std::size_t boundary_count(const BlockData& b) {
    return std::visit([](const auto& x) { return x.num_boundary; }, b);
}

inline bool is_seifert(const BlockData& b) { return std::holds_alternative<SeifertBlockData>(b); }
inline bool is_hyperbolic(const BlockData& b) { return std::holds_alternative<HyperbolicBlockData>(b); }

struct TorusEnd {
    std::string block;
    std::size_t boundary_index = 0;

    friend auto operator<=>(const TorusEnd&, const TorusEnd&) = default;
};

inline std::string to_string(const TorusEnd& e) {
    return e.block + "." + std::to_string(e.boundary_index);
}

struct JsjTorus {
    std::string id;
    TorusEnd end_a;
    TorusEnd end_b;
    GluingMatrix glue;  // end_a coordinates -> end_b coordinates

    friend bool operator==(const JsjTorus&, const JsjTorus&) = default;
};

enum class Geometry { H3, E3, H2xR, S2xR, S3, Sol, Nil, SL2R, SFSWithBoundary };

inline constexpr std::array<Geometry, 9> all_geometries{
    Geometry::H3,  Geometry::E3,  Geometry::H2xR, Geometry::S2xR,          Geometry::S3,
    Geometry::Sol, Geometry::Nil, Geometry::SL2R, Geometry::SFSWithBoundary};

constexpr std::string_view geometry_name(Geometry g) {
    switch (g) {
    case Geometry::H3: return "H3";
    case Geometry::E3: return "E3";
    case Geometry::H2xR: return "H2xR";
    case Geometry::S2xR: return "S2xR";
    case Geometry::S3: return "S3";
    case Geometry::Sol: return "Sol";
    case Geometry::Nil: return "Nil";
    case Geometry::SL2R: return "SL2R";
    case Geometry::SFSWithBoundary: return "SFS-with-boundary";
    }
    return "?";
}

inline std::optional<Geometry> parse_geometry(std::string_view s) {
    for (Geometry g : all_geometries)
        if (geometry_name(g) == s) return g;
    return std::nullopt;
}

struct ManifoldGraph {
    std::map<std::string, BlockData> blocks;
    std::vector<JsjTorus> jsj_tori;
    std::vector<TorusEnd> boundary_tori;
    std::optional<Geometry> geometry_label;

    const BlockData& block(const std::string& id) const {
        auto it = blocks.find(id);
        if (it == blocks.end()) throw Error(ErrorCode::UnknownBlock, "no block named '" + id + "'");
        return it->second;
    }

    const SeifertBlockData& seifert(const std::string& id) const {
        const auto* s = std::get_if<SeifertBlockData>(&block(id));
        if (!s) throw Error(ErrorCode::NotSeifert, "block '" + id + "' is not Seifert fibered");
        return *s;
    }

    const JsjTorus* torus(const std::string& id) const {
        for (const auto& t : jsj_tori)
            if (t.id == id) return &t;
        return nullptr;
    }

    bool is_boundary_end(const TorusEnd& e) const {
        return std::find(boundary_tori.begin(), boundary_tori.end(), e) != boundary_tori.end();
    }

    friend bool operator==(const ManifoldGraph&, const ManifoldGraph&) = default;
};

/// The block-side view of one JSJ torus end: which torus, which end of it is
/// local, and the matrix taking the far side's coordinates to local ones.
struct EndView {
    const JsjTorus* torus = nullptr;
    TorusEnd local;
    TorusEnd far;
    GluingMatrix far_to_local;
};

/// JSJ ends of `block_id`, ordered by local boundary index.
inline std::vector<EndView> jsj_ends_of(const ManifoldGraph& m, const std::string& block_id) {
    std::vector<EndView> out;
    for (const auto& t : m.jsj_tori) {
        if (t.end_a.block == block_id) out.push_back({&t, t.end_a, t.end_b, t.glue.inverse()});
        if (t.end_b.block == block_id) out.push_back({&t, t.end_b, t.end_a, t.glue});
    }
    std::sort(out.begin(), out.end(), [](const EndView& x, const EndView& y) {
        return x.local.boundary_index < y.local.boundary_index;
    });
    return out;
}

inline Slope fiber_slope(const SeifertBlockData& b, std::size_t boundary_index) {
    if (boundary_index >= b.num_boundary)
        throw Error(ErrorCode::IndexOutOfRange, "boundary index " + std::to_string(boundary_index) +
                                                    " out of range for block with " +
                                                    std::to_string(b.num_boundary) + " boundary tori");
    return Slope{0, 1};
}

struct ValidationIssue {
    ErrorCode code;
    std::string message;
    std::string block;  // offending block, when there is one

    ValidationIssue(ErrorCode c, std::string msg, std::string blk = {})
        : code(c), message(std::move(msg)), block(std::move(blk)) {}
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    bool has(ErrorCode c) const {
        return std::any_of(issues.begin(), issues.end(), [c](const auto& i) { return i.code == c; });
    }
};

namespace detail {

inline void check_block(const std::string& id, const BlockData& data, bool geometric,
                        std::vector<ValidationIssue>& out) {
    if (const auto* s = std::get_if<SeifertBlockData>(&data)) {
        for (const auto& f : s->exceptional)
            if (f.a < 2)
                out.push_back({ErrorCode::InvalidManifold,
                               "block " + id + ": exceptional fiber multiplicity " + f.a.str() + " < 2", id});
        if (s->is_thin && (s->genus != 0 || s->num_boundary != 2 || !s->exceptional.empty()))
            out.push_back({ErrorCode::ThinShape,
                           "block " + id + ": thin block must have genus 0, 2 boundary tori, no exceptional fibers", id});
    } else {
        const auto& h = std::get<HyperbolicBlockData>(data);
        if (h.num_boundary == 0 && !geometric)
            out.push_back({ErrorCode::InvalidManifold,
                           "block " + id + ": hyperbolic block in a decomposition needs a boundary torus", id});
        for (const auto& [idx, frame] : h.framing) {
            if (idx >= h.num_boundary)
                out.push_back({ErrorCode::IndexOutOfRange,
                               "block " + id + ": frame on missing boundary " + std::to_string(idx), id});
            if (frame.first == frame.second)
                out.push_back({ErrorCode::InvalidManifold,
                               "block " + id + ": frame curves on boundary " + std::to_string(idx) +
                                   " have the same slope", id});
        }
    }
}

}  // namespace detail

inline ValidationReport validate(const ManifoldGraph& m) {
    ValidationReport report;
    auto& out = report.issues;

    if (m.blocks.empty()) out.push_back({ErrorCode::InvalidManifold, "manifold has no blocks"});

    const bool geometric = m.geometry_label.has_value();
    for (const auto& [id, data] : m.blocks) detail::check_block(id, data, geometric, out);

    if (geometric && !m.jsj_tori.empty())
        out.push_back({ErrorCode::GeometryWithTori, "geometry label given for a manifold with JSJ tori"});
    if (geometric && m.blocks.size() != 1)
        out.push_back({ErrorCode::GeometryWithTori, "geometry label requires exactly one block"});

    std::map<TorusEnd, std::string> used;  // end -> first user
    auto use_end = [&](const TorusEnd& e, const std::string& user) {
        auto it = m.blocks.find(e.block);
        if (it == m.blocks.end()) {
            out.push_back({ErrorCode::UnknownBlock, user + " references unknown block " + e.block});
            return;
        }
        if (e.boundary_index >= boundary_count(it->second)) {
            out.push_back({ErrorCode::IndexOutOfRange,
                           user + " references missing boundary " + to_string(e)});
            return;
        }
        auto [pos, fresh] = used.emplace(e, user);
        if (!fresh)
            out.push_back({ErrorCode::RepeatedEnd,
                           "end " + to_string(e) + " used by both " + pos->second + " and " + user});
    };

    std::set<std::string> torus_ids;
    for (const auto& t : m.jsj_tori) {
        const std::string user = "torus " + t.id;
        if (!torus_ids.insert(t.id).second)
            out.push_back({ErrorCode::InvalidManifold, "duplicate torus id " + t.id});
        use_end(t.end_a, user);
        use_end(t.end_b, user);
        if (!t.glue.is_unimodular())
            out.push_back({ErrorCode::Determinant,
                           user + ": gluing determinant " + t.glue.determinant().str() + " is not +1 or -1"});
    }
    for (const auto& e : m.boundary_tori) use_end(e, "boundary " + to_string(e));

    for (const auto& [id, data] : m.blocks)
        for (std::size_t i = 0; i < boundary_count(data); ++i)
            if (!used.contains(TorusEnd{id, i}))
                out.push_back({ErrorCode::UnusedBoundary,
                               "boundary torus " + id + "." + std::to_string(i) + " is neither glued nor declared boundary", id});

    // connectivity of the block graph
    if (!m.blocks.empty()) {
        std::map<std::string, std::string> parent;
        for (const auto& [id, _] : m.blocks) parent[id] = id;
        auto find = [&](std::string x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& t : m.jsj_tori)
            if (m.blocks.contains(t.end_a.block) && m.blocks.contains(t.end_b.block))
                parent[find(t.end_a.block)] = find(t.end_b.block);
        std::set<std::string> roots;
        for (const auto& [id, _] : m.blocks) roots.insert(find(id));
        if (roots.size() > 1)
            out.push_back({ErrorCode::InvalidManifold,
                           "block graph is disconnected (" + std::to_string(roots.size()) + " components)"});
    }
    return report;
}

/// Curves meeting one JSJ torus, each side in its own local basis.
struct TorusCurves {
    std::vector<Slope> side_a;
    std::vector<Slope> side_b;
};

struct TorusSlopeAudit {
    std::string torus;
    std::vector<Slope> slopes;  // distinct, in side-A coordinates
    bool flagged = false;       // slope count != 2
};

/// Counts distinct slopes per torus after moving side-B curves into the
/// side-A basis.
inline std::vector<TorusSlopeAudit> audit_torus_slopes(const ManifoldGraph& m,
                                                       const std::map<std::string, TorusCurves>& curves) {
    std::vector<TorusSlopeAudit> out;
    for (const auto& [tid, tc] : curves) {
        const JsjTorus* t = m.torus(tid);
        if (!t) throw Error(ErrorCode::InvalidManifold, "no torus named '" + tid + "'");
        if (tc.side_a.empty() && tc.side_b.empty())
            throw Error(ErrorCode::EmptyCurveSystem, "torus " + tid + " carries no curves");
        const GluingMatrix back = t->glue.inverse();
        std::set<Slope> distinct;
        for (const auto& s : tc.side_a) distinct.insert(slope_normalize(s.p, s.q));
        for (const auto& s : tc.side_b) distinct.insert(transport_slope(s, back));
        TorusSlopeAudit a{tid, {distinct.begin(), distinct.end()}, false};
        a.flagged = a.slopes.size() != 2;
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace vcs
