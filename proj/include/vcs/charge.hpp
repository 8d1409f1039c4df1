#pragma once

// Chargeless interior Seifert blocks, Seifert Euler numbers after Dehn
// filling, and the virtually-compact-special verdict for a whole manifold.
//
// An interior block B with JSJ ends T_1..T_k is chargeless when nonzero
// integers n_i exist with sum n_i [Z_i] = 0 in H_1(B; Z), Z_i being the
// fiber of the block across T_i.

#include "vcs/decomposition.hpp"
#include "vcs/error.hpp"
#include "vcs/homology.hpp"
#include "vcs/integer.hpp"
#include "vcs/manifold_model.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vcs {

enum class SelfGluing {
    PerEnd,    // a self-glued torus contributes one term for each of its two ends
    PerTorus,  // ... or a single term, taken at its lower-index end
};

struct ChargeOptions {
    SelfGluing self_gluing = SelfGluing::PerEnd;
};

struct ChargeVerdict {
    std::string block_id;
    bool chargeless = false;
    std::optional<IntVector> witness;        // n_1..n_k, all nonzero
    std::optional<std::size_t> obstruction;  // 1-based end whose weight is forced to 0

    // certificate data
    std::vector<std::size_t> end_indices;  // local boundary index of each term
    std::vector<Slope> fiber_slopes;       // Z_i in local (section, fiber) coordinates
    std::vector<IntVector> classes;        // [Z_i] in presentation coordinates
    LatticeBasis lattice;
    std::optional<Rational> filled_euler;  // diagnostic, when every Z_i is a Seifert filling
};

inline bool is_all_ones(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 1; });
}

/// Closed Seifert data after filling boundary k along slopes[k]; each filling
/// becomes an exceptional fiber (|p|, sign(p) q).
inline SeifertBlockData fill_along_slopes(const SeifertBlockData& b, const std::vector<Slope>& slopes) {
    if (slopes.size() != b.num_boundary)
        throw Error(ErrorCode::DimensionMismatch, std::to_string(slopes.size()) + " filling slopes for " +
                                                      std::to_string(b.num_boundary) + " boundary tori");
    SeifertBlockData out = b;
    out.num_boundary = 0;
    out.section_obstruction = 0;
    out.is_thin = false;
    for (std::size_t k = 0; k < slopes.size(); ++k) {
        const Slope& s = slopes[k];
        if (s.p == 0)
            throw Error(ErrorCode::FiberFilling,
                        "boundary " + std::to_string(k) + ": filling along the fiber is not a Seifert filling");
        out.exceptional.push_back(s.p > 0 ? ExceptionalFiber{s.p, s.q} : ExceptionalFiber{-s.p, -s.q});
    }
    return out;
}

/// e = -(b + sum b_j / a_j) for a closed Seifert block.
inline Rational euler_number(const SeifertBlockData& b) {
    if (b.num_boundary != 0)
        throw Error(ErrorCode::NotClosed, "Euler number needs a closed block (" + std::to_string(b.num_boundary) +
                                              " boundary tori)");
    Rational sum(b.section_obstruction);
    for (const auto& f : b.exceptional) sum += make_rational(f.b, f.a);
    return -sum;
}

inline ChargeVerdict is_chargeless_block(const ManifoldGraph& m, const std::string& block_id,
                                         const ChargeOptions& opts = {}) {
    const SeifertBlockData& b = m.seifert(block_id);
    if (!interior_blocks(m).contains(block_id))
        throw Error(ErrorCode::NotInterior,
                    "block " + block_id + " touches the manifold boundary or a hyperbolic block");

    ChargeVerdict v;
    v.block_id = block_id;
    for (const EndView& e : jsj_ends_of(m, block_id)) {
        const bool self = e.torus->end_a.block == e.torus->end_b.block;
        if (self && opts.self_gluing == SelfGluing::PerTorus &&
            e.local.boundary_index > e.far.boundary_index)
            continue;
        const SeifertBlockData& neighbor = m.seifert(e.far.block);
        const Slope z = transport_slope(fiber_slope(neighbor, e.far.boundary_index), e.far_to_local);
        v.end_indices.push_back(e.local.boundary_index);
        v.fiber_slopes.push_back(z);
        v.classes.push_back(class_in_h1(b, e.local.boundary_index, z));
    }

    const AbelianPresentation pres = presentation_h1(b);
    v.lattice = kernel_lattice(v.classes, pres.relations);
    v.witness = all_nonzero_vector(v.lattice);
    v.chargeless = v.witness.has_value();
    if (v.chargeless) {
        IntVector sum(pres.labels.size());
        for (std::size_t i = 0; i < v.classes.size(); ++i)
            for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += (*v.witness)[i] * v.classes[i][j];
        if (!in_image(pres.relations, sum))
            throw Error(ErrorCode::InvalidManifold, "internal: witness for block " + block_id + " fails substitution");
    } else {
        v.obstruction = *vanishing_coordinate(v.lattice) + 1;
    }

    const bool full = v.end_indices.size() == b.num_boundary;
    const bool fillable =
        std::all_of(v.fiber_slopes.begin(), v.fiber_slopes.end(), [](const Slope& s) { return s.p != 0; });
    if (full && fillable) {
        std::vector<Slope> ordered(b.num_boundary);
        for (std::size_t i = 0; i < v.end_indices.size(); ++i) ordered[v.end_indices[i]] = v.fiber_slopes[i];
        v.filled_euler = euler_number(fill_along_slopes(b, ordered));
    }
    return v;
}

struct ManifoldChargeReport {
    std::vector<ChargeVerdict> verdicts;
    bool chargeless = true;

    std::vector<std::string> charged_blocks() const {
        std::vector<std::string> out;
        for (const auto& v : verdicts)
            if (!v.chargeless) out.push_back(v.block_id);
        return out;
    }
};

inline ManifoldChargeReport is_chargeless_manifold(const ManifoldGraph& m, const ChargeOptions& opts = {}) {
    ManifoldChargeReport r;
    for (const auto& id : interior_blocks(m)) {
        r.verdicts.push_back(is_chargeless_block(m, id, opts));
        r.chargeless = r.chargeless && r.verdicts.back().chargeless;
    }
    return r;
}

enum class VcsReason { GeometricGood, GeometricBad, NongeometricChargeless, NongeometricCharged };

constexpr std::string_view reason_name(VcsReason r) {
    switch (r) {
    case VcsReason::GeometricGood: return "geometric-good";
    case VcsReason::GeometricBad: return "geometric-bad";
    case VcsReason::NongeometricChargeless: return "nongeometric-chargeless";
    case VcsReason::NongeometricCharged: return "nongeometric-charged";
    }
    return "?";
}

/// H3, E3, H2xR, S2xR, S3, and Seifert fibered with boundary.
constexpr bool geometry_is_vcs(Geometry g) {
    switch (g) {
    case Geometry::H3:
    case Geometry::E3:
    case Geometry::H2xR:
    case Geometry::S2xR:
    case Geometry::S3:
    case Geometry::SFSWithBoundary: return true;
    case Geometry::Sol:
    case Geometry::Nil:
    case Geometry::SL2R: return false;
    }
    return false;
}

struct ClassificationVerdict {
    bool vcs = false;
    VcsReason reason = VcsReason::GeometricBad;
    std::optional<Geometry> geometry;
    // nongeometric certificate chain
    std::optional<ManifoldGraph> modified;
    std::optional<ClusterPartition> partition;
    std::vector<ChargeVerdict> block_verdicts;
    std::vector<std::string> failing_blocks;
};

inline ClassificationVerdict classify_vcs(const ManifoldGraph& m, const ChargeOptions& opts = {}) {
    const ValidationReport rep = validate(m);
    if (!rep.ok()) throw Error(rep.issues.front().code, rep.issues.front().message);

    ClassificationVerdict out;
    if (m.jsj_tori.empty()) {
        if (!m.geometry_label)
            throw Error(ErrorCode::MissingGeometryLabel,
                        "a manifold without JSJ tori needs a geometry label; geometrization is not attempted");
        out.geometry = m.geometry_label;
        out.vcs = geometry_is_vcs(*m.geometry_label);
        out.reason = out.vcs ? VcsReason::GeometricGood : VcsReason::GeometricBad;
        return out;
    }

    ManifoldGraph mod = modify_jsj(m);
    out.partition = clusters(mod);
    ManifoldChargeReport charge = is_chargeless_manifold(mod, opts);
    out.failing_blocks = charge.charged_blocks();
    out.block_verdicts = std::move(charge.verdicts);
    out.vcs = charge.chargeless;
    out.reason = out.vcs ? VcsReason::NongeometricChargeless : VcsReason::NongeometricCharged;
    out.modified = std::move(mod);
    return out;
}

}  // namespace vcs
