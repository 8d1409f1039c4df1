// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace vcs;

namespace {

struct Check {
    std::string failure;
    void expect(bool ok, const std::string& what) {
        if (!ok && failure.empty()) failure = what;
    }
};

std::size_t maximal_at(const CubeComplex& c, std::size_t v, std::size_t dim) {
    std::size_t n = 0;
    for (const auto& cube : c.maximal_cubes())
        if (cube.dim == dim && std::find(cube.corners.begin(), cube.corners.end(), v) != cube.corners.end()) ++n;
    return n;
}

void torus_dimension(Check& c) {
    const std::vector<std::vector<Slope>> families{{{1, 0}}, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}, {1, 1}}};
    for (const auto& slopes : families) {
        const std::size_t n = slopes.size();
        const auto start = std::chrono::steady_clock::now();
        const auto d = dual_cube_complex(torus_line_wallspace(slopes, 1));
        const std::string tag = "n=" + std::to_string(n) + ": ";
        c.expect(dimension(d.complex) == n, tag + "dimension");
        c.expect(check_npc(d.complex).npc(), tag + "not NPC");
        std::size_t interior = 0;
        for (std::size_t v = 0; v < d.complex.vertex_count(); ++v) {
            if (d.complex.degree(v) != 2 * n) continue;
            ++interior;
            c.expect(maximal_at(d.complex, v, n) == (std::size_t{1} << n), tag + "interior vertex cube count");
        }
        c.expect(interior > 0, tag + "no interior vertex");
        c.expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(5), tag + "too slow");
    }
}

void k_cube(Check& c) {
    for (std::size_t k = 1; k <= 5; ++k) {
        const auto d = dual_cube_complex(oracle::cube_wallspace(k));
        const std::string tag = "k=" + std::to_string(k) + ": ";
        c.expect(d.complex.vertex_count() == (std::size_t{1} << k), tag + "vertices");
        c.expect(d.complex.count_of_dim(1) == (k << (k - 1)), tag + "edges");
        const auto maximal = d.complex.maximal_cubes();
        c.expect(maximal.size() == 1 && maximal[0].dim == k, tag + "maximal cube");
    }
}

void chargeless_oracle(Check& c) {
    std::mt19937_64 rng(20240601);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto rb = oracle::random_interior_block(rng);
        const ChargeVerdict v = is_chargeless_block(rb.graph, "C");
        oracle::i64 box = 6;
        if (v.witness)
            for (const auto& x : *v.witness) box = std::max(box, std::abs(oracle::to_i64(x)));
        const auto brute = oracle::brute_force_chargeless(rb.spec, rb.k, rb.ends_per_end, box);
        const std::string tag = "trial " + std::to_string(trial) + ": ";
        c.expect(v.chargeless == brute.found, tag + "verdict differs from brute force");
        if (v.witness) {
            oracle::Vec w;
            for (const auto& x : *v.witness) w.push_back(oracle::to_i64(x));
            c.expect(oracle::weights_are_solution(rb.spec, rb.k, rb.ends_per_end, w), tag + "bad witness");
            ++yes;
        } else {
            c.expect(v.obstruction && brute.always_zero[*v.obstruction - 1], tag + "bad obstruction");
            ++no;
        }
    }
    c.expect(yes > 0 && no > 0, "sample lacks one of the verdicts");
}

void homology_golden(Check& c) {
    SeifertBlockData trefoil;
    trefoil.num_boundary = 1;
    trefoil.exceptional = {{2, 1}, {3, 1}};
    c.expect(to_string(presentation_h1(trefoil).group()) == "Z", "trefoil complement");
    SeifertBlockData t2i;
    t2i.num_boundary = 2;
    c.expect(to_string(presentation_h1(t2i).group()) == "Z^2", "thickened torus");
    for (const char* f : {"manifolds/trefoil_exterior.m3", "manifolds/thickened_torus.m3"}) {
        const ManifoldGraph m = parse_manifold(oracle::catalog_text(f));
        const auto& b = m.seifert(m.blocks.begin()->first);
        const std::string expect = b.num_boundary == 1 ? "Z" : "Z^2";
        c.expect(to_string(presentation_h1(b).group()) == expect, f);
    }
}

void euler_zero(Check& c) {
    int seen = 0;
    for (const char* f : {"manifolds/chargeless_mixed.m3", "manifolds/closed_graph.m3", "manifolds/self_glued.m3"}) {
        const auto report = is_chargeless_manifold(parse_manifold(oracle::catalog_text(f)));
        for (const auto& v : report.verdicts) {
            if (!v.witness || !is_all_ones(*v.witness)) continue;
            ++seen;
            c.expect(v.filled_euler && *v.filled_euler == 0, std::string(f) + ": nonzero Euler number");
        }
    }
    c.expect(seen > 0, "no all-ones witness in the catalog");
}

void classification(Check& c) {
    const std::map<std::string, bool> table{{"h3", true},   {"e3", true},  {"h2xr", true}, {"s2xr", true},
                                            {"s3", true},   {"sol", false}, {"nil", false}, {"sl2r", false}};
    for (const auto& [name, good] : table) {
        const auto v = classify_vcs(parse_manifold(oracle::catalog_text("manifolds/" + name + ".m3")));
        c.expect(v.vcs == good, name);
    }
    const auto yes = classify_vcs(parse_manifold(oracle::catalog_text("manifolds/chargeless_mixed.m3")));
    c.expect(yes.vcs && yes.reason == VcsReason::NongeometricChargeless, "chargeless mixed");
    const auto no = classify_vcs(parse_manifold(oracle::catalog_text("manifolds/charged_mixed.m3")));
    c.expect(!no.vcs && no.failing_blocks == std::vector<std::string>{"S2"}, "charged mixed");
}

void pathology(Check& c) {
    auto load = [](const std::string& n) { return parse_cube_complex(oracle::catalog_text("complexes/" + n)); };
    const std::vector<std::pair<std::string, std::array<bool, 4>>> table{
        {"one_sided.cc", {true, false, false, false}},
        {"self_intersecting.cc", {false, true, false, false}},
        {"self_osculating.cc", {false, false, true, false}},
        {"inter_osculating.cc", {false, false, false, true}},
    };
    for (const auto& [name, want] : table) {
        const auto r = specialness_report(load(name));
        const std::array<bool, 4> got{r.any_one_sided(), r.any_self_intersecting(), r.any_self_osculating(),
                                      r.any_inter_osculating()};
        c.expect(got == want && !r.special, name);
    }
    c.expect(specialness_report(load("square.cc")).special, "square");
    c.expect(specialness_report(load("cube3.cc")).special, "3-cube");
    c.expect(specialness_report(dual_cube_complex(oracle::cube_wallspace(4)).complex).special, "4-cube");
}

void helly(Check& c) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto hc = oracle::random_helly_case(rng);
        const auto r = helly_intersection(hc.tree, hc.subtrees);
        c.expect(r.common_vertex && oracle::in_all(hc.subtrees, *r.common_vertex),
                 "trial " + std::to_string(trial));
    }
}

void medians(Check& c) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const Wallspace ws = oracle::random_wallspace(rng);
        const auto d = dual_cube_complex(ws);
        std::set<Orientation> vertices(d.orientations.begin(), d.orientations.end());
        const auto& o = d.orientations;
        for (std::size_t a = 0; a < o.size(); ++a)
            for (std::size_t b = a; b < o.size(); ++b)
                for (std::size_t x = b; x < o.size(); ++x)
                    c.expect(vertices.contains(median_orientation(o[a], o[b], o[x])),
                             "trial " + std::to_string(trial));
    }
}

void snf(Check& c) {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t r = 1 + rng() % 6, cols = 1 + rng() % 6;
        IntMatrix a(r, cols);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = entry(rng);
        const auto s = smith_normal_form(a);
        const std::string tag = "trial " + std::to_string(trial) + ": ";
        c.expect(s.U * a * s.V == s.D, tag + "UAV != D");
        c.expect(abs_value(s.U.determinant()) == 1 && abs_value(s.V.determinant()) == 1, tag + "not unimodular");
        const IntVector d = s.diagonal();
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            c.expect(d[i + 1] == 0 || (d[i] != 0 && d[i + 1] % d[i] == 0), tag + "divisibility");
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) c.expect(s.D(i, j) == 0, tag + "off-diagonal");
    }
}

}  // namespace

int main() {
    const std::vector<std::tuple<std::string, double, std::function<void(Check&)>>> criteria{
        {"torus wallspace dimension", 15, torus_dimension},
        {"k-cube duality", 5, k_cube},
        {"chargeless oracle equivalence", 60, chargeless_oracle},
        {"homology golden values", 1, homology_golden},
        {"Euler number zero for all-ones witnesses", 1, euler_zero},
        {"classification table", 1, classification},
        {"specialness pathology catalog", 1, pathology},
        {"Helly property", 10, helly},
        {"median property of duals", 30, medians},
        {"Smith normal form", 30, snf},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, limit, fn] = criteria[i];
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.failure.empty() && secs > limit) c.failure = "took " + std::to_string(secs) + " s";
        std::cout << (c.failure.empty() ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << name << " ("
                  << std::fixed << std::setprecision(3) << secs << " s)";
        if (!c.failure.empty()) std::cout << " -- " << c.failure;
        std::cout << '\n';
        failed += c.failure.empty() ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
