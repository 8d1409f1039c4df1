#pragma once

// Finite wallspaces and their dual cube complexes.
//
// A wall splits the chamber set into two covering halfspaces U and V. A
// vertex of the dual complex picks one halfspace per wall so that any two
// picks intersect; edges flip one wall, and a family of pairwise-crossing
// walls that can be flipped independently at a vertex spans a cube.

#include "vcs/cube_complex.hpp"
#include "vcs/error.hpp"
#include "vcs/integer.hpp"
#include "vcs/manifold_model.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vcs {

struct Wall {
    std::string id;
    std::vector<std::size_t> U;  // sorted chamber indices
    std::vector<std::size_t> V;

    const std::vector<std::size_t>& side(std::uint8_t s) const { return s == 0 ? U : V; }
};

struct Wallspace {
    std::size_t chambers = 0;
    std::vector<Wall> walls;
};

namespace detail {

inline bool sorted_meet(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

}  // namespace detail

inline void validate_wallspace(const Wallspace& ws) {
    std::set<std::string> ids;
    for (const auto& w : ws.walls) {
        if (!ids.insert(w.id).second) throw Error(ErrorCode::InvalidWallspace, "duplicate wall id " + w.id);
        if (w.U.empty() || w.V.empty()) throw Error(ErrorCode::InvalidWallspace, "wall " + w.id + " has an empty halfspace");
        std::vector<char> seen(ws.chambers, 0);
        for (const auto* side : {&w.U, &w.V}) {
            if (!std::is_sorted(side->begin(), side->end()) ||
                std::adjacent_find(side->begin(), side->end()) != side->end())
                throw Error(ErrorCode::InvalidWallspace, "wall " + w.id + ": halfspace not sorted and distinct");
            for (std::size_t c : *side) {
                if (c >= ws.chambers) throw Error(ErrorCode::InvalidWallspace, "wall " + w.id + ": chamber out of range");
                seen[c] = 1;
            }
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw Error(ErrorCode::InvalidWallspace, "wall " + w.id + ": halfspaces do not cover every chamber");
        if (w.U.size() == ws.chambers || w.V.size() == ws.chambers)
            throw Error(ErrorCode::InvalidWallspace, "wall " + w.id + " is degenerate: one halfspace is everything");
    }
}

/// All four corners U1∩U2, U1∩V2, V1∩U2, V1∩V2 are inhabited. A wall does
/// not cross itself.
inline bool walls_cross(const Wall& a, const Wall& b) {
    if (a.id == b.id) return false;
    return detail::sorted_meet(a.U, b.U) && detail::sorted_meet(a.U, b.V) && detail::sorted_meet(a.V, b.U) &&
           detail::sorted_meet(a.V, b.V);
}

/// One halfspace choice per wall: 0 = U, 1 = V.
using Orientation = std::vector<std::uint8_t>;

struct DualComplex {
    CubeComplex complex;
    std::vector<Orientation> orientations;  // vertex i of the complex
    std::vector<std::size_t> wall_of_edge;  // edge id -> wall index
};

inline constexpr std::size_t default_orientation_budget = 1'000'000;

namespace detail {

class Compatibility {
public:
    explicit Compatibility(const Wallspace& ws) : n_(ws.walls.size()), table_(4 * n_ * n_) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::uint8_t si = 0; si < 2; ++si)
                    for (std::uint8_t sj = 0; sj < 2; ++sj)
                        table_[index(i, si, j, sj)] =
                            i == j ? si == sj : sorted_meet(ws.walls[i].side(si), ws.walls[j].side(sj));
    }
    bool operator()(std::size_t i, std::uint8_t si, std::size_t j, std::uint8_t sj) const {
        return table_[index(i, si, j, sj)] != 0;
    }

private:
    std::size_t index(std::size_t i, std::uint8_t si, std::size_t j, std::uint8_t sj) const {
        return ((i * n_ + j) * 2 + si) * 2 + sj;
    }
    std::size_t n_;
    std::vector<char> table_;
};

}  // namespace detail

inline bool is_consistent(const Wallspace& ws, const Orientation& o) {
    for (std::size_t i = 0; i < ws.walls.size(); ++i)
        for (std::size_t j = i + 1; j < ws.walls.size(); ++j)
            if (!detail::sorted_meet(ws.walls[i].side(o[i]), ws.walls[j].side(o[j]))) return false;
    return true;
}

/// Every consistent orientation, in lexicographic order.
inline std::vector<Orientation> consistent_orientations(const Wallspace& ws,
                                                        std::size_t budget = default_orientation_budget) {
    const detail::Compatibility compat(ws);
    const std::size_t n = ws.walls.size();
    std::vector<Orientation> out;
    Orientation cur(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (out.size() >= budget)
                throw Error(ErrorCode::BudgetExceeded,
                            "more than " + std::to_string(budget) + " consistent orientations (reached " +
                                std::to_string(out.size() + 1) + ")");
            out.push_back(cur);
            return;
        }
        for (std::uint8_t s = 0; s < 2; ++s) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = compat(i, s, j, cur[j]);
            if (!ok) continue;
            cur[i] = s;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

inline DualComplex dual_cube_complex(const Wallspace& ws, std::size_t budget = default_orientation_budget) {
    validate_wallspace(ws);
    const std::size_t n = ws.walls.size();
    DualComplex dual;
    dual.orientations = consistent_orientations(ws, budget);
    std::map<Orientation, std::size_t> vertex_of;
    for (std::size_t i = 0; i < dual.orientations.size(); ++i) vertex_of.emplace(dual.orientations[i], i);

    std::vector<std::vector<char>> cross(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cross[i][j] = walls_cross(ws.walls[i], ws.walls[j]);

    std::vector<Cube> cubes;
    for (std::size_t v = 0; v < dual.orientations.size(); ++v) {
        const Orientation& base = dual.orientations[v];
        // walls flippable from U to V here; cubes are emitted from the corner
        // where all their walls sit on the U side
        std::vector<std::size_t> up;
        for (std::size_t w = 0; w < n; ++w) {
            if (base[w] != 0) continue;
            Orientation f = base;
            f[w] = 1;
            if (vertex_of.contains(f)) up.push_back(w);
        }
        std::vector<std::size_t> family;
        std::vector<std::size_t> corners{v};  // binary-counter order over `family`
        auto grow = [&](auto&& self, std::size_t from) -> void {
            for (std::size_t k = from; k < up.size(); ++k) {
                const std::size_t w = up[k];
                if (!std::all_of(family.begin(), family.end(), [&](std::size_t x) { return cross[w][x] != 0; }))
                    continue;
                std::vector<std::size_t> extended = corners;
                bool ok = true;
                for (std::size_t x = 0; x < corners.size() && ok; ++x) {
                    Orientation f = dual.orientations[corners[x]];
                    f[w] = 1;
                    const auto it = vertex_of.find(f);
                    if (it == vertex_of.end()) ok = false;
                    else extended.push_back(it->second);
                }
                if (!ok) continue;
                family.push_back(w);
                std::swap(corners, extended);
                cubes.push_back(Cube{family.size(), corners});
                self(self, k + 1);
                std::swap(corners, extended);
                family.pop_back();
            }
        };
        grow(grow, 0);
    }
    dual.complex = CubeComplex::with_count(dual.orientations.size(), cubes);

    for (const auto& [a, b] : dual.complex.edges()) {
        const auto& oa = dual.orientations[a];
        const auto& ob = dual.orientations[b];
        const auto w = static_cast<std::size_t>(std::mismatch(oa.begin(), oa.end(), ob.begin()).first - oa.begin());
        dual.wall_of_edge.push_back(w);
    }
    return dual;
}

/// Majority vote per wall.
inline Orientation median_orientation(const Orientation& a, const Orientation& b, const Orientation& c) {
    Orientation m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = (a[i] + b[i] + c[i]) >= 2 ? 1 : 0;
    return m;
}

struct CrossingFamily {
    std::size_t size = 0;
    std::vector<std::size_t> walls;  // indices, ascending
};

/// Maximum clique of the crossing graph by branch and bound.
inline CrossingFamily max_crossing_family(const Wallspace& ws) {
    validate_wallspace(ws);
    const std::size_t n = ws.walls.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) adj[i][j] = walls_cross(ws.walls[i], ws.walls[j]);

    CrossingFamily best;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, const std::vector<std::size_t>& candidates) -> void {
        if (cur.size() > best.size) best = {cur.size(), cur};
        if (cur.size() + candidates.size() <= best.size) return;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            if (cur.size() + (candidates.size() - k) <= best.size) return;
            const std::size_t v = candidates[k];
            std::vector<std::size_t> next;
            for (std::size_t l = k + 1; l < candidates.size(); ++l)
                if (adj[v][candidates[l]]) next.push_back(candidates[l]);
            cur.push_back(v);
            self(self, next);
            cur.pop_back();
        }
    };
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    rec(rec, all);
    return best;
}

// ---------------------------------------------------------------------------
// Lines on the universal cover of a torus.

namespace detail {

struct Point {
    Rational x;
    Rational y;
    friend bool operator<(const Point& a, const Point& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

struct Line {  // q*x - p*y = c
    Integer p, q, c;
    Rational eval(const Point& pt) const { return Rational(q) * pt.x - Rational(p) * pt.y - Rational(c); }
};

inline int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }
inline int sign_of(const Integer& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// angle order of nonzero integer vectors
inline bool angle_less(const std::pair<Integer, Integer>& a, const std::pair<Integer, Integer>& b) {
    auto half = [](const std::pair<Integer, Integer>& v) { return v.second < 0 || (v.second == 0 && v.first < 0); };
    if (half(a) != half(b)) return !half(a);
    return a.first * b.second - a.second * b.first > 0;
}

}  // namespace detail

/// Chambers are the regions cut out of a box (containing every crossing
/// point) by the lines q*x - p*y = c for each slope (p,q) and c in [-W, W];
/// one wall per line.
inline Wallspace torus_line_wallspace(const std::vector<Slope>& slopes, int window) {
    using detail::Line;
    using detail::Point;
    if (slopes.empty()) throw Error(ErrorCode::NoSlopes, "at least one slope is required");
    if (window < 1) throw Error(ErrorCode::InvalidArgument, "window must be at least 1");
    {
        std::set<Slope> distinct;
        for (const auto& s : slopes) {
            if (!(slope_normalize(s.p, s.q) == s))
                throw Error(ErrorCode::InvalidArgument, "slope " + to_string(s) + " is not normalized");
            if (!distinct.insert(s).second) throw Error(ErrorCode::InvalidArgument, "repeated slope " + to_string(s));
        }
    }

    std::vector<Line> lines;
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < slopes.size(); ++k)
        for (int c = -window; c <= window; ++c) {
            lines.push_back({slopes[k].p, slopes[k].q, c});
            ids.push_back("s" + std::to_string(k) + "_" + (c < 0 ? "m" + std::to_string(-c) : std::to_string(c)));
        }

    std::set<Point> crossings;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const Line& a = lines[i];
            const Line& b = lines[j];
            // [q1 -p1; q2 -p2] (x, y) = (c1, c2)
            const Integer det = -a.q * b.p + a.p * b.q;
            if (det == 0) continue;
            const Rational x = make_rational(-a.c * b.p + a.p * b.c, det);
            const Rational y = make_rational(a.q * b.c - b.q * a.c, det);
            crossings.insert({x, y});
        }
    Integer box = window + 1;
    for (const auto& pt : crossings)
        for (const Rational* r : {&pt.x, &pt.y}) {
            const Rational a = *r < 0 ? Rational(-*r) : *r;
            const Integer ceil_a = boost::multiprecision::numerator(a) / boost::multiprecision::denominator(a) + 1;
            box = std::max(box, Integer(ceil_a + 1));
        }

    // box sides as lines with the inside on the negative side
    const Rational B(box);
    std::vector<Line> sides{{0, 1, box}, {0, -1, box}, {-1, 0, box}, {1, 0, box}};  // x<B, -x<B, y<B, -y<B

    std::set<Point> points = crossings;
    for (const auto& l : lines) {
        for (const Rational& side : {B, Rational(-B)}) {
            if (l.q != 0) points.insert({(Rational(l.c) + Rational(l.p) * side) / Rational(l.q), side});
            if (l.p != 0) points.insert({side, (Rational(l.q) * side - Rational(l.c)) / Rational(l.p)});
        }
    }
    for (const Rational& sx : {B, Rational(-B)})
        for (const Rational& sy : {B, Rational(-B)}) points.insert({sx, sy});

    std::vector<std::pair<Integer, Integer>> dirs;
    for (const auto& s : slopes) {
        dirs.emplace_back(s.p, s.q);
        dirs.emplace_back(-s.p, -s.q);
    }
    for (auto d : {std::pair<Integer, Integer>{1, 0}, {0, 1}, {-1, 0}, {0, -1}}) dirs.push_back(d);
    std::sort(dirs.begin(), dirs.end(), detail::angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end(),
                           [](const auto& a, const auto& b) { return a.first * b.second == a.second * b.first &&
                                                                      detail::sign_of(a.first) == detail::sign_of(b.first) &&
                                                                      detail::sign_of(a.second) == detail::sign_of(b.second); }),
               dirs.end());
    std::vector<std::pair<Integer, Integer>> probes;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const auto& a = dirs[i];
        const auto& b = dirs[(i + 1) % dirs.size()];
        probes.emplace_back(a.first + b.first, a.second + b.second);
    }

    // sign of l at pt + eps*d as eps -> 0+
    auto limit_sign = [](const Line& l, const Point& pt, const std::pair<Integer, Integer>& d) {
        const int s = detail::sign_of(l.eval(pt));
        if (s != 0) return s;
        return detail::sign_of(Integer(l.q * d.first - l.p * d.second));
    };

    std::set<std::vector<int>> regions;
    for (const auto& pt : points)
        for (const auto& d : probes) {
            bool inside = true;
            for (const auto& s : sides) inside = inside && limit_sign(s, pt, d) < 0;
            if (!inside) continue;
            std::vector<int> sig;
            for (const auto& l : lines) sig.push_back(limit_sign(l, pt, d));
            regions.insert(std::move(sig));
        }

    Wallspace ws;
    ws.chambers = regions.size();
    std::vector<std::vector<int>> chamber(regions.begin(), regions.end());
    for (std::size_t li = 0; li < lines.size(); ++li) {
        Wall w{ids[li], {}, {}};
        for (std::size_t c = 0; c < chamber.size(); ++c) (chamber[c][li] < 0 ? w.U : w.V).push_back(c);
        ws.walls.push_back(std::move(w));
    }
    validate_wallspace(ws);
    return ws;
}

// ---------------------------------------------------------------------------
// Text format: `chambers <n>` then `wall <id> U=<i,j,...> V=<i,j,...>`.

inline Wallspace parse_wallspace(std::string_view text) {
    Wallspace ws;
    bool have_chambers = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto index_list = [&](const std::string& s) {
        std::vector<std::size_t> out;
        std::size_t i = 0;
        while (i < s.size()) {
            std::size_t j = s.find(',', i);
            if (j == std::string::npos) j = s.size();
            const std::string tok = s.substr(i, j - i);
            if (tok.empty() || tok.size() > 9 ||
                !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
                throw Error(ErrorCode::NotInteger, "bad chamber index '" + tok + "'", line_no);
            out.push_back(std::stoul(tok));
            i = j + 1;
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks[0] == "chambers") {
            if (have_chambers || toks.size() != 2) throw Error(ErrorCode::Syntax, "malformed chambers record", line_no);
            const auto v = index_list(toks[1]);
            if (v.size() != 1) throw Error(ErrorCode::Syntax, "chambers takes one count", line_no);
            ws.chambers = v[0];
            have_chambers = true;
        } else if (toks[0] == "wall") {
            if (!have_chambers) throw Error(ErrorCode::Syntax, "wall before chambers", line_no);
            if (toks.size() != 4) throw Error(ErrorCode::MissingField, "wall needs an id, U= and V=", line_no);
            Wall w{toks[1], {}, {}};
            if (toks[2].rfind("U=", 0) != 0) throw Error(ErrorCode::UnknownKey, "expected U=", line_no);
            if (toks[3].rfind("V=", 0) != 0) throw Error(ErrorCode::UnknownKey, "expected V=", line_no);
            w.U = index_list(toks[2].substr(2));
            w.V = index_list(toks[3].substr(2));
            ws.walls.push_back(std::move(w));
        } else {
            throw Error(ErrorCode::Syntax, "unknown record '" + toks[0] + "'", line_no);
        }
    }
    if (!have_chambers) throw Error(ErrorCode::MissingField, "missing chambers record", line_no);
    validate_wallspace(ws);
    return ws;
}

inline std::string serialize_wallspace(const Wallspace& ws) {
    std::ostringstream os;
    os << "chambers " << ws.chambers << "\n";
    auto list = [&](const std::vector<std::size_t>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    };
    for (const auto& w : ws.walls) {
        os << "wall " << w.id << " U=";
        list(w.U);
        os << " V=";
        list(w.V);
        os << "\n";
    }
    return os.str();
}

}  // namespace vcs
