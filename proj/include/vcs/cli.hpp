#pragma once

// Command-line driver. `run` returns the process exit code:
// 0 affirmative or neutral verdict, 1 negative verdict, 2 input or usage error.

#include "vcs/vcs.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace vcs::cli {

using nlohmann::json;

inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_input = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Usage, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string slope_text(const Slope& s) { return to_string(s); }

inline json int_array(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

class Printer {
public:
    Printer(std::ostream& out, bool as_json) : out_(out), json_(as_json) {}
    bool json_mode() const { return json_; }
    void line(const std::string& s) {
        if (!json_) out_ << s << "\n";
    }
    void record(const json& j) {
        if (json_) out_ << j.dump() << "\n";
    }

private:
    std::ostream& out_;
    bool json_;
};

inline std::string witness_text(const ChargeVerdict& v) {
    if (v.witness) return "chargeless, witness " + to_string(*v.witness);
    return "charged, weight of end " + std::to_string(*v.obstruction) + " (boundary " +
           std::to_string(v.end_indices[*v.obstruction - 1]) + ") is forced to 0";
}

inline json verdict_json(const ChargeVerdict& v) {
    json j{{"kind", "block"}, {"block", v.block_id}, {"chargeless", v.chargeless}};
    json ends = json::array();
    for (std::size_t i = 0; i < v.end_indices.size(); ++i)
        ends.push_back({{"boundary", v.end_indices[i]}, {"fiber", slope_text(v.fiber_slopes[i])},
                        {"class", int_array(v.classes[i])}});
    j["ends"] = ends;
    json basis = json::array();
    for (const auto& b : v.lattice.vectors) basis.push_back(int_array(b));
    j["lattice"] = basis;
    j["witness"] = v.witness ? int_array(*v.witness) : json(nullptr);
    j["obstruction"] = v.obstruction ? json(*v.obstruction) : json(nullptr);
    j["filled_euler"] = v.filled_euler ? json(to_string(*v.filled_euler)) : json(nullptr);
    return j;
}

inline void print_verdict(Printer& p, const ChargeVerdict& v) {
    p.line("block " + v.block_id + ": " + witness_text(v));
    for (std::size_t i = 0; i < v.end_indices.size(); ++i)
        p.line("  end " + std::to_string(i + 1) + ": boundary " + std::to_string(v.end_indices[i]) + ", fiber " +
               slope_text(v.fiber_slopes[i]) + ", class " + to_string(v.classes[i]));
    std::string basis;
    for (const auto& b : v.lattice.vectors) basis += (basis.empty() ? "" : " ") + to_string(b);
    p.line("  lattice: " + (basis.empty() ? std::string("0") : basis));
    if (v.filled_euler) p.line("  filled Euler number: " + to_string(*v.filled_euler));
    p.record(verdict_json(v));
}

// ---------------------------------------------------------------------------

inline int cmd_validate(Printer& p, const std::string& path) {
    const ManifoldGraph m = parse_manifold(read_file(path));
    p.line("valid: " + std::to_string(m.blocks.size()) + " blocks, " + std::to_string(m.jsj_tori.size()) +
           " JSJ tori, " + std::to_string(m.boundary_tori.size()) + " boundary tori");
    p.record({{"kind", "validate"}, {"valid", true}, {"blocks", m.blocks.size()}, {"tori", m.jsj_tori.size()},
              {"boundary", m.boundary_tori.size()}});
    return exit_yes;
}

inline int cmd_classify(Printer& p, const std::string& path, const ChargeOptions& opts) {
    const ManifoldGraph m = parse_manifold(read_file(path));
    const ClassificationVerdict v = classify_vcs(m, opts);
    json rec{{"kind", "classify"}, {"vcs", v.vcs}, {"reason", std::string(reason_name(v.reason))}};
    if (v.geometry) {
        const std::string g(geometry_name(*v.geometry));
        p.line(std::string("VCS: ") + (v.vcs ? "yes" : "no") + " (geometric: " + g + ")");
        rec["geometry"] = g;
        p.record(rec);
        return v.vcs ? exit_yes : exit_no;
    }
    std::string head = std::string("VCS: ") + (v.vcs ? "yes (nongeometric, chargeless)" : "no (nongeometric, charged:");
    if (!v.vcs) {
        for (const auto& b : v.failing_blocks) head += " " + b;
        head += ")";
    }
    p.line(head);
    p.line("modified JSJ: " + std::to_string(v.modified->blocks.size()) + " blocks, " +
           std::to_string(v.modified->jsj_tori.size()) + " tori");
    json clusters = json::array();
    for (const auto& c : v.partition->clusters) {
        std::string names;
        for (const auto& b : c.blocks) names += (names.empty() ? "" : " ") + b;
        const std::string kind = c.kind == ClusterKind::Hyperbolic ? "hyperbolic" : (c.thin ? "thin" : "graph");
        p.line("cluster " + kind + ": " + names);
        clusters.push_back({{"kind", kind}, {"blocks", c.blocks}});
    }
    std::string trans;
    for (const auto& t : v.partition->transitional_tori) trans += " " + t;
    p.line("transitional tori:" + (trans.empty() ? std::string(" none") : trans));
    if (v.block_verdicts.empty()) p.line("no interior Seifert blocks");
    rec["clusters"] = clusters;
    rec["transitional_tori"] = v.partition->transitional_tori;
    rec["failing_blocks"] = v.failing_blocks;
    p.record(rec);
    for (const auto& b : v.block_verdicts) print_verdict(p, b);
    return v.vcs ? exit_yes : exit_no;
}

inline int cmd_chargeless(Printer& p, const std::string& path, const std::string& block, const ChargeOptions& opts) {
    const ManifoldGraph m = parse_manifold(read_file(path));
    std::vector<ChargeVerdict> verdicts;
    if (!block.empty()) verdicts.push_back(is_chargeless_block(m, block, opts));
    else verdicts = is_chargeless_manifold(m, opts).verdicts;
    if (verdicts.empty()) p.line("no interior Seifert blocks");
    bool all = true;
    for (const auto& v : verdicts) {
        print_verdict(p, v);
        all = all && v.chargeless;
    }
    return all ? exit_yes : exit_no;
}

inline std::vector<std::string> seifert_ids(const ManifoldGraph& m, const std::string& block) {
    if (!block.empty()) {
        m.seifert(block);
        return {block};
    }
    std::vector<std::string> ids;
    for (const auto& [id, data] : m.blocks)
        if (is_seifert(data)) ids.push_back(id);
    return ids;
}

inline int cmd_homology(Printer& p, const std::string& path, const std::string& block) {
    const ManifoldGraph m = parse_manifold(read_file(path));
    for (const auto& id : seifert_ids(m, block)) {
        const AbelianPresentation pres = presentation_h1(m.seifert(id));
        const AbelianGroup g = pres.group();
        p.line("block " + id + ": H1 = " + to_string(g));
        json torsion = json::array();
        for (const auto& t : g.torsion) torsion.push_back(t.str());
        p.record({{"kind", "homology"}, {"block", id}, {"free_rank", g.free_rank}, {"torsion", torsion},
                  {"group", to_string(g)}});
    }
    return exit_yes;
}

inline int cmd_euler(Printer& p, const std::string& path, const std::string& block) {
    const ManifoldGraph m = parse_manifold(read_file(path));
    const auto interior = interior_blocks(m);
    for (const auto& id : seifert_ids(m, block)) {
        const SeifertBlockData& b = m.seifert(id);
        json rec{{"kind", "euler"}, {"block", id}};
        if (b.num_boundary == 0) {
            const Rational e = euler_number(b);
            p.line("block " + id + ": e = " + to_string(e));
            rec["euler"] = to_string(e);
            rec["filled"] = false;
        } else if (interior.contains(id)) {
            const ChargeVerdict v = is_chargeless_block(m, id);
            if (v.filled_euler) {
                p.line("block " + id + ": e = " + to_string(*v.filled_euler) + " after filling along adjacent fibers");
                rec["euler"] = to_string(*v.filled_euler);
            } else {
                p.line("block " + id + ": an adjacent fiber is parallel to the local fiber; no Seifert filling");
                rec["euler"] = nullptr;
            }
            rec["filled"] = true;
        } else {
            p.line("block " + id + ": has boundary and is not interior; no Euler number");
            rec["euler"] = nullptr;
            rec["filled"] = false;
        }
        p.record(rec);
    }
    return exit_yes;
}

inline void print_complex(Printer& p, const CubeComplex& c, json& rec) {
    const std::size_t dim = dimension(c);
    std::string counts;
    json by_dim = json::array();
    for (std::size_t d = 0; d <= dim; ++d) {
        const std::size_t n = d == 0 ? c.vertex_count() : c.count_of_dim(d);
        counts += (d ? ", " : "") + std::to_string(n) + " " + std::to_string(d) + "-cubes";
        by_dim.push_back(n);
    }
    p.line("dimension " + std::to_string(dim) + ": " + counts);
    rec["dimension"] = dim;
    rec["cells"] = by_dim;
}

inline int cmd_dual_cube(Printer& p, const std::string& path, std::size_t budget) {
    const Wallspace ws = parse_wallspace(read_file(path));
    const DualComplex dual = dual_cube_complex(ws, budget);
    json rec{{"kind", "dual-cube"}, {"walls", ws.walls.size()}, {"chambers", ws.chambers}};
    print_complex(p, dual.complex, rec);
    const CrossingFamily fam = max_crossing_family(ws);
    std::string names;
    for (auto w : fam.walls) names += " " + ws.walls[w].id;
    p.line("largest crossing family:" + (names.empty() ? std::string(" none") : names));
    const bool npc = check_npc(dual.complex).npc();
    p.line(std::string("NPC: ") + (npc ? "yes" : "no"));
    for (std::size_t v = 0; v < dual.orientations.size(); ++v) {
        std::string o;
        for (auto s : dual.orientations[v]) o += s ? 'V' : 'U';
        p.line("vertex " + std::to_string(v) + " " + o);
    }
    p.line("complex:");
    std::istringstream body(serialize_cube_complex(dual.complex));
    for (std::string l; std::getline(body, l);) p.line("  " + l);
    rec["max_crossing_family"] = fam.size;
    rec["npc"] = npc;
    rec["complex"] = serialize_cube_complex(dual.complex);
    p.record(rec);
    return exit_yes;
}

inline std::string edge_name(const CubeComplex& c, std::size_t e) {
    const auto [a, b] = c.edges()[e];
    return std::to_string(c.labels()[a]) + "-" + std::to_string(c.labels()[b]);
}

inline int cmd_special_check(Printer& p, const std::string& path) {
    const CubeComplex c = parse_cube_complex(read_file(path));
    const HyperplaneStructure hs = hyperplane_structure(c);
    const PathologyReport rep = specialness_report(c);
    const NpcReport npc = check_npc(c);
    json rec{{"kind", "special-check"}, {"special", rep.special}, {"npc", npc.npc()},
             {"hyperplanes", hs.hyperplanes.size()}};
    json bad = json::array();
    p.line(std::string("special: ") + (rep.special ? "yes" : "no"));
    p.line(std::string("NPC: ") + (npc.npc() ? "yes" : "no"));
    for (const auto& h : hs.hyperplanes) {
        std::string edges;
        for (auto e : h.edges) edges += " " + edge_name(c, e);
        const auto& path_h = rep.per_hyperplane[h.id];
        std::vector<std::string> tags;
        if (path_h.one_sided) tags.emplace_back("one-sided");
        if (path_h.self_intersecting) tags.emplace_back("self-intersecting");
        if (path_h.self_osculating) tags.emplace_back("self-osculating");
        std::string t;
        for (const auto& s : tags) t += (t.empty() ? "" : ", ") + s;
        p.line("hyperplane H" + std::to_string(h.id) + " (edges" + edges + "): " + (t.empty() ? "clean" : t));
        if (!tags.empty()) bad.push_back({{"hyperplane", "H" + std::to_string(h.id)}, {"pathologies", tags}});
    }
    json inter = json::array();
    for (auto [a, b] : rep.inter_osculating) {
        p.line("hyperplanes H" + std::to_string(a) + " and H" + std::to_string(b) + ": inter-osculating");
        inter.push_back({"H" + std::to_string(a), "H" + std::to_string(b)});
    }
    rec["pathologies"] = bad;
    rec["inter_osculating"] = inter;
    p.record(rec);
    return rep.special ? exit_yes : exit_no;
}

inline Slope parse_slope_flag(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::Usage, "slope must be p,q: '" + text + "'");
    try {
        std::size_t used = 0;
        const long long p = std::stoll(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("p");
        const std::string qs = text.substr(comma + 1);
        const long long q = std::stoll(qs, &used);
        if (used != qs.size()) throw std::invalid_argument("q");
        if (p == 0 && q == 0) throw Error(ErrorCode::ZeroVector, "slope 0,0 is not a slope");
        return slope_normalize(p, q);
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::Usage, "slope must be p,q with integers: '" + text + "'");
    }
}

inline int cmd_torus_walls(Printer& p, const std::vector<std::string>& slope_flags, int window) {
    std::vector<Slope> slopes;
    for (const auto& s : slope_flags) slopes.push_back(parse_slope_flag(s));
    const Wallspace ws = torus_line_wallspace(slopes, window);
    const DualComplex dual = dual_cube_complex(ws);
    json rec{{"kind", "torus-walls"}, {"walls", ws.walls.size()}, {"chambers", ws.chambers}};
    p.line(std::to_string(ws.walls.size()) + " walls, " + std::to_string(ws.chambers) + " chambers");
    print_complex(p, dual.complex, rec);
    const bool npc = check_npc(dual.complex).npc();
    p.line(std::string("NPC: ") + (npc ? "yes" : "no"));
    rec["npc"] = npc;
    std::istringstream body(serialize_wallspace(ws));
    for (std::string l; std::getline(body, l);) p.line("  " + l);
    rec["wallspace"] = serialize_wallspace(ws);
    p.record(rec);
    return exit_yes;
}

// `vertices <n>`, `edge <u> <v>`, `subtree <v> ...`
inline std::pair<Tree, std::vector<Subtree>> parse_helly(const std::string& text) {
    Tree t;
    std::vector<Subtree> subs;
    bool have_n = false;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    auto num = [&](const std::string& tok) -> std::size_t {
        if (tok.empty() || tok.size() > 9 ||
            !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw Error(ErrorCode::NotInteger, "expected a vertex number, got '" + tok + "'", line_no);
        return std::stoul(tok);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string s; ls >> s;) toks.push_back(s);
        if (toks.empty()) continue;
        if (toks[0] == "vertices" && toks.size() == 2 && !have_n) {
            t.vertex_count = num(toks[1]);
            have_n = true;
        } else if (toks[0] == "edge" && toks.size() == 3 && have_n) {
            t.edges.emplace_back(num(toks[1]), num(toks[2]));
        } else if (toks[0] == "subtree" && toks.size() >= 2 && have_n) {
            Subtree s;
            for (std::size_t i = 1; i < toks.size(); ++i) s.push_back(num(toks[i]));
            subs.push_back(std::move(s));
        } else {
            throw Error(ErrorCode::Syntax, "expected 'vertices <n>' first, then 'edge u v' or 'subtree v ...'", line_no);
        }
    }
    if (!have_n) throw Error(ErrorCode::MissingField, "missing vertices record", line_no);
    return {t, subs};
}

// random tree, then subtrees that all contain one hidden vertex
inline std::pair<Tree, std::vector<Subtree>> random_helly_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 2 + rng() % 12;
    Tree t{n, {}};
    for (std::size_t v = 1; v < n; ++v) t.edges.emplace_back(rng() % v, v);
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    const std::size_t hub = rng() % n;
    std::vector<Subtree> subs;
    const std::size_t k = 1 + rng() % 4;
    for (std::size_t i = 0; i < k; ++i) {
        Subtree s{hub};
        const std::size_t grow = rng() % n;
        for (std::size_t g = 0; g < grow; ++g) {
            const std::size_t from = s[rng() % s.size()];
            const std::size_t to = adj[from][rng() % adj[from].size()];
            if (std::find(s.begin(), s.end(), to) == s.end()) s.push_back(to);
        }
        std::sort(s.begin(), s.end());
        subs.push_back(std::move(s));
    }
    return {t, subs};
}

inline int cmd_helly(Printer& p, const std::string& path, std::uint64_t seed) {
    const auto [tree, subs] = path.empty() ? random_helly_instance(seed) : parse_helly(read_file(path));
    const HellyResult r = helly_intersection(tree, subs);
    json rec{{"kind", "helly"}, {"vertices", tree.vertex_count}, {"subtrees", subs.size()}};
    if (path.empty()) {
        p.line("random instance, seed " + std::to_string(seed) + ": " + std::to_string(tree.vertex_count) +
               " vertices, " + std::to_string(subs.size()) + " subtrees");
        rec["seed"] = seed;
    }
    if (r.common_vertex) {
        p.line("common vertex: " + std::to_string(*r.common_vertex));
        rec["common_vertex"] = *r.common_vertex;
        p.record(rec);
        return exit_yes;
    }
    p.line("no common vertex: subtrees " + std::to_string(r.disjoint_pair->first) + " and " +
           std::to_string(r.disjoint_pair->second) + " are disjoint");
    rec["disjoint_pair"] = {r.disjoint_pair->first, r.disjoint_pair->second};
    p.record(rec);
    return exit_no;
}

// `torus <id> r=<n> s=<n> a=<n> b=<n>`
inline std::vector<TorusCapCounts> parse_assembly(const std::string& text) {
    std::vector<TorusCapCounts> out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string s; ls >> s;) toks.push_back(s);
        if (toks.empty()) continue;
        if (toks[0] != "torus") throw Error(ErrorCode::Syntax, "unknown record '" + toks[0] + "'", line_no);
        if (toks.size() != 6) throw Error(ErrorCode::MissingField, "torus needs an id and r= s= a= b=", line_no);
        TorusCapCounts t;
        t.torus = toks[1];
        std::set<std::string> seen;
        for (std::size_t i = 2; i < 6; ++i) {
            const auto eq = toks[i].find('=');
            const std::string key = toks[i].substr(0, eq);
            if (eq == std::string::npos || !seen.insert(key).second)
                throw Error(ErrorCode::Syntax, "expected key=value, got '" + toks[i] + "'", line_no);
            const std::string val = toks[i].substr(eq + 1);
            if (val.empty() || val.size() > 30 ||
                !std::all_of(val.begin(), val.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
                throw Error(ErrorCode::NotInteger, "'" + val + "' is not a non-negative integer", line_no);
            const Integer x(val);
            if (key == "r") t.r = x;
            else if (key == "s") t.s = x;
            else if (key == "a") t.a = x;
            else if (key == "b") t.b = x;
            else throw Error(ErrorCode::UnknownKey, "unknown key '" + key + "'", line_no);
        }
        out.push_back(std::move(t));
    }
    return out;
}

inline int cmd_assembly(Printer& p, const std::string& path) {
    const AssemblyPlan plan = plan_surface_assembly(parse_assembly(read_file(path)));
    p.line("core copies: " + plan.core_copies.str());
    json caps = json::array();
    for (const auto& c : plan.caps) {
        p.line("torus " + c.torus + ": " + c.alpha_caps.str() + " alpha-caps, " + c.beta_caps.str() + " beta-caps");
        caps.push_back({{"torus", c.torus}, {"alpha_caps", c.alpha_caps.str()}, {"beta_caps", c.beta_caps.str()}});
    }
    p.record({{"kind", "assembly-plan"}, {"core_copies", plan.core_copies.str()}, {"caps", caps}});
    return exit_yes;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"virtually compact special checks for 3-manifold groups and cube complexes", "vcs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::uint64_t seed = 1;
    app.add_flag("--json", as_json, "one JSON record per verdict");
    app.add_option("--seed", seed, "seed for randomized inputs");

    std::string path;
    std::string block;
    bool per_torus = false;
    std::size_t budget = default_orientation_budget;
    std::vector<std::string> slopes;
    int window = 1;

    auto manifold_cmd = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("file", path, "manifold description")->required();
        return c;
    };
    auto* validate_c = manifold_cmd("validate", "parse and validate a manifold description");
    auto* classify_c = manifold_cmd("classify", "decide virtual compact specialness");
    classify_c->add_flag("--per-torus", per_torus, "count a self-glued torus once");
    auto* chargeless_c = manifold_cmd("chargeless", "chargeless test for interior Seifert blocks");
    chargeless_c->add_option("--block", block, "only this block");
    chargeless_c->add_flag("--per-torus", per_torus, "count a self-glued torus once");
    auto* homology_c = manifold_cmd("homology", "first homology of Seifert blocks");
    homology_c->add_option("--block", block, "only this block");
    auto* euler_c = manifold_cmd("euler", "Euler numbers of closed or filled Seifert blocks");
    euler_c->add_option("--block", block, "only this block");
    auto* dual_c = app.add_subcommand("dual-cube", "dual cube complex of a wallspace");
    dual_c->add_option("file", path, "wallspace description")->required();
    dual_c->add_option("--budget", budget, "maximum number of vertices");
    auto* special_c = app.add_subcommand("special-check", "hyperplane pathologies of a cube complex");
    special_c->add_option("file", path, "cube complex description")->required();
    auto* torus_c = app.add_subcommand("torus-walls", "line wallspace on the cover of a torus");
    torus_c->add_option("--slope", slopes, "slope p,q (repeatable)")->required()->allow_extra_args(false);
    torus_c->add_option("--window", window, "lines with offsets -W..W")->check(CLI::Range(1, 50));
    auto* helly_c = app.add_subcommand("helly-demo", "common vertex of pairwise intersecting subtrees");
    helly_c->add_option("file", path, "tree description; random instance from --seed when omitted");
    auto* assembly_c = app.add_subcommand("assembly-plan", "copies of core surface and caps");
    assembly_c->add_option("file", path, "torus curve counts")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_yes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_yes;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_input;
    }

    detail::Printer p(out, as_json);
    ChargeOptions opts;
    if (per_torus) opts.self_gluing = SelfGluing::PerTorus;
    try {
        if (*validate_c) return detail::cmd_validate(p, path);
        if (*classify_c) return detail::cmd_classify(p, path, opts);
        if (*chargeless_c) return detail::cmd_chargeless(p, path, block, opts);
        if (*homology_c) return detail::cmd_homology(p, path, block);
        if (*euler_c) return detail::cmd_euler(p, path, block);
        if (*dual_c) return detail::cmd_dual_cube(p, path, budget);
        if (*special_c) return detail::cmd_special_check(p, path);
        if (*torus_c) return detail::cmd_torus_walls(p, slopes, window);
        if (*helly_c) return detail::cmd_helly(p, path, seed);
        if (*assembly_c) return detail::cmd_assembly(p, path);
    } catch (const Error& e) {
        err << "error";
        if (!path.empty()) err << ": " << path;
        if (e.line() != 0) err << ":" << e.line();
        if (e.column() != 0) err << ":" << e.column();
        err << ": [" << error_code_name(e.code()) << "] " << e.what() << "\n";
        if (as_json)
            out << json{{"kind", "error"}, {"code", std::string(error_code_name(e.code()))}, {"line", e.line()},
                        {"column", e.column()}, {"message", e.what()}}
                       .dump()
                << "\n";
        return exit_input;
    }
    err << "usage error: no command\n";
    return exit_input;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace vcs::cli
