#pragma once

// Line-oriented manifold description format.
//
//   block <id> seifert genus=<g> boundaries=<p> exceptional=(a1,b1)(a2,b2)... b=<int> [thin]
//   block <id> hyperbolic boundaries=<p> [frame<i>=(p,q)|(p,q)]...
//   torus <id> <blockA>.<i> <blockB>.<j> glue=<m00>,<m01>,<m10>,<m11>
//   boundary <block>.<i>
//   geometry <label>
//
// '#' starts a comment. The glue matrix maps blockA.i coordinates to
// blockB.j coordinates.

#include "vcs/error.hpp"
#include "vcs/manifold_model.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace vcs {

namespace detail {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != '#' && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({std::string(line.substr(i, j - i)), i + 1});
        i = j;
    }
    return out;
}

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

inline bool looks_integer(std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

/// Cursor over the value part of a key=value token; errors point at the
/// offending column.
class ValueReader {
public:
    ValueReader(std::string_view text, std::size_t line, std::size_t column)
        : text_(text), line_(line), column_(column) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    void expect(char c) {
        if (peek() != c)
            throw Error(ErrorCode::Syntax, std::string("expected '") + c + "'", line_, column_ + pos_);
        ++pos_;
    }

    Integer integer() {
        const std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::size_t end = pos_;
        // swallow junk up to the next delimiter so the error names the whole token
        while (!done() && peek() != ',' && peek() != ')' && peek() != '|' && peek() != '(') ++pos_;
        const std::string_view tok = text_.substr(start, pos_ - start);
        if (end != pos_ || !looks_integer(tok))
            throw Error(ErrorCode::NotInteger, "expected an integer, got '" + std::string(tok) + "'", line_,
                        column_ + start);
        std::string digits(tok);
        if (digits[0] == '+') digits.erase(0, 1);
        return Integer(digits);
    }

    std::size_t count() {
        const std::size_t col = column_ + pos_;
        Integer v = integer();
        if (v < 0) throw Error(ErrorCode::NotInteger, "expected a non-negative count", line_, col);
        if (v > 1000000) throw Error(ErrorCode::NotInteger, "count too large", line_, col);
        return static_cast<std::size_t>(v);
    }

    std::pair<Integer, Integer> pair() {
        expect('(');
        Integer a = integer();
        expect(',');
        Integer b = integer();
        expect(')');
        return {std::move(a), std::move(b)};
    }

    void finish() {
        if (!done())
            throw Error(ErrorCode::Syntax, "unexpected trailing text '" + std::string(text_.substr(pos_)) + "'",
                        line_, column_ + pos_);
    }

    std::size_t column() const { return column_ + pos_; }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t column_;
    std::size_t pos_ = 0;
};

struct KeyValue {
    std::string key;
    std::string value;
    std::size_t key_column;
    std::size_t value_column;
};

inline KeyValue split_key_value(const Token& t, std::size_t line) {
    const auto eq = t.text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw Error(ErrorCode::Syntax, "expected key=value, got '" + t.text + "'", line, t.column);
    return {t.text.substr(0, eq), t.text.substr(eq + 1), t.column, t.column + eq + 1};
}

inline TorusEnd parse_end(const Token& t, std::size_t line) {
    const auto dot = t.text.rfind('.');
    if (dot == std::string::npos || dot == 0)
        throw Error(ErrorCode::Syntax, "expected <block>.<index>, got '" + t.text + "'", line, t.column);
    const std::string block = t.text.substr(0, dot);
    if (!is_identifier(block))
        throw Error(ErrorCode::Syntax, "bad block identifier '" + block + "'", line, t.column);
    ValueReader r(std::string_view(t.text).substr(dot + 1), line, t.column + dot + 1);
    const std::size_t idx = r.count();
    r.finish();
    return TorusEnd{block, idx};
}

struct SourceRecord {
    enum class Kind { Torus, Boundary } kind;
    std::size_t line;
    std::size_t index;  // into jsj_tori or boundary_tori
};

}  // namespace detail

/// Parses a manifold description. Throws vcs::Error carrying the line and
/// column of the first problem; the result always passes validate().
inline ManifoldGraph parse_manifold(std::string_view text) {
    using namespace detail;
    ManifoldGraph m;
    std::map<std::string, std::size_t> block_line;
    std::vector<SourceRecord> records;
    std::size_t geometry_line = 0;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        start = nl + 1;
        ++line_no;

        const auto toks = tokenize_line(line);
        if (toks.empty()) {
            if (nl == text.size()) break;
            continue;
        }
        const std::string& kw = toks[0].text;

        if (kw == "block") {
            if (toks.size() < 3) throw Error(ErrorCode::MissingField, "block needs an id and a type", line_no, toks[0].column);
            const std::string& id = toks[1].text;
            if (!is_identifier(id)) throw Error(ErrorCode::Syntax, "bad block identifier '" + id + "'", line_no, toks[1].column);
            if (m.blocks.contains(id))
                throw Error(ErrorCode::InvalidManifold, "block '" + id + "' declared twice", line_no, toks[1].column);
            const std::string& type = toks[2].text;

            if (type == "seifert") {
                SeifertBlockData s;
                std::set<std::string> seen;
                for (std::size_t i = 3; i < toks.size(); ++i) {
                    if (toks[i].text == "thin") {
                        if (!seen.insert("thin").second)
                            throw Error(ErrorCode::Syntax, "repeated flag 'thin'", line_no, toks[i].column);
                        s.is_thin = true;
                        continue;
                    }
                    const KeyValue kv = split_key_value(toks[i], line_no);
                    if (!seen.insert(kv.key).second)
                        throw Error(ErrorCode::Syntax, "repeated key '" + kv.key + "'", line_no, kv.key_column);
                    ValueReader r(kv.value, line_no, kv.value_column);
                    if (kv.key == "genus") {
                        s.genus = r.count();
                    } else if (kv.key == "boundaries") {
                        s.num_boundary = r.count();
                    } else if (kv.key == "exceptional") {
                        while (!r.done()) {
                            auto [a, b] = r.pair();
                            s.exceptional.push_back({std::move(a), std::move(b)});
                        }
                    } else if (kv.key == "b") {
                        s.section_obstruction = r.integer();
                    } else {
                        throw Error(ErrorCode::UnknownKey, "unknown key '" + kv.key + "' for seifert block", line_no,
                                    kv.key_column);
                    }
                    r.finish();
                }
                for (const char* key : {"genus", "boundaries", "exceptional", "b"})
                    if (!seen.contains(key))
                        throw Error(ErrorCode::MissingField, std::string("seifert block missing '") + key + "='",
                                    line_no, toks[0].column);
                m.blocks.emplace(id, std::move(s));
            } else if (type == "hyperbolic") {
                HyperbolicBlockData h;
                bool have_boundaries = false;
                for (std::size_t i = 3; i < toks.size(); ++i) {
                    const KeyValue kv = split_key_value(toks[i], line_no);
                    ValueReader r(kv.value, line_no, kv.value_column);
                    if (kv.key == "boundaries") {
                        if (have_boundaries)
                            throw Error(ErrorCode::Syntax, "repeated key 'boundaries'", line_no, kv.key_column);
                        have_boundaries = true;
                        h.num_boundary = r.count();
                    } else if (kv.key.rfind("frame", 0) == 0 && kv.key.size() > 5) {
                        ValueReader ir(std::string_view(kv.key).substr(5), line_no, kv.key_column + 5);
                        const std::size_t idx = ir.count();
                        ir.finish();
                        auto [p1, q1] = r.pair();
                        r.expect('|');
                        auto [p2, q2] = r.pair();
                        Slope c, d;
                        try {
                            c = slope_normalize(p1, q1);
                            d = slope_normalize(p2, q2);
                        } catch (const Error& e) {
                            throw Error(e.code(), e.what(), line_no, kv.value_column);
                        }
                        if (!h.framing.emplace(idx, std::make_pair(c, d)).second)
                            throw Error(ErrorCode::Syntax, "repeated frame for boundary " + std::to_string(idx),
                                        line_no, kv.key_column);
                    } else {
                        throw Error(ErrorCode::UnknownKey, "unknown key '" + kv.key + "' for hyperbolic block",
                                    line_no, kv.key_column);
                    }
                    r.finish();
                }
                if (!have_boundaries)
                    throw Error(ErrorCode::MissingField, "hyperbolic block missing 'boundaries='", line_no, toks[0].column);
                m.blocks.emplace(id, std::move(h));
            } else {
                throw Error(ErrorCode::Syntax, "unknown block type '" + type + "'", line_no, toks[2].column);
            }
            block_line[id] = line_no;
        } else if (kw == "torus") {
            if (toks.size() < 5) throw Error(ErrorCode::MissingField, "torus needs id, two ends and glue=", line_no, toks[0].column);
            if (toks.size() > 5) throw Error(ErrorCode::Syntax, "unexpected token '" + toks[5].text + "'", line_no, toks[5].column);
            if (!is_identifier(toks[1].text))
                throw Error(ErrorCode::Syntax, "bad torus identifier '" + toks[1].text + "'", line_no, toks[1].column);
            JsjTorus t;
            t.id = toks[1].text;
            t.end_a = parse_end(toks[2], line_no);
            t.end_b = parse_end(toks[3], line_no);
            const KeyValue kv = split_key_value(toks[4], line_no);
            if (kv.key != "glue")
                throw Error(ErrorCode::UnknownKey, "unknown key '" + kv.key + "' for torus", line_no, kv.key_column);
            ValueReader r(kv.value, line_no, kv.value_column);
            std::array<Integer, 4> e;
            for (std::size_t i = 0; i < 4; ++i) {
                if (i) r.expect(',');
                e[i] = r.integer();
            }
            r.finish();
            t.glue = GluingMatrix{e};
            if (!t.glue.is_unimodular())
                throw Error(ErrorCode::Determinant,
                            "gluing matrix of torus " + t.id + " has determinant " + t.glue.determinant().str(),
                            line_no, kv.value_column);
            if (m.torus(t.id))
                throw Error(ErrorCode::InvalidManifold, "torus '" + t.id + "' declared twice", line_no, toks[1].column);
            records.push_back({SourceRecord::Kind::Torus, line_no, m.jsj_tori.size()});
            m.jsj_tori.push_back(std::move(t));
        } else if (kw == "boundary") {
            if (toks.size() != 2)
                throw Error(toks.size() < 2 ? ErrorCode::MissingField : ErrorCode::Syntax,
                            "boundary takes exactly one <block>.<index>", line_no, toks[0].column);
            records.push_back({SourceRecord::Kind::Boundary, line_no, m.boundary_tori.size()});
            m.boundary_tori.push_back(parse_end(toks[1], line_no));
        } else if (kw == "geometry") {
            if (toks.size() != 2)
                throw Error(toks.size() < 2 ? ErrorCode::MissingField : ErrorCode::Syntax,
                            "geometry takes exactly one label", line_no, toks[0].column);
            if (m.geometry_label)
                throw Error(ErrorCode::Syntax, "geometry declared twice", line_no, toks[0].column);
            auto g = parse_geometry(toks[1].text);
            if (!g) throw Error(ErrorCode::Syntax, "unknown geometry label '" + toks[1].text + "'", line_no, toks[1].column);
            m.geometry_label = *g;
            geometry_line = line_no;
        } else {
            throw Error(ErrorCode::Syntax, "unknown record '" + kw + "'", line_no, toks[0].column);
        }
        if (nl == text.size()) break;
    }

    // Reference checks in file order.
    std::set<TorusEnd> used;
    auto check_end = [&](const TorusEnd& e, std::size_t line) {
        auto it = m.blocks.find(e.block);
        if (it == m.blocks.end()) throw Error(ErrorCode::UnknownBlock, "unknown block '" + e.block + "'", line);
        if (e.boundary_index >= boundary_count(it->second))
            throw Error(ErrorCode::IndexOutOfRange, "block " + e.block + " has no boundary torus " +
                                                        std::to_string(e.boundary_index), line);
        if (!used.insert(e).second) throw Error(ErrorCode::RepeatedEnd, "end " + to_string(e) + " used twice", line);
    };
    for (const auto& rec : records) {
        if (rec.kind == SourceRecord::Kind::Torus) {
            check_end(m.jsj_tori[rec.index].end_a, rec.line);
            check_end(m.jsj_tori[rec.index].end_b, rec.line);
        } else {
            check_end(m.boundary_tori[rec.index], rec.line);
        }
    }
    if (m.geometry_label && (!m.jsj_tori.empty() || m.blocks.size() != 1))
        throw Error(ErrorCode::GeometryWithTori, "geometry is only allowed for a single block with no JSJ tori",
                    geometry_line);

    // Anything else validate() finds is attributed to the block that caused it.
    const ValidationReport rep = validate(m);
    if (!rep.ok()) {
        const auto& issue = rep.issues.front();
        const auto it = block_line.find(issue.block);
        throw Error(issue.code, issue.message, it == block_line.end() ? 0 : it->second);
    }
    return m;
}

inline std::string serialize_manifold(const ManifoldGraph& m) {
    std::ostringstream os;
    for (const auto& [id, data] : m.blocks) {
        if (const auto* s = std::get_if<SeifertBlockData>(&data)) {
            os << "block " << id << " seifert genus=" << s->genus << " boundaries=" << s->num_boundary
               << " exceptional=";
            for (const auto& f : s->exceptional) os << "(" << f.a << "," << f.b << ")";
            os << " b=" << s->section_obstruction;
            if (s->is_thin) os << " thin";
        } else {
            const auto& h = std::get<HyperbolicBlockData>(data);
            os << "block " << id << " hyperbolic boundaries=" << h.num_boundary;
            for (const auto& [idx, f] : h.framing)
                os << " frame" << idx << "=" << to_string(f.first) << "|" << to_string(f.second);
        }
        os << "\n";
    }
    for (const auto& t : m.jsj_tori)
        os << "torus " << t.id << " " << to_string(t.end_a) << " " << to_string(t.end_b) << " glue="
           << t.glue.entries[0] << "," << t.glue.entries[1] << "," << t.glue.entries[2] << "," << t.glue.entries[3]
           << "\n";
    for (const auto& e : m.boundary_tori) os << "boundary " << to_string(e) << "\n";
    if (m.geometry_label) os << "geometry " << geometry_name(*m.geometry_label) << "\n";
    return os.str();
}

}  // namespace vcs
