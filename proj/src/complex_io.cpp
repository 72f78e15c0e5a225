#include "leray/complex_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "leray/errors.hpp"

namespace leray {

namespace {

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
    throw InputError(std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

struct Token {
    std::string text;
    int col = 0;  // 1-based
};

bool is_sep(char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; }

// Tokens of one line, comment already stripped.
std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (is_sep(line[i])) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !is_sep(line[i])) ++i;
        out.push_back({std::string(line.substr(start, i - start)),
                       static_cast<int>(start) + 1});
    }
    return out;
}

bool starts_labels_directive(std::string_view line, int* col) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    constexpr std::string_view kw = "#labels";
    if (line.substr(i, kw.size()) != kw) return false;
    std::size_t after = i + kw.size();
    if (after < line.size() && !is_sep(line[after])) return false;
    *col = static_cast<int>(i) + 1;
    return true;
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> id_of;
    bool have_directive = false;
    int directive_line = 0, directive_col = 0;
    std::vector<VertexSet> facets;

    auto vertex_id = [&](const Token& tok, int line_no) -> int {
        if (tok.text == "{}")
            fail_at(line_no, tok.col, "'{}' must stand alone on its line");
        auto it = id_of.find(tok.text);
        if (it != id_of.end()) return it->second;
        if (have_directive)
            fail_at(line_no, tok.col,
                    "unknown vertex label '" + tok.text + "' (not in #labels)");
        if (labels.size() >= static_cast<std::size_t>(VertexSet::kMaxVertices))
            fail_at(line_no, tok.col, "too many vertex labels (max 64)");
        int id = static_cast<int>(labels.size());
        labels.push_back(tok.text);
        id_of.emplace(tok.text, id);
        return id;
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, (nl == std::string_view::npos ? text.size() : nl) - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        int dcol = 0;
        if (starts_labels_directive(line, &dcol)) {
            if (have_directive)
                fail_at(line_no, dcol, "duplicate #labels directive");
            if (!facets.empty())
                fail_at(line_no, dcol, "#labels directive must come before the facets");
            have_directive = true;
            directive_line = line_no;
            directive_col = dcol;
            for (const Token& tok :
                 tokenize(line.substr(static_cast<std::size_t>(dcol) - 1 + 7))) {
                int col = dcol + 7 + tok.col - 1;
                if (tok.text == "{}") fail_at(line_no, col, "'{}' is not a valid label");
                if (id_of.count(tok.text))
                    fail_at(line_no, col, "duplicate label '" + tok.text + "'");
                if (labels.size() >= static_cast<std::size_t>(VertexSet::kMaxVertices))
                    fail_at(line_no, col, "too many vertex labels (max 64)");
                id_of.emplace(tok.text, static_cast<int>(labels.size()));
                labels.push_back(tok.text);
            }
            continue;
        }

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<Token> toks = tokenize(line);
        if (toks.empty()) continue;

        if (toks[0].text == "{}") {
            if (toks.size() > 1)
                fail_at(line_no, toks[1].col, "'{}' must stand alone on its line");
            facets.push_back(VertexSet{});
            continue;
        }
        VertexSet f;
        for (const Token& tok : toks) {
            int id = vertex_id(tok, line_no);
            if (f.contains(id))
                fail_at(line_no, tok.col, "duplicate vertex '" + tok.text + "' in facet");
            f = f.with(id);
        }
        facets.push_back(f);
    }

    if (facets.empty()) {
        if (have_directive)
            fail_at(directive_line, directive_col,
                    "#labels directive with no facets (the void complex has no vertices)");
        return SimplicialComplex::from_facets({}, {});
    }
    return SimplicialComplex::from_facets(std::move(facets), std::move(labels));
}

std::string print_complex(const SimplicialComplex& x) {
    if (x.is_void()) return "";
    std::ostringstream out;
    if (x.num_vertices() > 0) {
        out << "#labels";
        for (const std::string& l : x.labels()) out << ' ' << l;
        out << '\n';
    }
    for (VertexSet f : x.facets()) {
        if (f.empty()) {
            out << "{}\n";
            continue;
        }
        bool first = true;
        for (int v : f) {
            if (!first) out << ' ';
            first = false;
            out << x.label(v);
        }
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SimplicialComplex read_complex_file(const std::string& path) {
    std::string text = read_text_file(path);
    try {
        return parse_complex(text);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace leray
