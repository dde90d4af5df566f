#include "srkit/io.hpp"

#include <charconv>
#include <limits>

#include "srkit/errors.hpp"

namespace srkit {

namespace {

struct Line {
    std::string_view text;
    int number = 0;
};

std::vector<Line> split_lines(std::string_view text, int first_line = 1)
{
    std::vector<Line> lines;
    int number = first_line;
    while (!text.empty()) {
        const std::size_t end = text.find('\n');
        std::string_view line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back({line, number++});
        if (end == std::string_view::npos)
            break;
        text.remove_prefix(end + 1);
    }
    return lines;
}

struct Token {
    std::string_view text;
    int column = 0;
};

// Whitespace-separated tokens before any '#'.
std::vector<Token> tokenize(std::string_view line)
{
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        if (i > start)
            tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

int parse_int(const Token& token, int line)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
    if (ec != std::errc{} || ptr != token.text.data() + token.text.size())
        throw ParseError("expected an integer, found '" + std::string(token.text) + "'", line, token.column);
    return value;
}

SimplicialComplex parse_src_lines(const std::vector<Line>& lines)
{
    std::optional<int> n;
    std::vector<VertexSet> facets;
    int last_line = lines.empty() ? 1 : lines.back().number;
    for (const Line& line : lines) {
        const std::vector<Token> tokens = tokenize(line.text);
        if (tokens.empty())
            continue;
        if (!n) {
            if (tokens[0].text != "n")
                throw ParseError("expected header 'n <int>'", line.number, tokens[0].column);
            if (tokens.size() != 2)
                throw ParseError("header must be exactly 'n <int>'", line.number,
                                 tokens.size() < 2 ? static_cast<int>(line.text.size()) + 1 : tokens[2].column);
            const int value = parse_int(tokens[1], line.number);
            if (value < 0 || value > kMaxVertices)
                throw ParseError("vertex count must lie in 0..64", line.number, tokens[1].column);
            n = value;
            continue;
        }
        if (tokens.size() == 1 && tokens[0].text == "{}") {
            facets.push_back(VertexSet{});
            continue;
        }
        VertexSet face;
        for (const Token& t : tokens) {
            const int v = parse_int(t, line.number);
            if (v < 1 || v > *n)
                throw ParseError("vertex " + std::to_string(v) + " outside [1," + std::to_string(*n) + "]",
                                 line.number, t.column);
            face = face.with(v);
        }
        facets.push_back(face);
    }
    if (!n)
        throw ParseError("missing header 'n <int>'", last_line, 1);
    if (facets.empty())
        throw ParseError("no facets given (use '{}' for the complex {∅})", last_line, 1);
    return SimplicialComplex::from_facets(*n, facets);
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte)
{
    int line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

} // namespace

SimplicialComplex parse_src(std::string_view text)
{
    const std::vector<SimplicialComplex> docs = parse_src_documents(text);
    if (docs.size() != 1)
        throw ParseError("expected a single complex, found " + std::to_string(docs.size()), 1, 1);
    return docs.front();
}

std::vector<SimplicialComplex> parse_src_documents(std::string_view text)
{
    std::vector<SimplicialComplex> out;
    std::vector<Line> current;
    bool has_content = false;
    for (const Line& line : split_lines(text)) {
        if (line.text == "---") {
            if (has_content)
                out.push_back(parse_src_lines(current));
            current.clear();
            has_content = false;
            continue;
        }
        if (!tokenize(line.text).empty())
            has_content = true;
        current.push_back(line);
    }
    if (has_content)
        out.push_back(parse_src_lines(current));
    if (out.empty())
        throw ParseError("empty input", 1, 1);
    return out;
}

std::string to_src(const SimplicialComplex& complex)
{
    std::string out = "n " + std::to_string(complex.vertex_count()) + "\n";
    for (VertexSet f : complex.facets()) {
        if (f.empty()) {
            out += "{}\n";
            continue;
        }
        const std::vector<int> verts = f.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i)
            out += (i ? " " : "") + std::to_string(verts[i]);
        out += "\n";
    }
    return out;
}

std::string to_src_documents(std::span<const SimplicialComplex> complexes)
{
    std::string out;
    for (std::size_t i = 0; i < complexes.size(); ++i) {
        if (i > 0)
            out += "---\n";
        out += to_src(complexes[i]);
    }
    return out;
}

nlohmann::json complex_to_json(const SimplicialComplex& complex)
{
    nlohmann::json facets = nlohmann::json::array();
    for (VertexSet f : complex.facets())
        facets.push_back(f.vertices());
    return {{"n", complex.vertex_count()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const nlohmann::json& value)
{
    if (!value.is_object() || !value.contains("n") || !value.contains("facets"))
        throw ParseError("JSON complex needs keys \"n\" and \"facets\"", 1, 1);
    if (!value["n"].is_number_integer())
        throw ParseError("\"n\" must be an integer", 1, 1);
    const auto n = value["n"].get<std::int64_t>();
    if (n < 0 || n > kMaxVertices)
        throw ParseError("vertex count must lie in 0..64", 1, 1);
    if (!value["facets"].is_array() || value["facets"].empty())
        throw ParseError("\"facets\" must be a nonempty array", 1, 1);
    std::vector<VertexSet> facets;
    for (const auto& f : value["facets"]) {
        if (!f.is_array())
            throw ParseError("each facet must be an array of vertices", 1, 1);
        VertexSet face;
        for (const auto& v : f) {
            if (!v.is_number_integer())
                throw ParseError("vertex indices must be integers", 1, 1);
            const auto x = v.get<std::int64_t>();
            if (x < 1 || x > n)
                throw ParseError("vertex " + std::to_string(x) + " outside [1," + std::to_string(n) + "]", 1, 1);
            face = face.with(static_cast<int>(x));
        }
        facets.push_back(face);
    }
    return SimplicialComplex::from_facets(static_cast<int>(n), facets);
}

SimplicialComplex parse_json_complex(std::string_view text)
{
    nlohmann::json value;
    try {
        value = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("malformed JSON: ") + e.what(), line, column);
    }
    return complex_from_json(value);
}

SimplicialComplex parse_complex(std::string_view text)
{
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_json_complex(text);
    return parse_src(text);
}

SimplicialComplex parse_inline_facets(std::string_view text, std::optional<int> n)
{
    std::vector<std::vector<int>> facets;
    int max_vertex = 0;
    int column = 1;
    while (true) {
        const std::size_t semi = text.find(';');
        const std::string_view part = text.substr(0, semi);
        std::vector<int> face;
        for (const Token& t : tokenize(part)) {
            if (t.text == "{}")
                continue;
            const int v = parse_int({t.text, column + t.column - 1}, 1);
            if (v < 1)
                throw ParseError("vertex indices start at 1", 1, column + t.column - 1);
            max_vertex = std::max(max_vertex, v);
            face.push_back(v);
        }
        if (!tokenize(part).empty())
            facets.push_back(std::move(face));
        if (semi == std::string_view::npos)
            break;
        column += static_cast<int>(semi) + 1;
        text.remove_prefix(semi + 1);
    }
    if (facets.empty())
        throw ParseError("no facets given", 1, 1);
    const int ambient = n.value_or(max_vertex);
    if (ambient > kMaxVertices)
        throw ParseError("vertex count must lie in 0..64", 1, 1);
    if (max_vertex > ambient)
        throw ParseError("vertex " + std::to_string(max_vertex) + " outside [1," + std::to_string(ambient) + "]", 1, 1);
    std::vector<VertexSet> sets;
    for (const auto& f : facets)
        sets.push_back(VertexSet::of(f));
    return SimplicialComplex::from_facets(ambient, sets);
}

std::string degree_text(int degree)
{
    return degree == kInfiniteDegree ? "inf" : std::to_string(degree);
}

namespace {

nlohmann::json degree_json(int degree)
{
    if (degree == kInfiniteDegree)
        return "inf";
    return degree;
}

} // namespace

nlohmann::json invariants_to_json(const InvariantSummary& s)
{
    return {{"n", s.n},
            {"dim_ring", s.dim_ring},
            {"codim", s.codim},
            {"multiplicity", s.multiplicity},
            {"f_vector", s.f_vector},
            {"pure", s.is_pure},
            {"indeg", degree_json(s.indeg)},
            {"rt", degree_json(s.rt)},
            {"mu", s.mu},
            {"bight", s.bight},
            {"vertex_full", s.vertex_full}};
}

nlohmann::json homology_to_json(const HomologyProfile& profile)
{
    nlohmann::json dims = nlohmann::json::object();
    for (int i = -1; i <= profile.top_index(); ++i)
        dims[std::to_string(i)] = profile.at(i);
    return {{"field", profile.field.name()}, {"reduced_betti", dims}};
}

nlohmann::json betti_to_json(const BettiTable& table)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, value] : table.entries())
        entries.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
    return {{"field", table.field().name()},
            {"entries", entries},
            {"regularity", table.regularity()},
            {"indeg", degree_json(table.indeg())},
            {"rt", degree_json(table.rt())},
            {"projective_dimension", table.projective_dimension()}};
}

nlohmann::json ring_status_to_json(const RingStatus& status)
{
    nlohmann::json out = {{"field", status.field.name()},
                          {"cohen_macaulay", status.is_cm},
                          {"buchsbaum", status.is_buchsbaum},
                          {"hypersurface", status.is_hypersurface}};
    if (status.failing_witness)
        out["witness"] = {{"face", status.failing_witness->face.vertices()}, {"index", status.failing_witness->index}};
    if (status.d2_connected)
        out["connected"] = *status.d2_connected;
    return out;
}

} // namespace srkit
