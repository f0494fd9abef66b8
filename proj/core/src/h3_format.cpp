#include "hypermatch/h3_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

namespace hypermatch {

ParseError::ParseError(std::size_t line_no, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}

std::string to_h3(const Hypergraph3& h) {
    std::string out = std::to_string(h.n()) + ' ' + std::to_string(h.num_edges()) + '\n';
    for (const Edge& e : h.edges()) {
        out += std::to_string(e[0]) + ' ' + std::to_string(e[1]) + ' ' + std::to_string(e[2]) + '\n';
    }
    return out;
}

void write_h3(std::ostream& os, const Hypergraph3& h) { os << to_h3(h); }

namespace {

std::vector<std::uint64_t> tokens_of(std::string_view line, std::size_t line_no) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{}) throw ParseError(line_no, "expected a non-negative integer");
        const auto next = static_cast<std::size_t>(ptr - line.data());
        if (next < line.size() && line[next] != ' ' && line[next] != '\t' && line[next] != '\r') {
            throw ParseError(line_no, "unexpected character '" + std::string(1, line[next]) + "'");
        }
        out.push_back(value);
        i = next;
    }
    return out;
}

}  // namespace

Hypergraph3 parse_h3(std::string_view text) {
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<std::array<Vertex, 3>> triples;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        const auto tok = tokens_of(line, line_no);
        if (tok.empty()) continue;
        if (!have_header) {
            if (tok.size() != 2) throw ParseError(line_no, "header must be \"n m\"");
            n = tok[0];
            m = tok[1];
            if (n > kMaxVertices) throw ParseError(line_no, "n exceeds 64");
            have_header = true;
            continue;
        }
        if (tok.size() != 3) throw ParseError(line_no, "edge line must hold three vertices");
        for (auto v : tok) {
            if (v >= n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
        }
        if (tok[0] == tok[1] || tok[0] == tok[2] || tok[1] == tok[2]) {
            throw ParseError(line_no, "edge has a repeated vertex");
        }
        triples.push_back({static_cast<Vertex>(tok[0]), static_cast<Vertex>(tok[1]), static_cast<Vertex>(tok[2])});
    }
    if (!have_header) throw ParseError(std::max<std::size_t>(line_no, 1), "missing header");
    if (triples.size() != m) {
        throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(triples.size()));
    }
    return Hypergraph3::build(n, triples);
}

Hypergraph3 read_h3(std::istream& is) {
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return parse_h3(text);
}

Hypergraph3 load_h3(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_h3(in);
}

void save_h3(const std::string& path, const Hypergraph3& h) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_h3(out, h);
}

}  // namespace hypermatch
