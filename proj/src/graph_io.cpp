#include "clusterfit/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace cfit {

namespace {

struct Tokenizer {
    std::string_view rest;

    std::optional<std::string_view> next() {
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) {
            rest.remove_prefix(1);
        }
        if (rest.empty()) {
            return std::nullopt;
        }
        std::size_t end = 0;
        while (end < rest.size() && rest[end] != ' ' && rest[end] != '\t') {
            ++end;
        }
        auto token = rest.substr(0, end);
        rest.remove_prefix(end);
        return token;
    }
};

long long parse_number(std::string_view token, int line, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

Graph parse_graph(std::string_view text) {
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> seen;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }

        Tokenizer tok{line};
        auto first = tok.next();
        if (!first || first->front() == '#') {
            continue;
        }
        if (*first == "p") {
            if (have_header) {
                throw ParseError(line_no, "duplicate header");
            }
            auto n_tok = tok.next();
            auto m_tok = tok.next();
            if (!n_tok || !m_tok || tok.next()) {
                throw ParseError(line_no, "header must be 'p <n> <m>'");
            }
            n = parse_number(*n_tok, line_no, "vertex count");
            m = parse_number(*m_tok, line_no, "edge count");
            if (n < 0 || m < 0) {
                throw ParseError(line_no, "header counts must be non-negative");
            }
            have_header = true;
            seen.assign(static_cast<std::size_t>(n), {});
        } else if (*first == "e") {
            if (!have_header) {
                throw ParseError(line_no, "edge line before header");
            }
            auto u_tok = tok.next();
            auto v_tok = tok.next();
            if (!u_tok || !v_tok || tok.next()) {
                throw ParseError(line_no, "edge line must be 'e <u> <v>'");
            }
            long long u = parse_number(*u_tok, line_no, "vertex id");
            long long v = parse_number(*v_tok, line_no, "vertex id");
            if (u < 0 || u >= n || v < 0 || v >= n) {
                throw ParseError(line_no, "vertex id out of range [0," + std::to_string(n) + ")");
            }
            if (u == v) {
                throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            }
            if (u > v) {
                std::swap(u, v);
            }
            auto& row = seen[static_cast<std::size_t>(u)];
            if (row.empty()) {
                row.assign(static_cast<std::size_t>(n), false);
            }
            if (row[static_cast<std::size_t>(v)]) {
                throw ParseError(line_no, "duplicate edge {" + std::to_string(u) + "," +
                                              std::to_string(v) + "}");
            }
            row[static_cast<std::size_t>(v)] = true;
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            if (static_cast<long long>(edges.size()) > m) {
                throw ParseError(line_no, "more edge lines than the declared " + std::to_string(m));
            }
        } else {
            throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
        }
    }

    if (!have_header) {
        throw ParseError(0, "missing 'p <n> <m>' header");
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(0, "declared " + std::to_string(m) + " edges but found " +
                                std::to_string(edges.size()));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << "e " << u << ' ' << v << '\n';
    }
    return out.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << write_graph(g);
}

}  // namespace cfit
