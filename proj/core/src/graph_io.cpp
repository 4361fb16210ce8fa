#include "rgd/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "rgd/errors.hpp"

namespace rgd {

namespace {

constexpr std::string_view k_graph6_header = ">>graph6<<";

long long read_size_bytes(std::string_view& s, int count) {
    if (std::cmp_less(s.size(), count)) fail(errc::parse_error, "graph6 record truncated");
    long long v = 0;
    for (int i = 0; i < count; ++i) {
        unsigned char c = static_cast<unsigned char>(s[static_cast<std::size_t>(i)]);
        if (c < 63 || c > 126) fail(errc::parse_error, "graph6 byte out of range");
        v = (v << 6) | (c - 63);
    }
    s.remove_prefix(static_cast<std::size_t>(count));
    return v;
}

std::string_view strip_line(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    return line;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
    std::string_view s = strip_line(record);
    if (s.substr(0, k_graph6_header.size()) == k_graph6_header)
        s.remove_prefix(k_graph6_header.size());
    if (s.empty()) fail(errc::parse_error, "empty graph6 record");

    long long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126) {
            s.remove_prefix(2);
            n = read_size_bytes(s, 6);
        } else {
            s.remove_prefix(1);
            n = read_size_bytes(s, 3);
        }
    } else {
        n = read_size_bytes(s, 1);
    }
    if (n > 2'000'000) fail(errc::parse_error, "graph6 order too large");

    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (std::cmp_not_equal(s.size(), bytes))
        fail(errc::parse_error, "graph6 record has wrong length");

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char c = static_cast<unsigned char>(s[static_cast<std::size_t>(bit / 6)]);
            if (c < 63 || c > 126) fail(errc::parse_error, "graph6 byte out of range");
            if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    if (bit % 6) {
        unsigned char c = static_cast<unsigned char>(s.back());
        if ((c - 63) & ((1 << (6 - bit % 6)) - 1))
            fail(errc::parse_error, "graph6 padding bits not zero");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const long long n = g.order();
    std::string s;
    auto put_size = [&](long long v, int count) {
        for (int i = count - 1; i >= 0; --i)
            s.push_back(static_cast<char>(63 + ((v >> (6 * i)) & 63)));
    };
    if (n <= 62) {
        put_size(n, 1);
    } else if (n <= 258047) {
        s.push_back(126);
        put_size(n, 3);
    } else {
        s.push_back(126);
        s.push_back(126);
        put_size(n, 6);
    }
    int fill = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++fill == 6) {
                s.push_back(static_cast<char>(63 + cur));
                fill = 0;
                cur = 0;
            }
        }
    if (fill) s.push_back(static_cast<char>(63 + (cur << (6 - fill))));
    return s;
}

std::vector<Graph> parse_graph6_file(std::string_view text) {
    std::vector<Graph> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = strip_line(text.substr(pos, end - pos));
        pos = end + 1;
        if (line.empty() || line == k_graph6_header) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    Graph g;
    bool have_order = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (!have_order) {
            int n;
            if (!(fields >> n)) {
                if (fields.eof()) continue;  // blank line before the header
                fail(errc::parse_error, "edge list: bad order line");
            }
            if (n < 0) fail(errc::parse_error, "edge list: negative order");
            std::string extra;
            if (fields >> extra) fail(errc::parse_error, "edge list: trailing text on order line");
            g = Graph(n);
            have_order = true;
            continue;
        }
        int u;
        int v;
        if (!(fields >> u)) continue;
        if (!(fields >> v)) fail(errc::parse_error, "edge list line " + std::to_string(lineno) + ": expected two vertices");
        std::string extra;
        if (fields >> extra)
            fail(errc::parse_error, "edge list line " + std::to_string(lineno) + ": trailing text");
        try {
            g.add_edge(u, v);
        } catch (const error& e) {
            fail(errc::parse_error, "edge list line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_order) fail(errc::parse_error, "edge list: missing order line");
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order());
    out.push_back('\n');
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

// graph_from_spec lives in graph_spec.cpp: it needs the random generator.

}  // namespace rgd
