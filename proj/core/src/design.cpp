#include "rgd/design.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "rgd/errors.hpp"

namespace rgd {

namespace {

std::size_t pair_id(int i, int j) {
    // Upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    return static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
}

std::string block_to_string(const Block& b) {
    std::string s = "{";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(b[i]);
    }
    return s + "}";
}

void require_design_graph(const Graph& g, int* delta_out = nullptr) {
    auto d = regularity(g);
    if (!d) fail(errc::not_regular, "graph is not regular");
    if (!girth_at_least(g, 5)) {
        auto got = girth(g);
        fail(errc::girth_too_small, "graph has girth " + std::to_string(got ? *got : 0) + ", need at least 5");
    }
    if (delta_out) *delta_out = *d;
}

// Distinct sorted copy of a block; used where duplicates inside a block
// must not distort pair counts.
Block distinct_points(const Block& b) {
    Block s = b;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

void canonicalize(Design& d) {
    for (auto& b : d.blocks) std::sort(b.begin(), b.end());
    std::sort(d.blocks.begin(), d.blocks.end());
}

DesignParams params(long long n, int delta) {
    if (n < 0 || delta < 0) fail(errc::bad_argument, "params needs n >= 0, delta >= 0");
    DesignParams p;
    p.k = delta + 1;
    if (delta == 0) {
        // K1 carries the empty design; nothing else qualifies.
        p.admissible = (n == 1);
        if (p.admissible) {
            p.b = 0;
            p.r = 0;
            p.remainder_count = 0;
        }
        return p;
    }
    const long long dd = static_cast<long long>(delta) * (delta + 1);
    if (n * (n + delta - 1) % dd == 0) p.b = n * (n + delta - 1) / dd;
    if ((n - 1) % delta == 0) p.r = (n - 1) / delta + 1;
    p.admissible = n >= static_cast<long long>(delta) * delta + 1 && p.b && p.r;
    if (p.admissible) p.remainder_count = n * (n - static_cast<long long>(delta) * delta - 1) / dd;
    return p;
}

std::vector<Block> neighborhood_blocks(const Graph& g) {
    require_design_graph(g);
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        Block b = g.neighbors(v);
        b.insert(std::lower_bound(b.begin(), b.end(), v), v);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

std::vector<std::pair<int, int>> remainder_pairs(const Graph& g) {
    require_design_graph(g);
    const int n = g.order();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) continue;
            const auto& ni = g.neighbors(i);
            const auto& nj = g.neighbors(j);
            bool common = std::ranges::any_of(
                ni, [&](int w) { return std::binary_search(nj.begin(), nj.end(), w); });
            if (!common) out.emplace_back(i, j);
        }
    return out;
}

std::string Violation::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::block_size:
            out << "block " << block_to_string(block) << ": " << observed
                << " distinct points, expected " << expected;
            break;
        case Kind::pair_undercovered:
        case Kind::pair_overcovered:
            out << "pair {" << pair.first << ", " << pair.second << "} covered " << observed
                << " times, expected " << expected;
            break;
        case Kind::replication:
            out << "point " << point << " in " << observed << " blocks, expected " << expected;
            break;
        case Kind::duplicate_block:
            out << "block " << block_to_string(block) << " occurs " << observed << " times";
            break;
        case Kind::group_partition:
            out << "point " << point << " lies in " << observed << " groups, expected " << expected;
            break;
        case Kind::within_group_pair:
            out << "pair {" << pair.first << ", " << pair.second << "} of block "
                << block_to_string(block) << " lies inside one group";
            break;
    }
    return out.str();
}

std::string VerificationReport::to_string() const {
    if (ok()) return "ok\n";
    std::string out;
    for (const auto& v : violations) {
        out += v.to_string();
        out.push_back('\n');
    }
    return out;
}

VerificationReport verify(const Design& d, const Graph& g) {
    if (d.n != g.order())
        fail(errc::dimension_mismatch, "design order " + std::to_string(d.n) +
                                           " does not match graph order " + std::to_string(g.order()));
    auto reg = regularity(g);
    if (!reg || *reg != d.delta)
        fail(errc::precondition_violated, "graph is not " + std::to_string(d.delta) + "-regular");

    VerificationReport report;
    const int n = d.n;
    const int k = d.delta + 1;
    std::vector<long long> cover(pair_id(0, n > 0 ? n : 1), 0);
    std::vector<long long> replication(static_cast<std::size_t>(n), 0);

    for (const auto& b : d.blocks) {
        for (int x : b)
            if (x < 0 || x >= n)
                fail(errc::bad_argument, "block point " + std::to_string(x) + " out of range");
        Block pts = distinct_points(b);
        if (std::cmp_not_equal(pts.size(), k) || pts.size() != b.size())
            report.violations.push_back({Violation::Kind::block_size, b, {-1, -1}, -1,
                                         static_cast<long long>(pts.size()), k});
        for (std::size_t a = 0; a < pts.size(); ++a) {
            ++replication[static_cast<std::size_t>(pts[a])];
            for (std::size_t c = a + 1; c < pts.size(); ++c) ++cover[pair_id(pts[a], pts[c])];
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long expected = g.adjacent(i, j) ? 2 : 1;
            long long got = cover[pair_id(i, j)];
            if (got == expected) continue;
            report.violations.push_back({got < expected ? Violation::Kind::pair_undercovered
                                                        : Violation::Kind::pair_overcovered,
                                         {}, {i, j}, -1, got, expected});
        }

    // Replication is forced: summing pair coverage at a point gives
    // (n - 1 + delta) / delta blocks through it. delta = 0 forces none.
    long long r = 0;
    if (d.delta > 0 && (n - 1) % d.delta == 0) r = (n - 1) / d.delta + 1;
    for (int v = 0; v < n; ++v)
        if (replication[static_cast<std::size_t>(v)] != r)
            report.violations.push_back({Violation::Kind::replication, {}, {-1, -1}, v,
                                         replication[static_cast<std::size_t>(v)], r});

    if (k >= 3) {
        std::vector<Block> sorted;
        sorted.reserve(d.blocks.size());
        for (const auto& b : d.blocks) {
            Block s = b;
            std::sort(s.begin(), s.end());
            sorted.push_back(std::move(s));
        }
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size();) {
            std::size_t j = i + 1;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            if (j - i > 1)
                report.violations.push_back({Violation::Kind::duplicate_block, sorted[i], {-1, -1},
                                             -1, static_cast<long long>(j - i), 1});
            i = j;
        }
    }
    return report;
}

PairTable::Class PairTable::at(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
        fail(errc::bad_argument, "pair out of range");
    if (i > j) std::swap(i, j);
    return classes[pair_id(i, j)];
}

PairTable pair_table(const Graph& g) {
    require_design_graph(g);
    PairTable t;
    t.n = g.order();
    t.classes.assign(pair_id(0, t.n > 0 ? t.n : 1), PairTable::Class::neighborhood);
    for (int j = 1; j < t.n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.adjacent(i, j)) t.classes[pair_id(i, j)] = PairTable::Class::edge;
    for (auto [i, j] : remainder_pairs(g)) t.classes[pair_id(i, j)] = PairTable::Class::remainder;
    return t;
}

namespace {
char vertex_label(int v) {
    if (v < 10) return static_cast<char>('0' + v);
    if (v < 36) return static_cast<char>('A' + v - 10);
    if (v < 62) return static_cast<char>('a' + v - 36);
    fail(errc::bad_argument, "pair table rendering supports at most 62 vertices");
}
}  // namespace

std::string render(const PairTable& t) {
    if (t.n > 62) fail(errc::bad_argument, "pair table rendering supports at most 62 vertices");
    std::string out;
    if (t.n < 2) return out;
    out.push_back(' ');
    for (int j = 1; j < t.n; ++j) {
        out.push_back(' ');
        out.push_back(vertex_label(j));
    }
    out.push_back('\n');
    for (int i = 0; i + 1 < t.n; ++i) {
        out.push_back(vertex_label(i));
        for (int j = 1; j < t.n; ++j) {
            if (j <= i) {
                out += "  ";
                continue;
            }
            out.push_back(' ');
            out.push_back(t.at(i, j) == PairTable::Class::remainder ? '-' : 'X');
        }
        out.push_back('\n');
    }
    return out;
}

Graph recover_graph(const Design& d) {
    if (d.n < 0) fail(errc::bad_argument, "negative design order");
    std::map<std::pair<int, int>, int> cover;
    for (const auto& b : d.blocks) {
        Block pts = distinct_points(b);
        for (std::size_t a = 0; a < pts.size(); ++a) {
            if (pts[a] < 0 || pts[a] >= d.n)
                fail(errc::bad_argument, "block point " + std::to_string(pts[a]) + " out of range");
            for (std::size_t c = a + 1; c < pts.size(); ++c) ++cover[{pts[a], pts[c]}];
        }
    }
    Graph g(d.n);
    for (const auto& [pair, count] : cover) {
        if (count > 2)
            fail(errc::recovery_failed, "pair {" + std::to_string(pair.first) + ", " +
                                            std::to_string(pair.second) + "} covered " +
                                            std::to_string(count) + " times");
        if (count == 2) g.add_edge(pair.first, pair.second);
    }
    auto reg = regularity(g);
    if (!reg || *reg != d.delta)
        fail(errc::recovery_failed, "doubled pairs do not form a " + std::to_string(d.delta) +
                                        "-regular graph");
    if (!girth_at_least(g, 5))
        fail(errc::recovery_failed, "recovered graph has girth below 5");
    if (!verify(d, g).ok())
        fail(errc::recovery_failed, "design does not verify against the recovered graph");
    return g;
}

std::pair<Design, Graph> trivial_design(int n, int delta) {
    if (delta == 0) {
        if (n != 1) fail(errc::bad_argument, "delta 0 admits only n = 1");
        return {Design{1, 0, {}}, Graph(1)};
    }
    if (delta != 1) fail(errc::bad_argument, "trivial designs cover delta 0 and 1 only");
    if (n < 2 || n % 2) fail(errc::bad_argument, "delta 1 needs even n >= 2");
    Graph g(n);
    Design d{n, 1, {}};
    for (int i = 0; i < n; i += 2) {
        g.add_edge(i, i + 1);
        d.blocks.push_back({i, i + 1});  // the matching, covered a second time below
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.blocks.push_back({i, j});
    canonicalize(d);
    return {std::move(d), std::move(g)};
}

std::string to_text(const Design& d) {
    Design c = d;
    canonicalize(c);
    std::string out = std::to_string(c.n) + " " + std::to_string(c.delta) + "\n";
    for (const auto& b : c.blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(b[i]);
        }
        out.push_back('\n');
    }
    return out;
}

Design design_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    Design d;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (!have_header) {
            if (!(fields >> d.n >> d.delta)) {
                if (fields.eof()) continue;
                fail(errc::parse_error, "design text: bad header line");
            }
            if (d.n < 0 || d.delta < 0) fail(errc::parse_error, "design text: negative header values");
            std::string extra;
            if (fields >> extra) fail(errc::parse_error, "design text: trailing text on header line");
            have_header = true;
            continue;
        }
        Block b;
        int x;
        while (fields >> x) {
            if (x < 0 || x >= d.n)
                fail(errc::parse_error, "design text: point " + std::to_string(x) + " out of range");
            b.push_back(x);
        }
        if (!fields.eof()) fail(errc::parse_error, "design text: bad block line");
        if (!b.empty()) d.blocks.push_back(std::move(b));
    }
    if (!have_header) fail(errc::parse_error, "design text: missing header line");
    canonicalize(d);
    return d;
}

std::string to_json(const Design& d) {
    Design c = d;
    canonicalize(c);
    nlohmann::json j{{"n", c.n}, {"delta", c.delta}, {"blocks", c.blocks}};
    return j.dump();
}

Design design_from_json(std::string_view text) {
    Design d;
    try {
        auto j = nlohmann::json::parse(text);
        d.n = j.at("n").get<int>();
        d.delta = j.at("delta").get<int>();
        d.blocks = j.at("blocks").get<std::vector<Block>>();
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("design JSON: ") + e.what());
    }
    if (d.n < 0 || d.delta < 0) fail(errc::parse_error, "design JSON: negative header values");
    for (const auto& b : d.blocks)
        for (int x : b)
            if (x < 0 || x >= d.n)
                fail(errc::parse_error, "design JSON: point " + std::to_string(x) + " out of range");
    canonicalize(d);
    return d;
}

}  // namespace rgd
