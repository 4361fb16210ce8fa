#include "rgd/gdd.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "rgd/errors.hpp"

namespace rgd {

int Gdd::point_count() const {
    std::size_t total = 0;
    for (const auto& g : groups) total += g.size();
    return static_cast<int>(total);
}

std::vector<std::pair<int, int>> Gdd::type_signature() const {
    std::map<int, int> sizes;
    for (const auto& g : groups) ++sizes[static_cast<int>(g.size())];
    return {sizes.begin(), sizes.end()};
}

VerificationReport verify_gdd(const Gdd& d) {
    VerificationReport report;
    const int n = d.point_count();
    std::vector<long long> group_of(static_cast<std::size_t>(n), -1);
    std::vector<long long> memberships(static_cast<std::size_t>(n), 0);
    for (std::size_t gi = 0; gi < d.groups.size(); ++gi)
        for (int x : d.groups[gi]) {
            if (x < 0 || x >= n)
                fail(errc::bad_argument, "group point " + std::to_string(x) + " out of range");
            if (group_of[static_cast<std::size_t>(x)] < 0)
                group_of[static_cast<std::size_t>(x)] = static_cast<long long>(gi);
            ++memberships[static_cast<std::size_t>(x)];
        }
    for (int x = 0; x < n; ++x)
        if (memberships[static_cast<std::size_t>(x)] != 1)
            report.violations.push_back({Violation::Kind::group_partition, {}, {-1, -1}, x,
                                         memberships[static_cast<std::size_t>(x)], 1});

    std::map<std::pair<int, int>, long long> cover;
    for (const auto& b : d.blocks) {
        Block pts = b;
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        for (int x : pts)
            if (x < 0 || x >= n)
                fail(errc::bad_argument, "block point " + std::to_string(x) + " out of range");
        if (std::cmp_not_equal(pts.size(), d.k) || pts.size() != b.size())
            report.violations.push_back({Violation::Kind::block_size, b, {-1, -1}, -1,
                                         static_cast<long long>(pts.size()), d.k});
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t c = a + 1; c < pts.size(); ++c) {
                if (group_of[static_cast<std::size_t>(pts[a])] ==
                    group_of[static_cast<std::size_t>(pts[c])]) {
                    report.violations.push_back({Violation::Kind::within_group_pair, b,
                                                 {pts[a], pts[c]}, -1, 1, 0});
                    continue;
                }
                ++cover[{pts[a], pts[c]}];
            }
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (group_of[static_cast<std::size_t>(i)] == group_of[static_cast<std::size_t>(j)])
                continue;  // cross-group pairs only; same-group use is flagged above
            auto it = cover.find({i, j});
            long long got = it == cover.end() ? 0 : it->second;
            if (got != 1)
                report.violations.push_back({got < 1 ? Violation::Kind::pair_undercovered
                                                     : Violation::Kind::pair_overcovered,
                                             {}, {i, j}, -1, got, 1});
        }
    return report;
}

Gdd gdd_g3(int g) {
    if (g < 1) fail(errc::bad_argument, "group size must be positive");
    Gdd d;
    d.k = 3;
    for (int gi = 0; gi < 3; ++gi) {
        std::vector<int> group(static_cast<std::size_t>(g));
        for (int i = 0; i < g; ++i) group[static_cast<std::size_t>(i)] = gi * g + i;
        d.groups.push_back(std::move(group));
    }
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) d.blocks.push_back({i, g + j, 2 * g + (i + j) % g});
    return d;
}

std::string to_json(const Gdd& d) {
    nlohmann::json j{{"k", d.k}, {"groups", d.groups}, {"blocks", d.blocks}};
    return j.dump();
}

Gdd gdd_from_json(std::string_view text) {
    Gdd d;
    try {
        auto j = nlohmann::json::parse(text);
        d.k = j.at("k").get<int>();
        d.groups = j.at("groups").get<std::vector<std::vector<int>>>();
        d.blocks = j.at("blocks").get<std::vector<Block>>();
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("GDD JSON: ") + e.what());
    }
    if (d.k < 1) fail(errc::parse_error, "GDD JSON: block size must be positive");
    const int n = d.point_count();
    for (const auto& group : d.groups)
        for (int x : group)
            if (x < 0 || x >= n)
                fail(errc::parse_error,
                     "GDD JSON: group point " + std::to_string(x) + " out of range");
    for (const auto& block : d.blocks)
        for (int x : block)
            if (x < 0 || x >= n)
                fail(errc::parse_error,
                     "GDD JSON: block point " + std::to_string(x) + " out of range");
    return d;
}

std::pair<Design, Graph> wilson_fill(const Gdd& d,
                                     const std::map<int, std::pair<Design, Graph>>& ingredients) {
    if (!verify_gdd(d).ok()) fail(errc::precondition_violated, "GDD does not verify");
    const int n = d.point_count();
    int delta = -1;
    Design out{n, 0, d.blocks};
    Graph composed(n);
    for (const auto& group : d.groups) {
        std::vector<int> points = group;
        std::sort(points.begin(), points.end());
        const int size = static_cast<int>(points.size());
        auto it = ingredients.find(size);
        if (it == ingredients.end())
            fail(errc::missing_ingredient,
                 "no ingredient design for group size " + std::to_string(size));
        const auto& [ingredient, graph] = it->second;
        if (ingredient.n != size || graph.order() != size)
            fail(errc::bad_argument, "ingredient for group size " + std::to_string(size) +
                                         " has order " + std::to_string(ingredient.n));
        if (ingredient.delta + 1 != d.k)
            fail(errc::bad_argument, "ingredient block size " + std::to_string(ingredient.delta + 1) +
                                         " does not match GDD block size " + std::to_string(d.k));
        if (delta < 0) delta = ingredient.delta;
        for (const auto& block : ingredient.blocks) {
            Block mapped;
            mapped.reserve(block.size());
            for (int x : block) {
                if (x < 0 || x >= size)
                    fail(errc::bad_argument, "ingredient block point out of range");
                mapped.push_back(points[static_cast<std::size_t>(x)]);
            }
            out.blocks.push_back(std::move(mapped));
        }
        for (auto [u, v] : graph.edges())
            composed.add_edge(points[static_cast<std::size_t>(u)], points[static_cast<std::size_t>(v)]);
    }
    out.delta = delta < 0 ? d.k - 1 : delta;
    canonicalize(out);
    auto report = verify(out, composed);
    if (!report.ok())
        fail(errc::verification_failed,
             "composed design failed verification: " + report.violations.front().to_string());
    return {std::move(out), std::move(composed)};
}

}  // namespace rgd
