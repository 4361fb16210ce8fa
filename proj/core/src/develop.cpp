#include "rgd/develop.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

#include "rgd/errors.hpp"

namespace rgd {

namespace {

#include "builtin_tables_data.inc"

std::string block_to_string(const Block& b) {
    std::string s = "{";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(b[i]);
    }
    return s + "}";
}

void validate(const BaseBlockSet& bbs) {
    if (bbs.n < 1) fail(errc::bad_argument, "base blocks need n >= 1");
    if (bbs.s < 1 || bbs.s > bbs.n) fail(errc::bad_argument, "step must satisfy 1 <= s <= n");
    if (bbs.base_blocks.empty()) fail(errc::bad_argument, "no base blocks");
    const std::size_t k = bbs.base_blocks.front().size();
    if (k < 1) fail(errc::bad_argument, "empty base block");
    for (const auto& b : bbs.base_blocks) {
        if (b.size() != k) fail(errc::bad_argument, "base blocks differ in size");
        Block s = b;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(errc::bad_argument, "base block " + block_to_string(b) + " repeats a point");
        if (s.front() < 0 || s.back() >= bbs.n)
            fail(errc::bad_argument, "base block " + block_to_string(b) + " out of range");
    }
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct TableKey {
    TableFamily family;
    int order;
    auto operator<=>(const TableKey&) const = default;
};

const std::map<TableKey, BaseBlockSet>& builtin_tables() {
    static const std::map<TableKey, BaseBlockSet> tables = [] {
        if (fnv1a64(kTableText) != kTableTextFnv1a)
            throw std::logic_error("embedded base-block tables are corrupted");
        std::map<TableKey, BaseBlockSet> out;
        std::istringstream in(kTableText);
        std::string line;
        TableKey key{};
        BaseBlockSet current;
        auto flush = [&] {
            if (!current.base_blocks.empty()) out.emplace(key, std::move(current));
            current = {};
        };
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (!std::isdigit(static_cast<unsigned char>(line.front()))) {
                flush();
                std::istringstream header(line);
                std::string family;
                header >> family >> current.n >> current.s;
                key = {table_family_from_string(family), current.n};
                continue;
            }
            std::istringstream fields(line);
            Block b;
            int x;
            while (fields >> x) b.push_back(x);
            std::sort(b.begin(), b.end());
            current.base_blocks.push_back(std::move(b));
        }
        flush();
        return out;
    }();
    return tables;
}

}  // namespace

int full_orbit_length(int n, int s) {
    if (n < 1 || s < 1) fail(errc::bad_argument, "orbit length needs n >= 1, s >= 1");
    return n / std::gcd(n, s);
}

std::vector<Block> orbit(const Block& block, int n, int s) {
    BaseBlockSet probe{n, s, {block}};
    validate(probe);
    Block start = block;
    std::sort(start.begin(), start.end());
    std::vector<Block> out{start};
    for (;;) {
        Block next = out.back();
        for (int& x : next) x = (x + s) % n;
        std::sort(next.begin(), next.end());
        if (next == start) break;
        out.push_back(std::move(next));
    }
    return out;
}

Design develop(const BaseBlockSet& bbs) {
    validate(bbs);
    Design d;
    d.n = bbs.n;
    d.delta = static_cast<int>(bbs.base_blocks.front().size()) - 1;
    for (const auto& base : bbs.base_blocks) {
        auto orb = orbit(base, bbs.n, bbs.s);
        d.blocks.insert(d.blocks.end(), orb.begin(), orb.end());
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    if (auto dup = std::adjacent_find(d.blocks.begin(), d.blocks.end()); dup != d.blocks.end())
        fail(errc::duplicate_block, "development generates block " + block_to_string(*dup) + " twice");
    return d;
}

TableFamily table_family_from_string(const std::string& name) {
    if (name == "delta2") return TableFamily::delta2;
    if (name == "delta3") return TableFamily::delta3;
    if (name == "delta4") return TableFamily::delta4;
    fail(errc::bad_argument, "unknown table family '" + name + "'");
}

std::string to_string(TableFamily family) {
    switch (family) {
        case TableFamily::delta2: return "delta2";
        case TableFamily::delta3: return "delta3";
        case TableFamily::delta4: return "delta4";
    }
    fail(errc::bad_argument, "bad table family value");
}

const std::vector<int>& builtin_orders(TableFamily family) {
    static const std::map<TableFamily, std::vector<int>> orders = [] {
        std::map<TableFamily, std::vector<int>> out;
        for (const auto& [key, table] : builtin_tables()) out[key.family].push_back(key.order);
        for (auto& [family, list] : out) std::sort(list.begin(), list.end());
        return out;
    }();
    return orders.at(family);
}

BaseBlockSet builtin_table(int order, TableFamily family) {
    const auto& tables = builtin_tables();
    auto it = tables.find({family, order});
    if (it == tables.end())
        fail(errc::bad_argument,
             "no built-in " + to_string(family) + " table for order " + std::to_string(order));
    return it->second;
}

std::string to_text(const BaseBlockSet& bbs) {
    std::string out = std::to_string(bbs.n) + " " + std::to_string(bbs.s) + "\n";
    for (const auto& b : bbs.base_blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(b[i]);
        }
        out.push_back('\n');
    }
    return out;
}

BaseBlockSet base_blocks_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    BaseBlockSet bbs;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (!have_header) {
            if (!(fields >> bbs.n >> bbs.s)) {
                if (fields.eof()) continue;
                fail(errc::parse_error, "base blocks: bad header line");
            }
            std::string extra;
            if (fields >> extra) fail(errc::parse_error, "base blocks: trailing text on header line");
            have_header = true;
            continue;
        }
        Block b;
        int x;
        while (fields >> x) b.push_back(x);
        if (!fields.eof()) fail(errc::parse_error, "base blocks: bad block line");
        if (!b.empty()) bbs.base_blocks.push_back(std::move(b));
    }
    if (!have_header) fail(errc::parse_error, "base blocks: missing header line");
    try {
        validate(bbs);
    } catch (const error& e) {
        fail(errc::parse_error, e.what());
    }
    return bbs;
}

}  // namespace rgd
