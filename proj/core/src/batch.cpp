#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rgd/errors.hpp"
#include "rgd/graph_io.hpp"
#include "rgd/search.hpp"

namespace rgd {

namespace {

bool stage_known(const std::string& stage) {
    return stage == "a" || stage == "b" || stage == "c" || stage == "d" || stage == "cover";
}

BatchRecord process_record(int index, const std::string& line, const BatchOptions& options) {
    BatchRecord rec;
    rec.index = index;
    rec.stage = "-";
    auto started = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - started)
            .count();
    };
    try {
        Graph g = parse_graph6(line);
        rec.n = g.order();
        auto degree = regularity(g);
        if (!degree) {
            rec.outcome = "Skipped";
            rec.detail = "not regular";
            rec.millis = elapsed();
            return rec;
        }
        rec.delta = *degree;
        if (!girth_at_least(g, 5)) {
            rec.outcome = "Skipped";
            rec.detail = "girth below five";
            rec.millis = elapsed();
            return rec;
        }
        rec.outcome = to_string(Status::inconclusive);
        for (const auto& stage : options.pipeline) {
            const int n = g.order();
            const int delta = *degree;
            SearchOutcome out;
            if (stage == "a")
                out = algorithm_a(g);
            else if (stage == "b")
                out = algorithm_b(g, options.node_budget);
            else if (stage == "cover")
                out = exact_cover(g, CoverMode::decide, options.node_budget);
            else if (stage == "c") {
                if (n != (delta + 1) * (delta + 1)) continue;
                out = algorithm_c(g);
            } else if (stage == "d") {
                if (n != 22 || delta != 3) continue;
                out = algorithm_d(g);
            }
            rec.nodes += out.nodes;
            if (out.status != Status::inconclusive) {
                rec.outcome = to_string(out.status);
                rec.stage = out.stage;
                break;
            }
        }
    } catch (const error& e) {
        rec.outcome = "Error";
        rec.detail = e.what();
    }
    rec.millis = elapsed();
    return rec;
}

}  // namespace

BatchReport run_batch(std::istream& in, const BatchOptions& options) {
    if (options.node_budget <= 0) fail(errc::bad_argument, "node budget must be positive");
    for (const auto& stage : options.pipeline)
        if (!stage_known(stage)) fail(errc::bad_argument, "unknown pipeline stage: " + stage);
    if (options.threads < 0) fail(errc::bad_argument, "thread count must be non-negative");

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string record = line;
        if (record.rfind(">>graph6<<", 0) == 0) record = record.substr(10);
        if (record.find_first_not_of(" \t") == std::string::npos) continue;
        lines.push_back(record);
    }

    BatchReport report;
    report.records.resize(lines.size());
    std::size_t workers = options.threads == 0
                              ? std::max(1u, std::thread::hardware_concurrency())
                              : static_cast<std::size_t>(options.threads);
    workers = std::min(workers, std::max<std::size_t>(1, lines.size()));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= lines.size()) break;
            report.records[i] = process_record(static_cast<int>(i), lines[i], options);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    for (const auto& rec : report.records) {
        if (rec.outcome == "Exists")
            ++report.exists;
        else if (rec.outcome == "NotExists")
            ++report.not_exists;
        else if (rec.outcome == "Inconclusive")
            ++report.inconclusive;
        else
            ++report.errors;
    }
    return report;
}

std::string to_tsv(const BatchReport& report) {
    std::ostringstream os;
    for (const auto& rec : report.records) {
        os << rec.index << '\t' << rec.n << '\t' << rec.delta << '\t' << rec.outcome << '\t'
           << rec.stage << '\t' << rec.nodes << '\t' << rec.millis;
        if (!rec.detail.empty()) os << '\t' << rec.detail;
        os << '\n';
    }
    os << "# summary exists=" << report.exists << " notexists=" << report.not_exists
       << " inconclusive=" << report.inconclusive << " errors=" << report.errors << '\n';
    return os.str();
}

}  // namespace rgd
