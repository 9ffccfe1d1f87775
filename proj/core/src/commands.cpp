#include "morse/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "morse/frontier.hpp"
#include "morse/heuristics.hpp"
#include "morse/io.hpp"
#include "morse/report.hpp"

namespace morse {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::optional<std::uint64_t> oracle_budget(std::optional<std::uint64_t> explicit_budget) {
    if (explicit_budget) return explicit_budget;
    const char* env = std::getenv(kBudgetEnv);
    if (env == nullptr || *env == '\0') return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) return std::nullopt;
    return static_cast<std::uint64_t>(v);
}

MatchRun run_algorithm(const SimplicialComplex& k, const std::string& algorithm,
                       std::optional<std::uint64_t> seed, std::optional<std::uint64_t> budget) {
    MatchRun run;
    if (algorithm == "frontier") {
        run.morse = frontier_edges_matching(k).morse;
    } else if (algorithm == "coreduction") {
        run.morse = coreduction_matching(k, {seed}).morse;
    } else if (algorithm == "reduction") {
        run.morse = reduction_matching(k, {seed}).morse;
    } else if (algorithm == "oracle") {
        OracleOptions opts;
        opts.budget = budget;
        auto r = optimal_morse_matching(k, opts);
        run.oracle_pairs = r.morse.size();
        run.optimal = r.optimal;
        run.morse = std::move(r.morse);
    } else {
        throw Error("unknown algorithm '" + algorithm + "'");
    }
    return run;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Shared error mapping for commands that read input files.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

bool known_algorithm(const std::string& name) {
    return std::find(kAlgorithms.begin(), kAlgorithms.end(), name) != kAlgorithms.end();
}

}  // namespace

int cmd_stats(const StatsArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto k = read_complex(args.input);
        std::vector<std::size_t> counts;
        for (int d = 0; d <= k.dimension(); ++d) counts.push_back(k.count(d));
        const auto beta = betti_gf2(k);
        if (args.json) {
            ordered_json j;
            j["input"] = args.input;
            j["simplices"] = k.size();
            j["dimension"] = k.dimension();
            j["counts"] = counts;
            j["euler_characteristic"] = euler_characteristic(k);
            j["betti"] = beta.beta;
            j["components"] = k.num_components();
            out << j.dump(2) << '\n';
        } else {
            out << "simplices  " << k.size() << '\n' << "dimension  " << k.dimension() << '\n' << "counts     ";
            for (std::size_t d = 0; d < counts.size(); ++d) out << (d ? " " : "") << counts[d];
            out << "\neuler      " << euler_characteristic(k) << "\nbetti      ";
            for (std::size_t d = 0; d < beta.beta.size(); ++d) out << (d ? " " : "") << beta.beta[d];
            out << "\ncomponents " << k.num_components() << '\n';
        }
        return int{kExitOk};
    });
}

int cmd_match(const MatchArgs& args, std::ostream& out, std::ostream& err) {
    if (!known_algorithm(args.algorithm)) {
        err << "error: unknown algorithm '" << args.algorithm << "' (expected frontier, coreduction, reduction or oracle)\n";
        return kExitUsage;
    }
    return guarded(err, [&] {
        const auto k = read_complex(args.input);
        const auto t0 = std::chrono::steady_clock::now();
        MatchRun run = run_algorithm(k, args.algorithm, args.seed, oracle_budget(args.budget));
        if (args.canonicalize) run.morse = canonicalize_single_critical_vertex(k, run.morse, *args.canonicalize);
        const double elapsed = ms_since(t0);

        Report r = make_report(k, run.morse);
        r.algorithm = args.algorithm;
        r.input = args.input;
        r.oracle_pairs = run.oracle_pairs;
        r.optimal = run.optimal;
        r.canonicalized_at = args.canonicalize;
        r.seed = args.seed;
        r.elapsed_ms = elapsed;
        out << (args.json ? report_json(r, args.timing) + "\n" : report_text(r, args.timing));

        if (!args.matching_out.empty()) {
            std::ofstream f(args.matching_out, std::ios::binary);
            if (!f) throw Error("cannot write " + args.matching_out);
            f << serialize_matching(k, run.morse.matching());
        }
        if (!r.acyclic || !r.consistent() || !r.euler_ok() || !r.morse_inequalities) return int{kExitInvalid};
        if (run.optimal && !*run.optimal) return int{kExitBudget};
        return int{kExitOk};
    });
}

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto k = read_complex(args.input);
        const auto resolved = resolve_matching(k, read_matching(args.matching));
        const auto morse = MorseMatching::certify(k, resolved.matching);
        Report r = make_report(k, morse);
        r.algorithm = "file";
        r.input = args.matching;

        if (args.json) {
            auto j = ordered_json::parse(report_json(r, false));
            j["problems"] = resolved.problems;
            out << j.dump(2) << '\n';
        } else {
            for (const auto& p : resolved.problems) out << "problem         " << p << '\n';
            out << report_text(r, false);
        }
        const bool ok = resolved.problems.empty() && r.acyclic && r.morse_inequalities;
        return int{ok ? kExitOk : kExitInvalid};
    });
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::optional<ComplexWithMatching> with_matching;
        SimplicialComplex k = [&] {
            const auto& name = args.name;
            if (name == "boundary") {
                with_matching = simplex_boundary(args.n);
                return with_matching->complex;
            }
            if (name == "simplex") return full_simplex(args.n);
            if (name == "rp2") return rp2();
            if (name == "dunce-hat") return dunce_hat();
            if (name == "wedge" || name == "amplified") {
                if (args.input.empty()) throw Error(name + " needs an input complex");
                const auto base = read_complex(args.input);
                return name == "wedge" ? wedge(base, args.vertex, args.copies)
                                       : amplified(base, args.vertex, args.c, args.max_simplices);
            }
            if (name == "random") return random_complex(args.seed, args.random);
            throw Error("unknown generator '" + name +
                        "' (expected boundary, simplex, rp2, dunce-hat, wedge, amplified or random)");
        }();

        if (args.out.empty() || args.out == "-") {
            out << serialize_complex(k);
        } else {
            write_complex(k, args.out);
        }
        if (!args.matching_out.empty()) {
            if (!with_matching) throw Error("only the boundary generator comes with a matching");
            std::ofstream f(args.matching_out, std::ios::binary);
            if (!f) throw Error("cannot write " + args.matching_out);
            f << serialize_matching(k, with_matching->morse.matching());
        }
        return int{kExitOk};
    });
}

namespace {

struct BenchRow {
    std::string input;
    std::string algorithm;
    std::optional<Report> report;
    std::string error;
};

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
    std::vector<std::string> files;
    for (const auto& in : inputs) {
        if (fs::is_directory(in)) {
            std::vector<std::string> found;
            for (const auto& entry : fs::directory_iterator(in))
                if (entry.is_regular_file() && entry.path().filename().string().front() != '.')
                    found.push_back(entry.path().string());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.push_back(in);
        }
    }
    return files;
}

}  // namespace

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    for (const auto& a : args.algorithms)
        if (!known_algorithm(a)) {
            err << "error: unknown algorithm '" << a << "'\n";
            return kExitUsage;
        }
    return guarded(err, [&] {
        const auto files = expand_inputs(args.inputs);
        if (files.empty()) throw Error("no input complexes");
        std::vector<SimplicialComplex> complexes;
        for (const auto& f : files) complexes.push_back(read_complex(f));

        const auto budget = oracle_budget(args.budget);
        std::vector<BenchRow> rows(files.size() * args.algorithms.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < rows.size(); i = next++) {
                const std::size_t ci = i / args.algorithms.size();
                BenchRow& row = rows[i];
                row.input = files[ci];
                row.algorithm = args.algorithms[i % args.algorithms.size()];
                try {
                    const auto t0 = std::chrono::steady_clock::now();
                    auto run = run_algorithm(complexes[ci], row.algorithm, args.seed, budget);
                    const double elapsed = ms_since(t0);
                    Report r = make_report(complexes[ci], run.morse);
                    r.algorithm = row.algorithm;
                    r.input = row.input;
                    r.oracle_pairs = run.oracle_pairs;
                    r.optimal = run.optimal;
                    r.seed = args.seed;
                    r.elapsed_ms = elapsed;
                    row.report = std::move(r);
                } catch (const Error& e) {
                    row.error = e.what();
                }
            }
        };
        unsigned threads = args.threads ? args.threads : std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows.size()));
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();

        struct Mean {
            double critical = 0, pairs = 0, ratio = 0;
            std::size_t count = 0;
        };
        std::map<std::string, Mean> means;
        bool invalid = false;
        bool exhausted = false;
        for (const auto& row : rows) {
            if (!row.report) continue;
            const Report& r = *row.report;
            auto& m = means[row.algorithm];
            m.critical += static_cast<double>(r.critical.total());
            m.pairs += static_cast<double>(r.matched_pairs);
            m.ratio += r.ratio_vs_max_matching();
            ++m.count;
            invalid = invalid || !r.acyclic || !r.euler_ok() || !r.consistent() || !r.morse_inequalities;
            exhausted = exhausted || (r.optimal && !*r.optimal);
        }

        if (args.json) {
            ordered_json j;
            j["rows"] = ordered_json::array();
            for (const auto& row : rows) {
                if (row.report) {
                    j["rows"].push_back(ordered_json::parse(report_json(*row.report, args.timing)));
                } else {
                    j["rows"].push_back({{"algorithm", row.algorithm}, {"input", row.input}, {"error", row.error}});
                }
            }
            ordered_json agg = ordered_json::object();
            for (const auto& a : args.algorithms) {
                const auto it = means.find(a);
                if (it == means.end() || it->second.count == 0) continue;
                const auto n = static_cast<double>(it->second.count);
                agg[a] = {{"rows", it->second.count},
                          {"critical_total", it->second.critical / n},
                          {"matched_pairs", it->second.pairs / n},
                          {"ratio_vs_max_matching", it->second.ratio / n}};
            }
            j["means"] = agg;
            out << j.dump(2) << '\n';
        } else {
            out << std::left << std::setw(28) << "complex" << std::setw(13) << "algorithm" << std::right
                << std::setw(7) << "n" << std::setw(7) << "pairs" << std::setw(7) << "crit" << "  "
                << std::left << std::setw(16) << "profile" << std::setw(7) << "euler" << "acyclic\n";
            for (const auto& row : rows) {
                out << std::left << std::setw(28) << fs::path(row.input).filename().string() << std::setw(13)
                    << row.algorithm;
                if (!row.report) {
                    out << "error: " << row.error << '\n';
                    continue;
                }
                const Report& r = *row.report;
                std::string profile;
                for (std::size_t i = 0; i < r.critical.c.size(); ++i)
                    profile += (i ? "," : "") + std::to_string(r.critical.c[i]);
                out << std::right << std::setw(7) << r.simplices << std::setw(7) << r.matched_pairs << std::setw(7)
                    << r.critical.total() << "  " << std::left << std::setw(16) << ("(" + profile + ")")
                    << std::setw(7) << (r.euler_ok() ? "ok" : "FAIL") << (r.acyclic ? "yes" : "NO");
                if (r.optimal && !*r.optimal) out << "  (not proven optimal)";
                out << '\n';
            }
            out << "\nmeans\n";
            for (const auto& a : args.algorithms) {
                const auto it = means.find(a);
                if (it == means.end() || it->second.count == 0) continue;
                const auto n = static_cast<double>(it->second.count);
                out << "  " << std::left << std::setw(13) << a << std::fixed << std::setprecision(3)
                    << "critical " << it->second.critical / n << "  pairs " << it->second.pairs / n
                    << "  ratio vs max matching " << it->second.ratio / n << '\n';
                out.unsetf(std::ios::floatfield);
            }
        }
        if (invalid) return int{kExitInvalid};
        if (exhausted) return int{kExitBudget};
        return int{kExitOk};
    });
}

}  // namespace morse
