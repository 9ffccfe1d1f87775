#include <iostream>

#include "CLI11.hpp"
#include "morse/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Discrete Morse matchings on simplicial complexes"};
    app.require_subcommand(1);

    morse::StatsArgs stats;
    auto* s = app.add_subcommand("stats", "Simplex counts, Euler characteristic and GF(2) Betti numbers");
    s->add_option("input", stats.input, "Complex file")->required();
    s->add_flag("--json", stats.json, "Emit JSON");

    morse::MatchArgs match;
    auto* m = app.add_subcommand("match", "Compute a Morse matching and report it");
    m->add_option("input", match.input, "Complex file")->required();
    m->add_option("-a,--algo", match.algorithm, "frontier | coreduction | reduction | oracle")
        ->check(CLI::IsMember(morse::kAlgorithms));
    m->add_flag("--json", match.json, "Emit JSON");
    m->add_option("--seed", match.seed, "Random tie-breaking seed for the heuristics");
    m->add_option("--canonicalize", match.canonicalize, "Make this vertex the only critical vertex");
    m->add_option("--budget", match.budget, "Oracle node-expansion budget (else $MORSE_ORACLE_BUDGET)");
    m->add_flag("!--no-timing", match.timing, "Omit timing so output is byte-stable");
    m->add_option("--matching-out", match.matching_out, "Write the matching to this file");

    morse::ValidateArgs validate;
    auto* v = app.add_subcommand("validate", "Check a matching file against a complex");
    v->add_option("input", validate.input, "Complex file")->required();
    v->add_option("matching", validate.matching, "Matching file (lines '<lower> ; <upper>')")->required();
    v->add_flag("--json", validate.json, "Emit JSON");

    morse::GenArgs gen;
    auto* g = app.add_subcommand("gen", "Write a generated complex");
    g->add_option("name", gen.name, "boundary | simplex | rp2 | dunce-hat | wedge | amplified | random")
        ->required()
        ->check(CLI::IsMember({"boundary", "simplex", "rp2", "dunce-hat", "wedge", "amplified", "random"}));
    g->add_option("-n", gen.n, "Dimension for boundary / simplex");
    g->add_option("--input", gen.input, "Base complex for wedge / amplified");
    g->add_option("--vertex", gen.vertex, "Base point for wedge / amplified");
    g->add_option("--copies", gen.copies, "Copies for wedge");
    g->add_option("-c", gen.c, "Exponent for amplified (n^(c-1) copies)");
    g->add_option("--cap", gen.max_simplices, "Size cap for amplified");
    g->add_option("--seed", gen.seed, "Seed for random");
    g->add_option("--dim", gen.random.dimension, "Dimension for random");
    g->add_option("--facets", gen.random.facets, "Facet draws for random");
    g->add_option("--vertices", gen.random.vertices, "Vertex pool for random");
    g->add_flag("--connected", gen.random.connected, "Random complex is connected");
    g->add_option("--max-simplices", gen.random.max_simplices, "Size cap for random");
    g->add_option("-o,--out", gen.out, "Output file (default stdout)");
    g->add_option("--matching-out", gen.matching_out, "Write the canonical matching (boundary only)");

    morse::BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Compare algorithms over a corpus");
    b->add_option("inputs", bench.inputs, "Complex files or directories")->required();
    b->add_option("-a,--algos", bench.algorithms, "Algorithms to run")
        ->delimiter(',')
        ->check(CLI::IsMember(morse::kAlgorithms));
    b->add_flag("--json", bench.json, "Emit JSON");
    b->add_option("--seed", bench.seed, "Random tie-breaking seed for the heuristics");
    b->add_option("--budget", bench.budget, "Oracle node-expansion budget (else $MORSE_ORACLE_BUDGET)");
    b->add_option("-j,--threads", bench.threads, "Worker threads (default: hardware)");
    b->add_flag("!--no-timing", bench.timing, "Omit timing so output is byte-stable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? morse::kExitOk : morse::kExitUsage;
    }

    if (*s) return morse::cmd_stats(stats, std::cout, std::cerr);
    if (*m) return morse::cmd_match(match, std::cout, std::cerr);
    if (*v) return morse::cmd_validate(validate, std::cout, std::cerr);
    if (*g) return morse::cmd_gen(gen, std::cout, std::cerr);
    return morse::cmd_bench(bench, std::cout, std::cerr);
}
