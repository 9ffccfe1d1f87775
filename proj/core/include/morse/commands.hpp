#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "morse/generators.hpp"
#include "morse/oracle.hpp"

namespace morse {

// Entry points behind the `morse` executable. Each returns a process exit
// code and writes results to `out`, diagnostics to `err`.

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInvalid = 2,
    kExitParse = 3,
    kExitBudget = 4,
};

inline constexpr const char* kBudgetEnv = "MORSE_ORACLE_BUDGET";

/// Explicit budget if given, else MORSE_ORACLE_BUDGET if set and valid.
std::optional<std::uint64_t> oracle_budget(std::optional<std::uint64_t> explicit_budget);

inline const std::vector<std::string> kAlgorithms{"frontier", "coreduction", "reduction", "oracle"};

struct MatchRun {
    MorseMatching morse;
    std::optional<std::size_t> oracle_pairs;
    std::optional<bool> optimal;
};

/// Runs one algorithm by name. Throws Error for an unknown name.
MatchRun run_algorithm(const SimplicialComplex& k, const std::string& algorithm,
                       std::optional<std::uint64_t> seed, std::optional<std::uint64_t> budget);

struct StatsArgs {
    std::string input;
    bool json = false;
};
int cmd_stats(const StatsArgs& args, std::ostream& out, std::ostream& err);

struct MatchArgs {
    std::string input;
    std::string algorithm = "frontier";
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::optional<Vertex> canonicalize;
    std::optional<std::uint64_t> budget;
    bool timing = true;
    /// Write the resulting matching in matching-file format here.
    std::string matching_out;
};
int cmd_match(const MatchArgs& args, std::ostream& out, std::ostream& err);

struct ValidateArgs {
    std::string input;
    std::string matching;
    bool json = false;
};
int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err);

struct GenArgs {
    /// boundary | simplex | rp2 | dunce-hat | wedge | amplified | random
    std::string name;
    int n = 2;
    std::string input;
    Vertex vertex = 0;
    std::size_t copies = 2;
    int c = 2;
    std::uint64_t seed = 1;
    RandomComplexParams random;
    std::size_t max_simplices = 100'000;
    std::string out;
    std::string matching_out;
};
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);

struct BenchArgs {
    /// Complex files, or directories whose regular files are read in name order.
    std::vector<std::string> inputs;
    std::vector<std::string> algorithms{"frontier", "coreduction", "reduction"};
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> budget;
    unsigned threads = 0;
    bool timing = true;
};
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

}  // namespace morse
