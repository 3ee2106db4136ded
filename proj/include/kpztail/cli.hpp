#ifndef KPZTAIL_CLI_HPP
#define KPZTAIL_CLI_HPP

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "kpztail/fredholm.hpp"

namespace kpztail {

enum class Command { q, tw, endpoint, density, asym, compare, scan, tail };
enum class OutputFormat { csv, json };
enum class RepChoice { sigma, finite_t, both };

struct RunConfig {
    Command command = Command::q;
    std::optional<double> s;
    std::optional<double> T;
    std::optional<int> order; // default 80 where needed; presence matters for `tail`
    RepChoice rep = RepChoice::sigma;
    Precision precision = Precision::standard;
    std::optional<std::array<double, 3>> grid; // min, max, count
    double epsilon = 0.1;
    std::optional<double> h; // finite-difference step (reserved for derivatives)
    OutputFormat format = OutputFormat::csv;
};

// Execute a validated config, writing the full table to `out` and any failure
// name to `err`. Returns 0 on success, 2 on validation errors, 3 on numerical
// failures. Output is all-or-nothing: no partial rows on failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parse argv into a RunConfig and run it. Exit status as in run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace kpztail

#endif
