#pragma once

// Command-line front end: every computation and verification is a
// subcommand with deterministic machine-readable output. Exit code 0 when
// all requested checks pass, 1 when a mathematical check fails (the
// counterexample is serialized), 2 on configuration errors.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cft/rational.hpp"

namespace cft::cli {

enum class Format { Json, Csv, Pretty };

struct RunConfig {
    std::string command;
    int level = 0;
    int level_max = 0;
    int cutoff = 6;
    int window = 8;
    int guard = 4;
    int mode_max = 3;
    int m = 0;
    bool symbolic = false;
    bool extended_range = false;
    bool voa_quotient = false;
    std::optional<Rational> c;
    std::optional<Rational> h;
    Rational mu = Rational(0);
    std::vector<Rational> c_list;
    std::vector<Rational> h_list;
    Format format = Format::Json;
    unsigned parallel = 1;
};

// Executes one subcommand, writing the report to `out`.
int run(const RunConfig& config, std::ostream& out);

// argv-level entry point used by main(); parses, validates, dispatches.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cft::cli
