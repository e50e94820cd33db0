#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qeffects/explorer.hpp"
#include "qeffects/tolerances.hpp"

namespace qeffects::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kInvalidInput = 2,
    kParseFailure = 3,
};

struct GlobalOptions {
    /// Decision tolerance used by classify and the commutation checks.
    double tol = tol::kDecision;
};

/// Kind of document expected by `validate`; Auto picks Observable when the
/// document has outcomes/effects and Effect otherwise.
enum class DocumentKind { Auto, Effect, State, Observable };

int cmd_validate(const std::string& file, DocumentKind kind, std::ostream& out, std::ostream& err);

enum class EvolveMode { Evolution, SeqProd };

struct EvolveOptions {
    std::string a_file;
    std::string b_file;
    double t0 = 0.0;
    double t1 = 12.566370614359172;
    int steps = 64;
    EvolveMode mode = EvolveMode::Evolution;
};

int cmd_evolve(const EvolveOptions& opts, std::ostream& out, std::ostream& err);

int cmd_classify(const std::string& a_file, const std::string& b_file, const GlobalOptions& global,
                 std::ostream& out, std::ostream& err);

struct ObservableOptions {
    /// dist | seqprod | cond | evolve | tseq | tcond | convex
    std::string subcommand;
    /// Observable files in the order the subcommand documents.
    std::vector<std::string> files;
    std::optional<std::string> state_file;
    /// Effect driving `evolve`.
    std::optional<std::string> effect_file;
    double t = 0.0;
    std::vector<double> weights;
};

int cmd_observable(const ObservableOptions& opts, std::ostream& out, std::ostream& err);

struct ExamplesOptions {
    /// Pass threshold for every residual. Tests lower it to exercise the FAIL path.
    double tolerance = tol::kIdentity;
};

int cmd_examples(const ExamplesOptions& opts, std::ostream& out, std::ostream& err);

struct ScanOptions {
    explorer::ScanConfig config;
    std::string json_out = "scan.json";
    std::string csv_out = "scan.csv";
};

int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace qeffects::cli
