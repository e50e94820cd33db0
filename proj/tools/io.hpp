#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "qeffects/explorer.hpp"
#include "qeffects/observable.hpp"

namespace qeffects::io {

using Json = nlohmann::ordered_json;

/// Reads a whole file; throws Error(Parse) if it cannot be opened.
std::string read_text(const std::string& path);
/// Throws Error(Parse) on malformed JSON.
Json parse_json(const std::string& text);
Json load_json(const std::string& path);

/// {"dim": n, "entries": [[[re, im], ...], ...]}.
Json operator_to_json(const ComplexMatrix& m);
ComplexMatrix operator_from_json(const Json& doc);

/// {"outcomes": [...], "effects": [operator, ...]}.
Json observable_to_json(const Observable& obs);
/// Parses and validates. Throws Error(Parse) for schema problems and the
/// usual validation errors otherwise.
Observable observable_from_json(const Json& doc);
bool is_observable_document(const Json& doc);

Json distribution_to_json(const OutcomeDistribution& d);

/// Canonical text form: object keys in insertion order, two-space indent,
/// arrays of scalars (and arrays of arrays of scalars) kept on one line.
std::string format_json(const Json& doc);

/// Convenience wrappers: format_json(operator_to_json(m)) and the reverse.
std::string write_operator(const ComplexMatrix& m);
ComplexMatrix read_operator(const std::string& text);

/// printf("%.17g"): enough digits to round-trip any double.
std::string format_double(double x);

struct TrajectoryRow {
    double t;
    ComplexMatrix op;
    double deviation;
    double derivative_norm;
};

/// t, e_00_re, e_00_im, e_01_re, ..., deviation, derivative_norm
std::string trajectory_header(Index dim);
void write_trajectory_csv(std::ostream& out, std::span<const TrajectoryRow> rows);

/// Records by min_gap ascending plus the summary; effects only for the
/// global minimum pairs.
Json scan_to_json(const explorer::ScanReport& report);
/// trial, commutator_norm, t_star, min_gap; rows by trial index.
void write_scan_csv(std::ostream& out, const explorer::ScanReport& report);

}  // namespace qeffects::io
