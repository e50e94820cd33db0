#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qeffects::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

bool is_flat_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j) {
        if (!is_scalar(e)) return false;
    }
    return true;
}

bool prints_inline(const Json& j) {
    if (is_scalar(j) || j.empty()) return true;
    if (!j.is_array()) return false;
    for (const auto& e : j) {
        if (!is_scalar(e) && !is_flat_array(e)) return false;
    }
    return true;
}

void print_inline(std::ostream& out, const Json& j) {
    if (j.is_array()) {
        out << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out << ", ";
            print_inline(out, j[i]);
        }
        out << ']';
    } else {
        out << j.dump();
    }
}

void print(std::ostream& out, const Json& j, int indent) {
    if (prints_inline(j)) {
        print_inline(out, j);
        return;
    }
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    const std::string close(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        out << "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out << pad << Json(it.key()).dump() << ": ";
            print(out, it.value(), indent + 2);
            out << (i + 1 < j.size() ? ",\n" : "\n");
        }
        out << close << '}';
    } else {
        out << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out << pad;
            print(out, j[i], indent + 2);
            out << (i + 1 < j.size() ? ",\n" : "\n");
        }
        out << close << ']';
    }
}

double number_field(const Json& j, const char* what) {
    if (!j.is_number()) schema_error(std::string(what) + " must be a number");
    return j.get<double>();
}

}  // namespace

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) schema_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        schema_error(std::string("malformed JSON: ") + e.what());
    }
}

Json load_json(const std::string& path) { return parse_json(read_text(path)); }

Json operator_to_json(const ComplexMatrix& m) {
    Json entries = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        entries.push_back(std::move(row));
    }
    Json doc;
    doc["dim"] = m.rows();
    doc["entries"] = std::move(entries);
    return doc;
}

ComplexMatrix operator_from_json(const Json& doc) {
    if (!doc.is_object()) schema_error("operator document must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
        schema_error("operator document needs an integer 'dim'");
    }
    const auto dim = doc["dim"].get<long long>();
    if (dim < 1) schema_error("'dim' must be positive");
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        schema_error("operator document needs an 'entries' array");
    }
    const Json& rows = doc["entries"];
    if (static_cast<long long>(rows.size()) != dim) schema_error("'entries' must have dim rows");

    ComplexMatrix m(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        const Json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<long long>(row.size()) != dim) {
            schema_error("every row of 'entries' must have dim elements");
        }
        for (Index j = 0; j < dim; ++j) {
            const Json& z = row[static_cast<std::size_t>(j)];
            if (!z.is_array() || z.size() != 2) schema_error("entries must be [re, im] pairs");
            m(i, j) = Complex(number_field(z[0], "re"), number_field(z[1], "im"));
        }
    }
    return m;
}

Json observable_to_json(const Observable& obs) {
    Json doc;
    doc["outcomes"] = obs.outcomes();
    Json effects = Json::array();
    for (const auto& e : obs.effects()) effects.push_back(operator_to_json(e.matrix()));
    doc["effects"] = std::move(effects);
    return doc;
}

bool is_observable_document(const Json& doc) {
    return doc.is_object() && doc.contains("outcomes") && doc.contains("effects");
}

Observable observable_from_json(const Json& doc) {
    if (!is_observable_document(doc)) schema_error("observable document needs 'outcomes' and 'effects'");
    const Json& outcomes = doc["outcomes"];
    const Json& effects = doc["effects"];
    if (!outcomes.is_array() || !effects.is_array()) schema_error("'outcomes' and 'effects' must be arrays");
    if (outcomes.size() != effects.size()) schema_error("'outcomes' and 'effects' differ in length");

    std::vector<std::string> labels;
    std::vector<ComplexMatrix> mats;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (!outcomes[i].is_string()) schema_error("outcome labels must be strings");
        labels.push_back(outcomes[i].get<std::string>());
        mats.push_back(operator_from_json(effects[i]));
    }
    return validate_observable(std::move(labels), mats);
}

Json distribution_to_json(const OutcomeDistribution& d) {
    Json doc = Json::object();
    for (std::size_t i = 0; i < d.outcomes.size(); ++i) doc[d.outcomes[i]] = d.probabilities[i];
    return doc;
}

std::string format_json(const Json& doc) {
    std::ostringstream out;
    print(out, doc, 0);
    out << '\n';
    return out.str();
}

std::string write_operator(const ComplexMatrix& m) { return format_json(operator_to_json(m)); }

ComplexMatrix read_operator(const std::string& text) { return operator_from_json(parse_json(text)); }

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string trajectory_header(Index dim) {
    std::string header = "t";
    for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < dim; ++j) {
            const std::string tag = "e_" + std::to_string(i) + std::to_string(j);
            header += "," + tag + "_re," + tag + "_im";
        }
    }
    return header + ",deviation,derivative_norm";
}

void write_trajectory_csv(std::ostream& out, std::span<const TrajectoryRow> rows) {
    if (rows.empty()) return;
    out << trajectory_header(rows.front().op.rows()) << '\n';
    for (const auto& row : rows) {
        out << format_double(row.t);
        for (Index i = 0; i < row.op.rows(); ++i) {
            for (Index j = 0; j < row.op.cols(); ++j) {
                out << ',' << format_double(row.op(i, j).real()) << ','
                    << format_double(row.op(i, j).imag());
            }
        }
        out << ',' << format_double(row.deviation) << ',' << format_double(row.derivative_norm)
            << '\n';
    }
}

Json scan_to_json(const explorer::ScanReport& report) {
    const auto& cfg = report.config;
    const auto& summary = report.summary;

    Json config;
    config["dim"] = cfg.dim;
    config["trials"] = cfg.trials;
    config["seed"] = cfg.seed;
    config["t_min"] = cfg.t_min;
    config["t_max"] = cfg.t_max;
    config["grid_points"] = cfg.grid_points;
    config["refine_iters"] = cfg.refine_iters;
    config["commutator_floor"] = cfg.commutator_floor;
    config["puncture_radius"] = cfg.puncture_radius;

    auto label_for = [](double gap) {
        return gap < explorer::kCandidateThreshold ? Json(explorer::kCandidateLabel) : Json(nullptr);
    };

    Json records = Json::array();
    for (std::size_t idx : summary.order) {
        const auto& r = report.records[idx];
        Json rec;
        rec["trial"] = r.trial;
        rec["commutator_norm"] = r.commutator_norm;
        rec["t_star"] = r.t_star;
        rec["min_gap"] = r.min_gap;
        rec["t_star_punctured"] = r.punctured ? Json(r.punctured->t_star) : Json(nullptr);
        rec["min_gap_punctured"] = r.punctured ? Json(r.punctured->min_gap) : Json(nullptr);
        rec["label"] = label_for(r.min_gap);
        records.push_back(std::move(rec));
    }

    Json out_summary;
    out_summary["recorded"] = summary.recorded;
    out_summary["skipped"] = summary.skipped;
    out_summary["candidates"] = summary.candidates;
    if (summary.global_min) {
        const auto& r = report.records[*summary.global_min];
        Json best;
        best["trial"] = r.trial;
        best["min_gap"] = r.min_gap;
        best["t_star"] = r.t_star;
        best["commutator_norm"] = r.commutator_norm;
        best["label"] = label_for(r.min_gap);
        best["a"] = operator_to_json(r.a.matrix());
        best["b"] = operator_to_json(r.b.matrix());
        out_summary["global_min"] = std::move(best);
    } else {
        out_summary["global_min"] = nullptr;
    }
    if (summary.global_min_punctured) {
        const auto& r = report.records[*summary.global_min_punctured];
        Json best;
        best["trial"] = r.trial;
        best["min_gap"] = r.punctured->min_gap;
        best["t_star"] = r.punctured->t_star;
        best["commutator_norm"] = r.commutator_norm;
        best["label"] = label_for(r.punctured->min_gap);
        best["a"] = operator_to_json(r.a.matrix());
        best["b"] = operator_to_json(r.b.matrix());
        out_summary["global_min_punctured"] = std::move(best);
    } else {
        out_summary["global_min_punctured"] = nullptr;
    }
    Json histogram = Json::array();
    for (const auto& bin : summary.histogram) {
        Json b;
        b["lo"] = bin.lo;
        b["hi"] = bin.hi;
        b["count"] = bin.count;
        histogram.push_back(std::move(b));
    }
    out_summary["histogram"] = std::move(histogram);

    Json doc;
    doc["config"] = std::move(config);
    doc["summary"] = std::move(out_summary);
    doc["records"] = std::move(records);
    return doc;
}

void write_scan_csv(std::ostream& out, const explorer::ScanReport& report) {
    out << "trial,commutator_norm,t_star,min_gap\n";
    for (const auto& r : report.records) {
        out << r.trial << ',' << format_double(r.commutator_norm) << ',' << format_double(r.t_star)
            << ',' << format_double(r.min_gap) << '\n';
    }
}

}  // namespace qeffects::io
