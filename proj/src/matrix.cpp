#include "mbound/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include <json.hpp>

#include "mbound/errors.hpp"

namespace mbound {

namespace {

using json = nlohmann::ordered_json;

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

const char* class_label(const std::optional<MeaningBound>& cell) {
    return cell ? to_string(cell->cls).data() : "n/a";
}

// Re-raises a cell failure with its coordinates prefixed, keeping the
// concrete error type so callers can still tell a missing entry from a
// zero count.
[[noreturn]] void rethrow_with_context(const computation_error& e, const std::string& msg) {
    if (dynamic_cast<const missing_entry_error*>(&e)) throw missing_entry_error(msg);
    if (dynamic_cast<const zero_count_error*>(&e)) throw zero_count_error(msg);
    if (dynamic_cast<const count_domain_error*>(&e)) throw count_domain_error(msg);
    throw computation_error(msg);
}

}  // namespace

OutputFormat output_format_from_string(std::string_view s) {
    if (s == "table") return OutputFormat::Table;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw error("unknown output format '" + std::string(s) + "'");
}

std::string format_fixed(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    return buf;
}

std::string format_full(double value) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, p);
}

MatrixResult compute_matrix(const CountProvider& provider, const std::vector<Query>& queries,
                            const BoundOptions& options, bool permissive) {
    if (queries.empty()) throw computation_error("matrix needs at least one query");
    MatrixResult m;
    m.universe = options.universe_override.value_or(provider.universe());
    m.labels.reserve(queries.size());
    for (const auto& q : queries) m.labels.push_back(q.label());
    m.cells.assign(queries.size(), {});
    for (std::size_t i = 0; i < queries.size(); ++i) {
        m.cells[i].reserve(queries.size());
        for (std::size_t j = 0; j < queries.size(); ++j) {
            try {
                m.cells[i].emplace_back(
                    bound_between(provider, queries[i], queries[j], options));
            } catch (const computation_error& e) {
                std::string diagnostic =
                    "cell (" + m.labels[i] + ", " + m.labels[j] + "): " + e.what();
                if (!permissive) rethrow_with_context(e, diagnostic);
                m.cells[i].emplace_back(std::nullopt);
                m.cell_errors.push_back(std::move(diagnostic));
            }
        }
    }
    return m;
}

std::string format_matrix_table(const MatrixResult& m, int precision) {
    const std::size_t n = m.labels.size();
    std::vector<std::vector<std::string>> text(n, std::vector<std::string>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            text[i][j] = m.cells[i][j] ? format_fixed(m.cells[i][j]->value, precision)
                                       : std::string("n/a");

    std::size_t label_w = 0;
    for (const auto& l : m.labels) label_w = std::max(label_w, l.size());
    std::vector<std::size_t> col_w(n);
    for (std::size_t j = 0; j < n; ++j) {
        col_w[j] = m.labels[j].size();
        for (std::size_t i = 0; i < n; ++i) col_w[j] = std::max(col_w[j], text[i][j].size());
    }

    std::string out(label_w, ' ');
    for (std::size_t j = 0; j < n; ++j) {
        out += "  ";
        out.append(col_w[j] - m.labels[j].size(), ' ');
        out += m.labels[j];
    }
    out += '\n';
    for (std::size_t i = 0; i < n; ++i) {
        out += m.labels[i];
        out.append(label_w - m.labels[i].size(), ' ');
        for (std::size_t j = 0; j < n; ++j) {
            out += "  ";
            out.append(col_w[j] - text[i][j].size(), ' ');
            out += text[i][j];
        }
        out += '\n';
    }
    return out;
}

std::string format_matrix_csv(const MatrixResult& m) {
    std::string out;
    for (const auto& l : m.labels) {
        out += ',';
        out += csv_field(l);
    }
    out += '\n';
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        out += csv_field(m.labels[i]);
        for (const auto& cell : m.cells[i]) {
            out += ',';
            out += cell ? format_full(cell->value) : std::string("n/a");
        }
        out += '\n';
    }
    return out;
}

std::string format_matrix_json(const MatrixResult& m) {
    json root;
    root["terms"] = m.labels;
    root["universe"] = m.universe;
    json matrix = json::array();
    json classes = json::array();
    for (const auto& row : m.cells) {
        json jrow = json::array();
        json crow = json::array();
        for (const auto& cell : row) {
            if (cell) jrow.push_back(cell->value);
            else jrow.push_back(nullptr);
            crow.push_back(class_label(cell));
        }
        matrix.push_back(std::move(jrow));
        classes.push_back(std::move(crow));
    }
    root["matrix"] = std::move(matrix);
    root["classes"] = std::move(classes);
    return root.dump(2) + "\n";
}

std::string format_bound_table(const BoundReport& r) {
    std::string out;
    out += "A:                " + r.label_a + "\n";
    out += "B:                " + r.label_b + "\n";
    out += "n(A):             " + std::to_string(r.n_a) + "\n";
    out += "n(B):             " + std::to_string(r.n_b) + "\n";
    if (r.corrected) {
        out += "n(A,B) raw:       " + std::to_string(r.n_ab_raw) + "\n";
        out += "n(A,B) corrected: " + format_full(r.n_ab_used) + "\n";
    } else {
        out += "n(A,B):           " + std::to_string(r.n_ab_raw) + "\n";
    }
    out += "universe:         " + std::to_string(r.universe) + "\n";
    out += "w(A,B):           " + format_full(r.relative_weight) + "\n";
    out += "w(www,B):         " + format_full(r.absolute_weight) + "\n";
    out += "M(A,B):           " + format_full(r.bound.value) + "\n";
    out += "class:            " + std::string(to_string(r.bound.cls)) + "\n";
    return out;
}

std::string format_bound_csv(const BoundReport& r) {
    std::string out =
        "a,b,n_a,n_b,n_ab_raw,n_ab_used,corrected,universe,relative_weight,"
        "absolute_weight,bound,class\n";
    out += csv_field(r.label_a) + ',' + csv_field(r.label_b) + ',' +
           std::to_string(r.n_a) + ',' + std::to_string(r.n_b) + ',' +
           std::to_string(r.n_ab_raw) + ',' + format_full(r.n_ab_used) + ',' +
           (r.corrected ? "true" : "false") + ',' + std::to_string(r.universe) + ',' +
           format_full(r.relative_weight) + ',' + format_full(r.absolute_weight) + ',' +
           format_full(r.bound.value) + ',' + std::string(to_string(r.bound.cls)) + '\n';
    return out;
}

std::string format_bound_json(const BoundReport& r) {
    json root;
    root["a"] = r.label_a;
    root["b"] = r.label_b;
    root["n_a"] = r.n_a;
    root["n_b"] = r.n_b;
    root["n_ab_raw"] = r.n_ab_raw;
    root["n_ab_used"] = r.n_ab_used;
    root["corrected"] = r.corrected;
    root["universe"] = r.universe;
    root["relative_weight"] = r.relative_weight;
    root["absolute_weight"] = r.absolute_weight;
    root["bound"] = r.bound.value;
    root["class"] = to_string(r.bound.cls);
    return root.dump(2) + "\n";
}

}  // namespace mbound
