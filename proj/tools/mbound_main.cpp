#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbound/corpus.hpp"
#include "mbound/errors.hpp"
#include "mbound/index_io.hpp"
#include "mbound/matrix.hpp"
#include "mbound/provider.hpp"

namespace {

using namespace mbound;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;  // zero counts, missing snapshot entries
constexpr int kExitUsage = 2;        // bad flags, unreadable or corrupt files

struct ProviderArgs {
    std::string index_path;
    std::string snapshot_path;

    void attach(CLI::App* cmd) {
        auto* idx = cmd->add_option("--index", index_path, "count against a local index file");
        auto* snap =
            cmd->add_option("--snapshot", snapshot_path, "count against a snapshot file");
        auto* group = cmd->add_option_group("provider");
        group->add_options(idx, snap);
        group->require_option(1);  // exactly one of --index / --snapshot
    }

    // The query policy: an index normalizes queries exactly the way its
    // documents were normalized; snapshots use the default folds.
    std::pair<std::unique_ptr<CountProvider>, TokenPolicy> make() const {
        if (!index_path.empty()) {
            InvertedIndex index = load_index(index_path);
            TokenPolicy policy = index.policy();
            return {std::make_unique<LocalIndexProvider>(std::move(index)), policy};
        }
        return {std::make_unique<SnapshotProvider>(SnapshotTable::load(snapshot_path)),
                TokenPolicy{}};
    }
};

struct OutputArgs {
    std::string format = "table";
    int precision = 2;
    double epsilon = kDefaultEpsilon;
    std::optional<std::uint64_t> universe;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: table, csv or json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        cmd->add_option("--precision", precision, "decimal places in table output")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--epsilon", epsilon,
                        "neutrality band around 1 for classification");
        cmd->add_option("--universe", universe, "override the provider's universe size");
    }

    BoundOptions bound_options() const { return BoundOptions{epsilon, universe}; }
};

int run_index_build(const std::string& corpus_path, const std::string& index_path,
                    bool no_case_fold, bool no_diacritic_fold) {
    TokenPolicy policy;
    policy.case_fold = !no_case_fold;
    policy.diacritic_fold = !no_diacritic_fold;
    IndexBuilder builder(policy);
    Count docs = ingest_corpus(builder, corpus_path);
    if (docs == 0)
        std::cerr << "warning: corpus '" << corpus_path << "' produced an empty index\n";
    InvertedIndex index = std::move(builder).finalize();
    save_index(index, index_path);
    std::cout << "indexed " << index.total_docs() << " documents, "
              << index.term_count() << " distinct terms -> " << index_path << "\n";
    return kExitOk;
}

std::vector<Query> parse_queries(const std::vector<std::string>& args,
                                 const TokenPolicy& policy) {
    std::vector<Query> out;
    out.reserve(args.size());
    for (const auto& a : args) out.push_back(Query::parse(a, policy));
    return out;
}

int run_bound(const ProviderArgs& pa, const OutputArgs& oa, const std::string& a_raw,
              const std::string& b_raw) {
    auto [provider, policy] = pa.make();
    Query a = Query::parse(a_raw, policy);
    Query b = Query::parse(b_raw, policy);
    BoundReport report = bound_report(*provider, a, b, oa.bound_options());
    switch (output_format_from_string(oa.format)) {
        case OutputFormat::Table: std::cout << format_bound_table(report); break;
        case OutputFormat::Csv: std::cout << format_bound_csv(report); break;
        case OutputFormat::Json: std::cout << format_bound_json(report); break;
    }
    return kExitOk;
}

int run_matrix(const ProviderArgs& pa, const OutputArgs& oa,
               const std::vector<std::string>& term_args, bool permissive) {
    auto [provider, policy] = pa.make();
    std::vector<Query> queries = parse_queries(term_args, policy);
    MatrixResult m = compute_matrix(*provider, queries, oa.bound_options(), permissive);
    for (const auto& err : m.cell_errors) std::cerr << "warning: " << err << "\n";
    switch (output_format_from_string(oa.format)) {
        case OutputFormat::Table: std::cout << format_matrix_table(m, oa.precision); break;
        case OutputFormat::Csv: std::cout << format_matrix_csv(m); break;
        case OutputFormat::Json: std::cout << format_matrix_json(m); break;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"co-occurrence meaning-bound measures over a local corpus index "
                 "or a replayed hit-count snapshot"};
    app.require_subcommand(1);

    // index build
    auto* index_cmd = app.add_subcommand("index", "index maintenance");
    index_cmd->require_subcommand(1);
    auto* build_cmd = index_cmd->add_subcommand("build", "build an index from a corpus");
    std::string corpus_path, out_path;
    bool no_case_fold = false, no_diacritic_fold = false;
    build_cmd->add_option("corpus", corpus_path,
                          "directory of text files or a JSON-lines file")
        ->required();
    build_cmd->add_option("output", out_path, "index file to write")->required();
    build_cmd->add_flag("--no-case-fold", no_case_fold, "keep letter case distinct");
    build_cmd->add_flag("--no-diacritic-fold", no_diacritic_fold,
                        "keep diacritics distinct");

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "meaning bound of B with respect to A");
    std::string term_a, term_b;
    bound_cmd->add_option("A", term_a, "reference query (terms split on non-word chars)")
        ->required();
    bound_cmd->add_option("B", term_b, "target query")->required();
    ProviderArgs bound_provider;
    bound_provider.attach(bound_cmd);
    OutputArgs bound_output;
    bound_output.attach(bound_cmd);

    // matrix
    auto* matrix_cmd = app.add_subcommand("matrix", "N x N meaning-bound matrix");
    std::vector<std::string> matrix_terms;
    bool permissive = false;
    matrix_cmd->add_option("terms", matrix_terms, "one query per argument")->required();
    matrix_cmd->add_flag("--permissive", permissive,
                         "emit n/a for failing cells instead of aborting");
    ProviderArgs matrix_provider;
    matrix_provider.attach(matrix_cmd);
    OutputArgs matrix_output;
    matrix_output.attach(matrix_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build_cmd->parsed())
            return run_index_build(corpus_path, out_path, no_case_fold, no_diacritic_fold);
        if (bound_cmd->parsed())
            return run_bound(bound_provider, bound_output, term_a, term_b);
        if (matrix_cmd->parsed())
            return run_matrix(matrix_provider, matrix_output, matrix_terms, permissive);
    } catch (const computation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mbound::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
