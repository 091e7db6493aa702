#pragma once

#include <memory>
#include <optional>
#include <string>

#include "mbound/index.hpp"
#include "mbound/measures.hpp"
#include "mbound/query.hpp"
#include "mbound/snapshot.hpp"

namespace mbound {

enum class ProviderKind { Local, Snapshot };

struct ProviderDescriptor {
    ProviderKind kind;
    bool exact;
    Count universe;
};

// Uniform count oracle. Implementations are immutable after construction
// and safe for concurrent reads.
class CountProvider {
public:
    virtual ~CountProvider() = default;

    virtual Count count(const CountQuery& query) const = 0;
    virtual bool can_count(const CountQuery& query) const = 0;
    virtual Count universe() const = 0;

    // Exact providers satisfy the partition identity
    // n(A,B) + n(A,not B) = n(A) on every query pair; the correction is
    // provably the identity there and is skipped.
    virtual bool exact() const = 0;

    virtual ProviderKind kind() const = 0;

    ProviderDescriptor descriptor() const { return {kind(), exact(), universe()}; }
};

// Answers every query by exact evaluation over a local inverted index.
class LocalIndexProvider : public CountProvider {
public:
    explicit LocalIndexProvider(InvertedIndex index) : index_(std::move(index)) {}

    Count count(const CountQuery& query) const override;
    bool can_count(const CountQuery&) const override { return true; }
    Count universe() const override { return index_.total_docs(); }
    bool exact() const override { return true; }
    ProviderKind kind() const override { return ProviderKind::Local; }

    const InvertedIndex& index() const { return index_; }

private:
    InvertedIndex index_;
};

// Replays stored hit counts verbatim; never fabricates a value for a
// query it has no entry for.
class SnapshotProvider : public CountProvider {
public:
    explicit SnapshotProvider(SnapshotTable table)
        : table_(std::move(table)), exact_(table_.partitions_consistent()) {}

    Count count(const CountQuery& query) const override { return table_.at(query); }
    bool can_count(const CountQuery& query) const override { return table_.has(query); }
    Count universe() const override { return table_.universe(); }
    bool exact() const override { return exact_; }
    ProviderKind kind() const override { return ProviderKind::Snapshot; }

    const SnapshotTable& table() const { return table_; }

private:
    SnapshotTable table_;
    bool exact_;
};

struct BoundOptions {
    double epsilon = kDefaultEpsilon;
    std::optional<Count> universe_override;
};

// Joint count of A and B with the correction applied where it is both
// needed and possible: exact providers return the conjunction count
// unchanged; inexact providers rescale it by n(A) / (n(A,B) + n(A,not B))
// whenever the exclusion count is answerable, and otherwise return the
// stored joint count as the best available estimate.
double resolved_joint_count(const CountProvider& provider, const Query& a, const Query& b);

// Everything a bound computation saw, for reporting.
struct BoundReport {
    std::string label_a;
    std::string label_b;
    Count n_a;
    Count n_b;
    Count n_ab_raw;
    double n_ab_used;
    bool corrected;  // n_ab_used differs from n_ab_raw
    Count universe;
    double relative_weight;  // w(A,B), from the resolved joint count
    double absolute_weight;  // w(www,B)
    MeaningBound bound;
};

BoundReport bound_report(const CountProvider& provider, const Query& a, const Query& b,
                         const BoundOptions& options = {});

// The end-to-end measure: assembles counts from the provider and the
// correction pipeline, then evaluates the bound. A == B short-circuits to
// the self bound with no extra provider round-trip.
MeaningBound bound_between(const CountProvider& provider, const Query& a, const Query& b,
                           const BoundOptions& options = {});

}  // namespace mbound
