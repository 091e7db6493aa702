#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mbound/measures.hpp"
#include "mbound/query.hpp"
#include "mbound/tokenizer.hpp"

namespace mbound {

// Dense ids assigned in ingestion order, contiguous from 0.
using DocumentId = std::uint32_t;

class InvertedIndex;

// Single-writer accumulation phase. Postings stay strictly ascending by
// construction: documents arrive in id order and tokenize() de-duplicates
// terms within a document.
class IndexBuilder {
public:
    explicit IndexBuilder(TokenPolicy policy = {});

    DocumentId add_document(std::string_view text);

    Count total_docs() const { return total_docs_; }

    // Consumes the builder; the result is immutable and read-safe from
    // any number of threads.
    InvertedIndex finalize() &&;

private:
    TokenPolicy policy_;
    std::unordered_map<std::string, std::vector<DocumentId>> postings_;
    Count total_docs_ = 0;
};

class InvertedIndex {
public:
    static constexpr std::uint32_t kFormatVersion = 1;

    struct TermPostings {
        std::string term;
        std::vector<DocumentId> docs;
    };

    InvertedIndex() = default;

    // Takes ownership of term/posting pairs; used by IndexBuilder and the
    // file loader. Terms are sorted here; postings must already be
    // strictly ascending and < total_docs.
    InvertedIndex(std::vector<TermPostings> terms, Count total_docs, TokenPolicy policy);

    Count total_docs() const { return total_docs_; }
    std::size_t term_count() const { return terms_.size(); }
    const TokenPolicy& policy() const { return policy_; }
    const std::vector<TermPostings>& terms() const { return terms_; }

    // Number of documents whose term set contains `term`; 0 when unknown.
    Count doc_frequency(std::string_view term) const;

    // Documents containing every query term. Lists are intersected
    // smallest-first with galloping search on the longer side; an unknown
    // term makes the count 0.
    Count conjunction_count(const Query& query) const;

    // Documents matching all include terms whose term set does not
    // contain the full exclude conjunction. Excluding terms absent from
    // the corpus excludes nothing.
    Count conjunction_but_not_count(const Query& include, const Query& exclude) const;

    const std::vector<DocumentId>* postings(std::string_view term) const;

private:
    std::vector<TermPostings> terms_;  // sorted by term
    Count total_docs_ = 0;
    TokenPolicy policy_;
};

// Sorted-list intersection used by the index; exposed so the benchmark
// can run it against raw lists.
std::vector<DocumentId> intersect_postings(std::span<const DocumentId> a,
                                           std::span<const DocumentId> b);

}  // namespace mbound
