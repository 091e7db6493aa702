#include "mbound/index.hpp"

#include <algorithm>
#include <limits>

#include "mbound/errors.hpp"

namespace mbound {

IndexBuilder::IndexBuilder(TokenPolicy policy) : policy_(std::move(policy)) {}

DocumentId IndexBuilder::add_document(std::string_view text) {
    if (total_docs_ > std::numeric_limits<DocumentId>::max())
        throw error("document id space exhausted");
    DocumentId id = static_cast<DocumentId>(total_docs_);
    for (auto& term : tokenize(text, policy_))
        postings_[std::move(term)].push_back(id);
    ++total_docs_;
    return id;
}

InvertedIndex IndexBuilder::finalize() && {
    std::vector<InvertedIndex::TermPostings> terms;
    terms.reserve(postings_.size());
    for (auto& [term, docs] : postings_)
        terms.push_back({term, std::move(docs)});
    postings_.clear();
    return InvertedIndex(std::move(terms), total_docs_, std::move(policy_));
}

InvertedIndex::InvertedIndex(std::vector<TermPostings> terms, Count total_docs,
                             TokenPolicy policy)
    : terms_(std::move(terms)), total_docs_(total_docs), policy_(std::move(policy)) {
    std::sort(terms_.begin(), terms_.end(),
              [](const TermPostings& a, const TermPostings& b) { return a.term < b.term; });
}

const std::vector<DocumentId>* InvertedIndex::postings(std::string_view term) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), term,
                               [](const TermPostings& tp, std::string_view t) {
                                   return tp.term < t;
                               });
    if (it == terms_.end() || it->term != term) return nullptr;
    return &it->docs;
}

Count InvertedIndex::doc_frequency(std::string_view term) const {
    const auto* p = postings(term);
    return p ? p->size() : 0;
}

namespace {

// Gallops through `hay` for the next position with value >= target.
std::size_t gallop_lower_bound(std::span<const DocumentId> hay, std::size_t from,
                               DocumentId target) {
    std::size_t step = 1;
    std::size_t lo = from;
    std::size_t hi = from;
    while (hi < hay.size() && hay[hi] < target) {
        lo = hi + 1;
        hi += step;
        step *= 2;
    }
    if (hi > hay.size()) hi = hay.size();
    return std::lower_bound(hay.begin() + lo, hay.begin() + hi, target) - hay.begin();
}

}  // namespace

std::vector<DocumentId> intersect_postings(std::span<const DocumentId> a,
                                           std::span<const DocumentId> b) {
    if (a.size() > b.size()) std::swap(a, b);
    std::vector<DocumentId> out;
    out.reserve(a.size());
    // Galloping pays off only when the lists are lopsided; otherwise a
    // plain linear merge touches less memory.
    if (b.size() / 16 > a.size()) {
        std::size_t j = 0;
        for (DocumentId v : a) {
            j = gallop_lower_bound(b, j, v);
            if (j == b.size()) break;
            if (b[j] == v) {
                out.push_back(v);
                ++j;
            }
        }
        return out;
    }
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

// Collects posting lists for every term, smallest first. Returns false
// when some term is unknown (the conjunction is empty).
bool gather_sorted(const InvertedIndex& index, const std::vector<std::string>& terms,
                   std::vector<std::span<const DocumentId>>& lists) {
    lists.clear();
    for (const auto& t : terms) {
        const auto* p = index.postings(t);
        if (!p) return false;
        lists.emplace_back(*p);
    }
    std::sort(lists.begin(), lists.end(),
              [](auto a, auto b) { return a.size() < b.size(); });
    return true;
}

std::vector<DocumentId> intersect_all(std::vector<std::span<const DocumentId>>& lists) {
    std::vector<DocumentId> acc(lists.front().begin(), lists.front().end());
    for (std::size_t k = 1; k < lists.size() && !acc.empty(); ++k)
        acc = intersect_postings(acc, lists[k]);
    return acc;
}

}  // namespace

Count InvertedIndex::conjunction_count(const Query& query) const {
    std::vector<std::span<const DocumentId>> lists;
    if (!gather_sorted(*this, query.terms(), lists)) return 0;
    if (lists.size() == 1) return lists.front().size();
    return intersect_all(lists).size();
}

Count InvertedIndex::conjunction_but_not_count(const Query& include,
                                               const Query& exclude) const {
    std::vector<std::span<const DocumentId>> lists;
    if (!gather_sorted(*this, include.terms(), lists)) return 0;
    std::vector<DocumentId> matched = intersect_all(lists);

    // Subtract the documents that also match the full exclude conjunction.
    std::vector<std::span<const DocumentId>> ex;
    if (!gather_sorted(*this, exclude.terms(), ex)) return matched.size();
    std::size_t total = matched.size();
    std::vector<DocumentId> both = std::move(matched);
    for (auto& list : ex) {
        if (both.empty()) break;
        both = intersect_postings(both, list);
    }
    return total - both.size();
}

}  // namespace mbound
