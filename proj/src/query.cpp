#include "mbound/query.hpp"

#include <algorithm>

#include "mbound/errors.hpp"

namespace mbound {

Query Query::of(std::vector<std::string> terms) {
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    if (terms.empty()) throw computation_error("query has no terms");
    Query q;
    q.terms_ = std::move(terms);
    return q;
}

Query Query::parse(std::string_view raw, const TokenPolicy& policy) {
    auto terms = tokenize(raw, policy);
    if (terms.empty())
        throw computation_error("query '" + std::string(raw) + "' has no terms");
    Query q;
    q.terms_ = std::move(terms);
    return q;
}

std::string Query::label() const {
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += ';';
        out += t;
    }
    return out;
}

Query Query::conjoined_with(const Query& other) const {
    std::vector<std::string> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_union(terms_.begin(), terms_.end(), other.terms_.begin(),
                   other.terms_.end(), std::back_inserter(merged));
    Query q;
    q.terms_ = std::move(merged);
    return q;
}

std::string CountQuery::label() const {
    std::string out = include.label();
    if (exclude) {
        out += " NOT ";
        out += exclude->label();
    }
    return out;
}

bool CountQuery::operator<(const CountQuery& other) const {
    if (include < other.include) return true;
    if (other.include < include) return false;
    static const std::vector<std::string> kNone;
    const auto& a = exclude ? exclude->terms() : kNone;
    const auto& b = other.exclude ? other.exclude->terms() : kNone;
    return a < b;
}

}  // namespace mbound
