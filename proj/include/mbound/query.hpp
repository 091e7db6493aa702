#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbound/tokenizer.hpp"

namespace mbound {

// A conjunction of normalized terms. Terms are kept sorted and unique;
// duplicates and input order carry no meaning.
class Query {
public:
    // Takes terms as given (sorted + de-duplicated); throws
    // computation_error when the result is empty.
    static Query of(std::vector<std::string> terms);

    // Tokenizes raw text under the policy; "flying;air" becomes the
    // two-term conjunction {air, flying}.
    static Query parse(std::string_view raw, const TokenPolicy& policy = {});

    const std::vector<std::string>& terms() const { return terms_; }

    // Terms joined by ";" for headers and diagnostics.
    std::string label() const;

    Query conjoined_with(const Query& other) const;

    bool operator==(const Query&) const = default;
    bool operator<(const Query& other) const { return terms_ < other.terms_; }

private:
    Query() = default;  // only the factories may build one

    std::vector<std::string> terms_;
};

// A count request: documents matching every include term and, when an
// exclusion is present, not matching the full exclude conjunction.
struct CountQuery {
    Query include;
    std::optional<Query> exclude;

    std::string label() const;

    bool operator==(const CountQuery&) const = default;
    bool operator<(const CountQuery& other) const;
};

}  // namespace mbound
