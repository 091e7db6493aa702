#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mbound {

// How raw text becomes terms. Identical text under an identical policy
// always produces the identical term set; the policy travels with the
// index so queries normalize the same way documents did.
struct TokenPolicy {
    bool case_fold = true;
    bool diacritic_fold = true;
    std::string segmentation = "unicode-words";

    bool operator==(const TokenPolicy&) const = default;
};

// Splits UTF-8 text on Unicode word boundaries (maximal runs of letters,
// digits and combining marks), applies the policy's folds, and returns
// the sorted, de-duplicated term set. Numerals are terms. Throws
// encoding_error on invalid UTF-8.
std::vector<std::string> tokenize(std::string_view text, const TokenPolicy& policy = {});

// Folds a single already-segmented term under the policy (case fold and
// diacritic strip only; no word splitting).
std::string fold_term(std::string_view term, const TokenPolicy& policy);

}  // namespace mbound
