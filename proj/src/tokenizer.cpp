#include "mbound/tokenizer.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>

#include "mbound/errors.hpp"

#include "unicode_tables.inc"

namespace mbound {

namespace {

bool in_ranges(const CpRange* first, const CpRange* last, char32_t cp) {
    auto it = std::upper_bound(first, last, cp,
                               [](char32_t c, const CpRange& r) { return c < r.lo; });
    return it != first && cp <= std::prev(it)->hi;
}

const CpMap* find_map(const CpMap* first, const CpMap* last, char32_t cp) {
    auto it = std::lower_bound(first, last, cp,
                               [](const CpMap& m, char32_t c) { return m.cp < c; });
    return (it != last && it->cp == cp) ? it : nullptr;
}

bool is_word_cp(char32_t cp) {
    if (cp < 0x80)
        return (cp >= '0' && cp <= '9') || (cp >= 'A' && cp <= 'Z') ||
               (cp >= 'a' && cp <= 'z');
    return in_ranges(std::begin(kWordRanges), std::end(kWordRanges), cp);
}

bool is_mark_cp(char32_t cp) {
    if (cp < 0x300) return false;
    return in_ranges(std::begin(kMarkRanges), std::end(kMarkRanges), cp);
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Decodes one codepoint; rejects overlong forms, surrogates and values
// past U+10FFFF so index files never carry mangled terms.
char32_t decode_utf8(std::string_view text, std::size_t& pos) {
    auto fail = [&](std::size_t at) -> char32_t {
        throw encoding_error("invalid UTF-8 at byte offset " + std::to_string(at));
    };
    std::size_t start = pos;
    std::uint8_t b0 = static_cast<std::uint8_t>(text[pos++]);
    if (b0 < 0x80) return b0;
    int extra;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) { extra = 1; cp = b0 & 0x1F; }
    else if ((b0 & 0xF0) == 0xE0) { extra = 2; cp = b0 & 0x0F; }
    else if ((b0 & 0xF8) == 0xF0) { extra = 3; cp = b0 & 0x07; }
    else return fail(start);
    if (pos + extra > text.size()) return fail(start);
    for (int i = 0; i < extra; ++i) {
        std::uint8_t b = static_cast<std::uint8_t>(text[pos]);
        if ((b & 0xC0) != 0x80) return fail(start);
        cp = (cp << 6) | (b & 0x3F);
        ++pos;
    }
    static constexpr char32_t kMin[4] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra]) return fail(start);               // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) return fail(start);   // surrogate
    if (cp > 0x10FFFF) return fail(start);
    return cp;
}

void append_casefolded(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        append_utf8(out, (cp >= 'A' && cp <= 'Z') ? cp + 32 : cp);
        return;
    }
    if (const CpMap* m = find_map(std::begin(kCaseFold), std::end(kCaseFold), cp)) {
        for (std::uint32_t i = 0; i < m->len; ++i)
            append_utf8(out, kFoldPool[m->offset + i]);
    } else {
        append_utf8(out, cp);
    }
}

// Folds one codepoint into `out`: diacritic strip first (canonical
// decomposition with Mn marks removed), then case folding of whatever
// remains. Standalone combining marks vanish under the diacritic fold.
void fold_cp(std::string& out, char32_t cp, const TokenPolicy& policy) {
    if (policy.diacritic_fold) {
        if (is_mark_cp(cp)) return;
        if (const CpMap* m = find_map(std::begin(kStripDecomp), std::end(kStripDecomp), cp)) {
            for (std::uint32_t i = 0; i < m->len; ++i) {
                char32_t base = kFoldPool[m->offset + i];
                if (policy.case_fold) append_casefolded(out, base);
                else append_utf8(out, base);
            }
            return;
        }
    }
    if (policy.case_fold) append_casefolded(out, cp);
    else append_utf8(out, cp);
}

void check_segmentation(const TokenPolicy& policy) {
    if (policy.segmentation != "unicode-words")
        throw error("unsupported segmentation rule '" + policy.segmentation + "'");
}

}  // namespace

std::string fold_term(std::string_view term, const TokenPolicy& policy) {
    std::string out;
    out.reserve(term.size());
    std::size_t pos = 0;
    while (pos < term.size()) fold_cp(out, decode_utf8(term, pos), policy);
    return out;
}

std::vector<std::string> tokenize(std::string_view text, const TokenPolicy& policy) {
    check_segmentation(policy);
    std::vector<std::string> terms;
    std::string current;
    std::size_t pos = 0;
    while (pos < text.size()) {
        // ASCII fast path: the common case is plain lowercase text.
        char c = text[pos];
        if (static_cast<unsigned char>(c) < 0x80) {
            bool word = (c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') ||
                        (c >= 'a' && c <= 'z');
            if (word) {
                current.push_back((policy.case_fold && c >= 'A' && c <= 'Z') ? c + 32 : c);
            } else if (!current.empty()) {
                terms.push_back(std::move(current));
                current.clear();
            }
            ++pos;
            continue;
        }
        char32_t cp = decode_utf8(text, pos);
        if (is_word_cp(cp)) {
            fold_cp(current, cp, policy);
        } else if (!current.empty()) {
            terms.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) terms.push_back(std::move(current));

    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    return terms;
}

}  // namespace mbound
