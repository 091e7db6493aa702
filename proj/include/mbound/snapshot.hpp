#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbound/measures.hpp"
#include "mbound/query.hpp"

namespace mbound {

// A persisted mapping from canonical count queries to externally reported
// hit counts, replayed against a configured universe size. File format:
//
//   { "universe": 55000000000,
//     "entries": [ {"include": ["bird"], "n": 705008161},
//                  {"include": ["bird"], "exclude": ["world"],
//                   "n": 394003976, "note": "..."} ] }
//
// Keys are canonicalized on load: include and exclude terms sorted and
// de-duplicated; order in the file carries no meaning. When several
// entries share a canonical key the last one is the effective count and
// the earlier ones are kept as annotated alternates (this is how a raw
// engine count and its corrected replacement coexist). Lookups of absent
// keys throw missing_entry_error, never return 0.
class SnapshotTable {
public:
    struct Entry {
        CountQuery query;
        Count n;
        std::string note;
    };

    explicit SnapshotTable(Count universe);

    static SnapshotTable load(const std::filesystem::path& path);
    static SnapshotTable from_json_text(const std::string& text);
    void save(const std::filesystem::path& path) const;
    std::string to_json_text() const;

    void add(CountQuery query, Count n, std::string note = {});

    Count universe() const { return universe_; }
    bool has(const CountQuery& query) const;
    Count at(const CountQuery& query) const;

    // All entries in load order, alternates included.
    const std::vector<Entry>& entries() const { return entries_; }

    // Entries shadowed by a later one with the same canonical key.
    std::vector<const Entry*> alternates(const CountQuery& query) const;

    // True when every stored exclusion partition n(A,B) + n(A,not B) =
    // n(A) is present and holds exactly. A table that fails this carries
    // inconsistent engine counts and must go through the correction path.
    bool partitions_consistent() const;

private:
    Count universe_;
    std::vector<Entry> entries_;
    std::map<CountQuery, std::size_t> effective_;  // key -> index into entries_
};

}  // namespace mbound
