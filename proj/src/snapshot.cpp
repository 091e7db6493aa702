#include "mbound/snapshot.hpp"

#include <fstream>

#include <json.hpp>

#include "mbound/errors.hpp"

namespace mbound {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> term_array(const json& j, const char* field) {
    if (!j.is_array() || j.empty())
        throw format_error(std::string("snapshot entry field '") + field +
                           "' must be a non-empty array of terms");
    std::vector<std::string> terms;
    terms.reserve(j.size());
    for (const auto& t : j) {
        if (!t.is_string())
            throw format_error(std::string("snapshot entry field '") + field +
                               "' must contain only strings");
        terms.push_back(t.get<std::string>());
    }
    return terms;
}

Count count_field(const json& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<Count>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
        return static_cast<Count>(j.get<std::int64_t>());
    throw format_error(std::string("snapshot field '") + what +
                       "' must be a non-negative integer");
}

}  // namespace

SnapshotTable::SnapshotTable(Count universe) : universe_(universe) {
    if (universe_ == 0)
        throw format_error("snapshot universe size must be at least 1");
}

void SnapshotTable::add(CountQuery query, Count n, std::string note) {
    entries_.push_back(Entry{std::move(query), n, std::move(note)});
    effective_[entries_.back().query] = entries_.size() - 1;
}

bool SnapshotTable::has(const CountQuery& query) const {
    return effective_.count(query) != 0;
}

Count SnapshotTable::at(const CountQuery& query) const {
    auto it = effective_.find(query);
    if (it == effective_.end())
        throw missing_entry_error("snapshot has no entry for query '" +
                                  query.label() + "'");
    return entries_[it->second].n;
}

std::vector<const SnapshotTable::Entry*> SnapshotTable::alternates(
    const CountQuery& query) const {
    std::vector<const Entry*> out;
    auto it = effective_.find(query);
    if (it == effective_.end()) return out;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (i != it->second && entries_[i].query == query)
            out.push_back(&entries_[i]);
    return out;
}

bool SnapshotTable::partitions_consistent() const {
    for (const auto& [key, idx] : effective_) {
        if (!key.exclude) continue;
        CountQuery joint{key.include.conjoined_with(*key.exclude), std::nullopt};
        CountQuery single{key.include, std::nullopt};
        if (!has(joint) || !has(single)) return false;  // unverifiable partition
        if (at(joint) + entries_[idx].n != at(single)) return false;
    }
    return true;
}

SnapshotTable SnapshotTable::from_json_text(const std::string& text) {
    json root = json::parse(text, nullptr, false);
    if (root.is_discarded() || !root.is_object())
        throw format_error("snapshot is not a JSON object");
    if (!root.contains("universe"))
        throw format_error("snapshot is missing the 'universe' field");
    Count universe = count_field(root["universe"], "universe");
    if (universe == 0) throw format_error("snapshot universe size must be at least 1");

    SnapshotTable table(universe);
    if (!root.contains("entries") || !root["entries"].is_array())
        throw format_error("snapshot is missing the 'entries' array");
    for (const auto& e : root["entries"]) {
        if (!e.is_object() || !e.contains("include") || !e.contains("n"))
            throw format_error("snapshot entry needs 'include' and 'n' fields");
        Query include = Query::of(term_array(e["include"], "include"));
        std::optional<Query> exclude;
        if (e.contains("exclude"))
            exclude = Query::of(term_array(e["exclude"], "exclude"));
        CountQuery q{std::move(include), std::move(exclude)};
        Count n = count_field(e["n"], "n");
        std::string note;
        if (e.contains("note")) {
            if (!e["note"].is_string())
                throw format_error("snapshot entry field 'note' must be a string");
            note = e["note"].get<std::string>();
        }
        table.add(std::move(q), n, std::move(note));
    }
    return table;
}

std::string SnapshotTable::to_json_text() const {
    json root;
    root["universe"] = universe_;
    json entries = json::array();
    for (const auto& e : entries_) {
        json je;
        je["include"] = e.query.include.terms();
        if (e.query.exclude) je["exclude"] = e.query.exclude->terms();
        je["n"] = e.n;
        if (!e.note.empty()) je["note"] = e.note;
        entries.push_back(std::move(je));
    }
    root["entries"] = std::move(entries);
    return root.dump(2) + "\n";
}

SnapshotTable SnapshotTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open snapshot file '" + path.string() + "'");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (in.bad()) throw io_error("read failed for '" + path.string() + "'");
    try {
        return from_json_text(text);
    } catch (const format_error& e) {
        throw format_error("in snapshot '" + path.string() + "': " + e.what());
    }
}

void SnapshotTable::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
    out << to_json_text();
    if (!out) throw io_error("write failed for '" + path.string() + "'");
}

}  // namespace mbound
