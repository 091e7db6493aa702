#include "mbound/corpus.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "mbound/errors.hpp"

namespace mbound {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path.string() + "'");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (in.bad()) throw io_error("read failed for '" + path.string() + "'");
    return text;
}

}  // namespace

Count ingest_directory(IndexBuilder& builder, const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) {
                  return a.filename().string() < b.filename().string();
              });
    Count added = 0;
    for (const auto& f : files) {
        try {
            builder.add_document(read_file(f));
        } catch (const encoding_error& e) {
            throw encoding_error("in '" + f.string() + "': " + e.what());
        }
        ++added;
    }
    return added;
}

Count ingest_jsonl(IndexBuilder& builder, const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw io_error("cannot open '" + file.string() + "'");
    std::string line;
    Count added = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto record = nlohmann::json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object() ||
            !record.contains("text") || !record["text"].is_string())
            throw format_error("'" + file.string() + "' line " + std::to_string(line_no) +
                               ": expected a JSON object with a string 'text' field");
        try {
            builder.add_document(record["text"].get<std::string>());
        } catch (const encoding_error& e) {
            throw encoding_error("'" + file.string() + "' line " +
                                 std::to_string(line_no) + ": " + e.what());
        }
        ++added;
    }
    if (in.bad()) throw io_error("read failed for '" + file.string() + "'");
    return added;
}

Count ingest_corpus(IndexBuilder& builder, const std::filesystem::path& path) {
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) return ingest_directory(builder, path);
    if (std::filesystem::is_regular_file(path, ec)) return ingest_jsonl(builder, path);
    throw io_error("corpus path '" + path.string() + "' is not a directory or file");
}

}  // namespace mbound
