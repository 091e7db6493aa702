#pragma once

#include <filesystem>

#include "mbound/index.hpp"

namespace mbound {

// Directory of UTF-8 plain-text files, one document per file, ingested in
// lexicographic filename order. Non-regular files are skipped.
Count ingest_directory(IndexBuilder& builder, const std::filesystem::path& dir);

// JSON-lines file: one record per line with fields "id" (string,
// informational) and "text" (string), ingested in line order. Blank lines
// are skipped.
Count ingest_jsonl(IndexBuilder& builder, const std::filesystem::path& file);

// Dispatches on the path: directory or JSON-lines file.
Count ingest_corpus(IndexBuilder& builder, const std::filesystem::path& path);

}  // namespace mbound
