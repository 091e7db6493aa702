#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "mbound/corpus.hpp"
#include "mbound/errors.hpp"
#include "mbound/index.hpp"

using namespace mbound;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("directory ingestion follows lexicographic filename order") {
    auto dir = fresh_dir("corpus_order");
    // Creation order deliberately disagrees with name order.
    write_file(dir / "z.txt", "bird");
    write_file(dir / "a.txt", "car");
    write_file(dir / "m.txt", "feather");

    IndexBuilder b;
    CHECK(ingest_directory(b, dir) == 3);
    auto index = std::move(b).finalize();
    REQUIRE(index.postings("car") != nullptr);
    CHECK(*index.postings("car") == std::vector<DocumentId>{0});      // a.txt
    CHECK(*index.postings("feather") == std::vector<DocumentId>{1});  // m.txt
    CHECK(*index.postings("bird") == std::vector<DocumentId>{2});     // z.txt
    fs::remove_all(dir);
}

TEST_CASE("directory ingestion skips non-regular entries") {
    auto dir = fresh_dir("corpus_nested");
    write_file(dir / "doc.txt", "bird");
    fs::create_directories(dir / "subdir");
    IndexBuilder b;
    CHECK(ingest_directory(b, dir) == 1);
    fs::remove_all(dir);
}

TEST_CASE("directory ingestion reports the offending file on bad bytes") {
    auto dir = fresh_dir("corpus_badenc");
    write_file(dir / "good.txt", "bird");
    write_file(dir / "mangled.txt", "ok \xff\xfe bad");
    IndexBuilder b;
    CHECK_THROWS_WITH_AS(ingest_directory(b, dir), doctest::Contains("mangled.txt"),
                         encoding_error);
    fs::remove_all(dir);
}

TEST_CASE("jsonl ingestion follows line order and skips blanks") {
    fs::path file = fs::temp_directory_path() / "corpus_lines.jsonl";
    write_file(file,
               "{\"id\": \"x\", \"text\": \"bird\"}\n"
               "\n"
               "   \n"
               "{\"id\": \"y\", \"text\": \"car\"}\n");
    IndexBuilder b;
    CHECK(ingest_jsonl(b, file) == 2);
    auto index = std::move(b).finalize();
    CHECK(*index.postings("bird") == std::vector<DocumentId>{0});
    CHECK(*index.postings("car") == std::vector<DocumentId>{1});
    fs::remove(file);
}

TEST_CASE("jsonl ingestion errors carry the line number") {
    fs::path file = fs::temp_directory_path() / "corpus_bad.jsonl";

    write_file(file, "{\"id\": \"x\", \"text\": \"fine\"}\nnot json\n");
    IndexBuilder b1;
    CHECK_THROWS_WITH_AS(ingest_jsonl(b1, file), doctest::Contains("line 2"), format_error);

    write_file(file, "{\"id\": \"x\"}\n");
    IndexBuilder b2;
    CHECK_THROWS_WITH_AS(ingest_jsonl(b2, file), doctest::Contains("line 1"), format_error);

    write_file(file, "{\"id\": \"x\", \"text\": 7}\n");
    IndexBuilder b3;
    CHECK_THROWS_AS(ingest_jsonl(b3, file), format_error);

    fs::remove(file);
}

TEST_CASE("ingest_corpus dispatches on the path kind") {
    auto dir = fresh_dir("corpus_dispatch");
    write_file(dir / "a.txt", "bird");
    IndexBuilder b1;
    CHECK(ingest_corpus(b1, dir) == 1);

    fs::path file = fs::temp_directory_path() / "corpus_dispatch.jsonl";
    write_file(file, "{\"id\": \"a\", \"text\": \"bird\"}\n");
    IndexBuilder b2;
    CHECK(ingest_corpus(b2, file) == 1);

    IndexBuilder b3;
    CHECK_THROWS_AS(ingest_corpus(b3, "/nonexistent_corpus"), io_error);

    fs::remove_all(dir);
    fs::remove(file);
}

TEST_CASE("empty inputs build empty indexes") {
    auto dir = fresh_dir("corpus_empty");
    IndexBuilder b;
    CHECK(ingest_directory(b, dir) == 0);
    CHECK(std::move(b).finalize().total_docs() == 0);

    fs::path file = fs::temp_directory_path() / "corpus_empty.jsonl";
    write_file(file, "");
    IndexBuilder b2;
    CHECK(ingest_jsonl(b2, file) == 0);

    fs::remove_all(dir);
    fs::remove(file);
}
