#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = MBOUND_CLI_PATH;
const std::string kSnapshot = std::string(MBOUND_DATA_DIR) + "/yahoo-2010-05-27.json";

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    static int serial = 0;
    fs::path err_path =
        fs::temp_directory_path() / ("mbound_cli_err_" + std::to_string(serial++) + ".txt");
    std::string cmd = kCli + " " + args + " 2>" + err_path.string();
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    std::ifstream err_in(err_path);
    std::stringstream err;
    err << err_in.rdbuf();
    fs::remove(err_path);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, err.str()};
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

// stdout line "key:   value" -> value
std::string field(const std::string& out, const std::string& key) {
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key + ":", 0) == 0) {
            auto pos = line.find_first_not_of(" \t", key.size() + 1);
            return pos == std::string::npos ? "" : line.substr(pos);
        }
    }
    return "";
}

}  // namespace

TEST_CASE("bound against the snapshot") {
    auto r = run_cli("bound car world --snapshot " + kSnapshot);
    CHECK(r.exit_code == 0);
    CHECK(testsup::rel_close(std::stod(field(r.out, "M(A,B)")), 2.189494243, 1e-6));
    CHECK(field(r.out, "class") == "attractive");

    auto v = run_cli("bound voiture car --snapshot " + kSnapshot + " --format json");
    CHECK(v.exit_code == 0);
    auto j = nlohmann::json::parse(v.out);
    CHECK(testsup::rel_close(j["bound"].get<double>(), 3.100388372, 1e-6));
    CHECK(j["class"] == "attractive");

    auto rep = run_cli("bound voiture bird --snapshot " + kSnapshot + " --format csv");
    CHECK(rep.exit_code == 0);
    CHECK(rep.out.find("repulsive") != std::string::npos);
}

TEST_CASE("missing snapshot entries exit 1 naming the query") {
    auto r = run_cli("bound zebra bird --snapshot " + kSnapshot);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("zebra") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("bound car world").exit_code == 2);  // no provider
    CHECK(run_cli("bound car world --snapshot " + kSnapshot + " --index x.idx").exit_code ==
          2);
    CHECK(run_cli("bound car world --snapshot " + kSnapshot + " --format yaml").exit_code ==
          2);
    CHECK(run_cli("bound car world --snapshot /nonexistent.json").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("matrix --snapshot " + kSnapshot).exit_code == 2);  // no terms
}

TEST_CASE("corrupt snapshot file exits 2") {
    fs::path bad = fs::temp_directory_path() / "bad_snapshot.json";
    write_file(bad, "{\"universe\": ");
    CHECK(run_cli("bound a b --snapshot " + bad.string()).exit_code == 2);
    fs::remove(bad);
}

TEST_CASE("index build over a directory, then query") {
    auto dir = fresh_dir("mbound_corpus_dir");
    write_file(dir / "a.txt", "bird feather");
    write_file(dir / "b.txt", "bird");
    write_file(dir / "c.txt", "car");
    fs::path idx = fs::temp_directory_path() / "mbound_dir.idx";

    auto built = run_cli("index build " + dir.string() + " " + idx.string());
    CHECK(built.exit_code == 0);
    CHECK(built.out.find("3 documents") != std::string::npos);
    CHECK(built.out.find("3 distinct terms") != std::string::npos);

    auto r = run_cli("bound bird feather --index " + idx.string());
    CHECK(r.exit_code == 0);
    CHECK(field(r.out, "n(A)") == "2");
    CHECK(field(r.out, "n(B)") == "1");
    CHECK(field(r.out, "n(A,B)") == "1");
    CHECK(field(r.out, "universe") == "3");
    // M = 1*3/(2*1) = 1.5
    CHECK(std::stod(field(r.out, "M(A,B)")) == 1.5);

    // Queries normalize under the stored policy: BIRD matches bird docs.
    auto folded = run_cli("bound BIRD FEATHER --index " + idx.string());
    CHECK(folded.exit_code == 0);
    CHECK(field(folded.out, "n(A)") == "2");

    // Zero-count query errors with the offending term, exit 1.
    auto zero = run_cli("bound zebra bird --index " + idx.string());
    CHECK(zero.exit_code == 1);
    CHECK(zero.err.find("zebra") != std::string::npos);

    fs::remove_all(dir);
    fs::remove(idx);
}

TEST_CASE("index build respects policy flags") {
    auto dir = fresh_dir("mbound_case_dir");
    write_file(dir / "a.txt", "BIRD");
    write_file(dir / "b.txt", "bird");
    fs::path idx = fs::temp_directory_path() / "mbound_case.idx";

    auto built = run_cli("index build " + dir.string() + " " + idx.string() +
                         " --no-case-fold");
    CHECK(built.exit_code == 0);
    auto r = run_cli("bound BIRD bird --index " + idx.string());
    CHECK(r.exit_code == 0);
    CHECK(field(r.out, "n(A)") == "1");
    CHECK(field(r.out, "n(B)") == "1");
    CHECK(field(r.out, "n(A,B)") == "0");
    CHECK(field(r.out, "class") == "repulsive");

    fs::remove_all(dir);
    fs::remove(idx);
}

TEST_CASE("index build over JSON lines") {
    fs::path corpus = fs::temp_directory_path() / "mbound_corpus.jsonl";
    write_file(corpus,
               R"({"id": "d0", "text": "bird feather"})" "\n"
               R"({"id": "d1", "text": "bird"})" "\n"
               "\n"
               R"({"id": "d2", "text": "car"})" "\n");
    fs::path idx = fs::temp_directory_path() / "mbound_jsonl.idx";

    auto built = run_cli("index build " + corpus.string() + " " + idx.string());
    CHECK(built.exit_code == 0);
    CHECK(built.out.find("3 documents") != std::string::npos);

    auto r = run_cli("bound bird feather --index " + idx.string());
    CHECK(field(r.out, "n(A)") == "2");

    write_file(corpus, "{\"id\": \"d0\"}\n");  // missing "text"
    CHECK(run_cli("index build " + corpus.string() + " " + idx.string()).exit_code == 2);

    fs::remove(corpus);
    fs::remove(idx);
}

TEST_CASE("index build edge cases") {
    auto empty = fresh_dir("mbound_empty_dir");
    fs::path idx = fs::temp_directory_path() / "mbound_empty.idx";
    auto r = run_cli("index build " + empty.string() + " " + idx.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0 documents") != std::string::npos);
    CHECK_FALSE(r.err.empty());  // warning about the empty corpus

    auto missing = run_cli("index build /nonexistent_corpus_path " + idx.string());
    CHECK(missing.exit_code == 2);
    CHECK(missing.err.find("/nonexistent_corpus_path") != std::string::npos);

    fs::remove_all(empty);
    fs::remove(idx);
}

TEST_CASE("identical corpus input produces bit-identical index files") {
    auto dir = fresh_dir("mbound_det_dir");
    write_file(dir / "a.txt", "alpha beta gamma");
    write_file(dir / "b.txt", "beta delta");
    fs::path idx1 = fs::temp_directory_path() / "mbound_det1.idx";
    fs::path idx2 = fs::temp_directory_path() / "mbound_det2.idx";
    REQUIRE(run_cli("index build " + dir.string() + " " + idx1.string()).exit_code == 0);
    REQUIRE(run_cli("index build " + dir.string() + " " + idx2.string()).exit_code == 0);

    std::ifstream f1(idx1, std::ios::binary), f2(idx2, std::ios::binary);
    std::stringstream b1, b2;
    b1 << f1.rdbuf();
    b2 << f2.rdbuf();
    CHECK(b1.str() == b2.str());
    CHECK_FALSE(b1.str().empty());

    fs::remove_all(dir);
    fs::remove(idx1);
    fs::remove(idx2);
}

TEST_CASE("matrix output formats and flags") {
    auto table = run_cli("matrix bird feather --snapshot " + kSnapshot + " --precision 2");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("30.92") != std::string::npos);
    CHECK(table.out.find("509.26") != std::string::npos);

    auto json_out =
        run_cli("matrix bird feather --snapshot " + kSnapshot + " --format json");
    auto j = nlohmann::json::parse(json_out.out);
    CHECK(j["terms"][0] == "bird");
    CHECK(testsup::rel_close(j["matrix"][0][1].get<double>(), 30.91859256, 1e-6));

    auto csv = run_cli("matrix bird feather --snapshot " + kSnapshot + " --format csv");
    CHECK(csv.out.rfind(",bird,feather\n", 0) == 0);

    // A failing cell aborts with exit 1 unless --permissive substitutes n/a.
    auto strict = run_cli("matrix bird car --snapshot " + kSnapshot);
    CHECK(strict.exit_code == 1);
    auto permissive = run_cli("matrix bird car --snapshot " + kSnapshot + " --permissive");
    CHECK(permissive.exit_code == 0);
    CHECK(permissive.out.find("n/a") != std::string::npos);
    CHECK(permissive.err.find("bird") != std::string::npos);

    auto precise =
        run_cli("matrix feather --snapshot " + kSnapshot + " --precision 4");
    CHECK(precise.out.find("509.2563") != std::string::npos);
}

TEST_CASE("universe override and epsilon flags") {
    auto r = run_cli("bound car world --snapshot " + kSnapshot +
                     " --universe 110000000000 --format json");
    auto j = nlohmann::json::parse(r.out);
    CHECK(testsup::rel_close(j["bound"].get<double>(), 2.0 * 2.189494242405658, 1e-9));
    CHECK(j["universe"] == 110'000'000'000);

    auto wide = run_cli("bound car world --snapshot " + kSnapshot +
                        " --epsilon 5 --format json");
    auto jw = nlohmann::json::parse(wide.out);
    CHECK(jw["class"] == "neutral");
}

TEST_CASE("multi-term query arguments") {
    auto r = run_cli("\"bound\" \"flying;air\" bird --snapshot " + kSnapshot +
                     " --format json");
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["a"] == "air;flying");
    CHECK(testsup::rel_close(j["bound"].get<double>(), 11.80196318, 1e-6));
}
