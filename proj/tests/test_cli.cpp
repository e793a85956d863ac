// End-to-end checks of the command line tool: output formats, exit codes,
// caching, and the b-file comparison path. Every expected string below was
// captured from a live run and hand-checked against the library fixtures.
#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <dap/json_io.hpp>
#include <dap/oeis.hpp>

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int rc;
    std::string out;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("dap_cli_test_" + std::to_string(static_cast<long>(::getpid())));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

// Run the tool with stdout and stderr folded together; both matter for the
// error-message checks and neither stream should carry stray output.
CliResult run_cli(const std::string& args) {
    static int seq = 0;
    fs::path outfile = scratch_dir() / ("out_" + std::to_string(seq++) + ".txt");
    std::string cmd = std::string(DAP_CLI_PATH) + " " + args + " > " + outfile.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    CliResult r;
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(outfile);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("count formats", "[cli]") {
    auto j = run_cli("count AIR 7");
    CHECK(j.rc == 0);
    CHECK(dap::json::parse(j.out) == dap::json::parse(R"({"family":"AIR","n":7,"count":"17"})"));

    auto c = run_cli("--format csv count AIR 7");
    CHECK(c.rc == 0);
    CHECK(c.out == "family,n,count\nAIR,7,17\n");

    auto p = run_cli("--format plain count AIR 7");
    CHECK(p.rc == 0);
    CHECK(p.out == "17\n");

    CHECK(run_cli("count PRIME 7").out.find("\"count\":\"8\"") != std::string::npos);
    CHECK(run_cli("count MEANDER 6").out.find("\"count\":\"70\"") != std::string::npos);
}

TEST_CASE("enumerate formats and ordering", "[cli]") {
    auto j = run_cli("enumerate AIR 4");
    CHECK(j.rc == 0);
    auto ls = lines_of(j.out);
    REQUIRE(ls.size() == 2);
    CHECK(dap::json::parse(ls[0]) == dap::json::parse(R"({"steps":["U","U","U","D3"]})"));
    CHECK(dap::json::parse(ls[1]) == dap::json::parse(R"({"steps":["U","D","U","D"]})"));

    auto p = run_cli("--format plain enumerate AIR 5");
    CHECK(p.rc == 0);
    CHECK(p.out == "UUUUD4\nUUDUD2\nUUD2UD\nUDUUD2\n");

    auto c = run_cli("--format csv enumerate AIR 4");
    CHECK(c.rc == 0);
    CHECK(c.out == "object\nUUUD3\nUDUD\n");

    // empty families exit cleanly with no output
    auto e = run_cli("enumerate AIR 1");
    CHECK(e.rc == 0);
    CHECK(e.out.empty());

    auto pr = run_cli("--format plain enumerate PRIME 3");
    CHECK(pr.rc == 0);
    CHECK(pr.out == "UUD2\n");
}

TEST_CASE("stat command", "[cli]") {
    auto a = run_cli("stat UUUD2UD2UD PEAK");
    CHECK(a.rc == 0);
    CHECK(dap::json::parse(a.out) ==
          dap::json::parse(R"({"object":"UUUD2UD2UD","stat":"PEAK","value":3})"));

    auto b = run_cli("stat UUUD2UD2UD 'DELTA(2)'");
    CHECK(b.rc == 0);
    CHECK(dap::json::parse(b.out)["value"] == 1);

    auto w = run_cli("stat UFD M_LASTF");
    CHECK(w.rc == 0);
    CHECK(dap::json::parse(w.out) ==
          dap::json::parse(R"({"object":"UFD","stat":"M_LASTF","value":2})"));

    CHECK(run_cli("--format plain stat UFD M_LASTF").out == "2\n");

    // meander letters are not a path or a word
    CHECK(run_cli("stat LLRR M_RET").rc == 2);
    // a word statistic points the parser at words, and D2 is not a word letter
    CHECK(run_cli("stat UUD2 M_LASTF").rc == 2);
    // an ambiguous operand resolves by the statistic's side: UDUD is also a
    // valid word, so a word statistic evaluates on the word reading
    auto amb = run_cli("stat UDUD M_LASTF");
    CHECK(amb.rc == 0);
    CHECK(dap::json::parse(amb.out)["value"] == 0);
}

TEST_CASE("distribution and popularity formats", "[cli]") {
    auto d = run_cli("distribution AIR 6 PEAK");
    CHECK(d.rc == 0);
    CHECK(dap::json::parse(d.out) == dap::json::parse(R"({"1":"1","2":"6","3":"1"})"));

    CHECK(run_cli("--format csv distribution AIR 6 PEAK").out ==
          "value,count\n1,1\n2,6\n3,1\n");
    CHECK(run_cli("--format plain distribution AIR 6 PEAK").out == "1 1\n2 6\n3 1\n");

    auto p = run_cli("popularity AIR 6 PEAK");
    CHECK(p.rc == 0);
    CHECK(dap::json::parse(p.out) ==
          dap::json::parse(R"({"family":"AIR","n":6,"stat":"PEAK","popularity":"16"})"));
    CHECK(run_cli("--format csv popularity AIR 6 PEAK").out ==
          "family,n,stat,popularity\nAIR,6,PEAK,16\n");
    CHECK(run_cli("--format plain popularity AIR 6 PEAK").out == "16\n");
}

TEST_CASE("series command", "[cli]") {
    auto one = run_cli("--order 12 series A --coeff 7");
    CHECK(one.rc == 0);
    CHECK(dap::json::parse(one.out) == dap::json::parse(R"(["17","1"])"));

    auto all = run_cli("--order 6 series A");
    CHECK(all.rc == 0);
    auto arr = dap::json::parse(all.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 7);
    CHECK(arr[5] == dap::json::parse(R"(["4","1"])"));
    CHECK(arr[6] == dap::json::parse(R"(["8","1"])"));

    CHECK(run_cli("--order 6 --format plain series A").out == "0\n0\n1\n1\n2\n4\n8\n");

    auto csv = run_cli("--order 6 --format csv series A");
    auto ls = lines_of(csv.out);
    REQUIRE(ls.size() == 8);
    CHECK(ls[0] == "n,numerator,denominator");
    CHECK(ls[7] == "6,8,1");

    // one deep coefficient to pin the big-number path
    CHECK(run_cli("--order 20 series A --coeff 18").out.find("175502") != std::string::npos);
}

TEST_CASE("grading command", "[cli]") {
    auto c = run_cli("--order 5 grading catalan");
    CHECK(c.rc == 0);
    CHECK(dap::json::parse(c.out) ==
          dap::json::parse(R"([["1","1"],["1","1"],["2","1"],["5","1"],["14","1"],["42","1"]])"));
    CHECK(run_cli("--order 5 --format plain grading riordan").out == "1\n0\n1\n1\n3\n6\n");
    CHECK(run_cli("--order 5 grading nope").rc == 2);
}

TEST_CASE("render ascii and svg", "[cli]") {
    auto a = run_cli("render UUD2");
    CHECK(a.rc == 0);
    CHECK(a.out == " /\\\n/ |\n");

    auto s = run_cli("render UD --style svg");
    CHECK(s.rc == 0);
    CHECK(s.out.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(s.out.find("M 0 24 L 24 0 L 48 24") != std::string::npos);

    auto s2 = run_cli("render UUD2 --style svg");
    CHECK(s2.out.find("M 0 48 L 24 24 L 48 0 L 72 48") != std::string::npos);

    // meanders render as semicircle chains
    auto m = run_cli("render LLRR --style svg");
    CHECK(m.rc == 0);
    CHECK(m.out.find("M 0 0 A 24 24 0 0 0 -48 0 A 24 24 0 0 0 0 0 "
                     "A 24 24 0 0 1 48 0 A 24 24 0 0 1 0 0") != std::string::npos);

    // neither a path nor a meander word
    CHECK(run_cli("render UFD").rc == 2);
    CHECK(run_cli("render UD --style nope").rc == 2);
}

TEST_CASE("oeis embedded fixtures", "[cli]") {
    auto r = run_cli("oeis A004148");
    CHECK(r.rc == 0);
    auto j = dap::json::parse(r.out);
    CHECK(j["id"] == "A004148");
    CHECK(j["source"] == "embedded");
    CHECK(j["compared"] == 18);
    CHECK(j["match"] == true);

    for (const char* id : {"A110320", "A051291", "A203611", "A093128", "A201631", "A098156",
                           "A045891", "A099036", "A175657", "A000108", "A005043", "A001519"}) {
        auto rr = run_cli(std::string("oeis ") + id);
        CHECK(rr.rc == 0);
        CHECK(dap::json::parse(rr.out)["match"] == true);
    }

    CHECK(run_cli("oeis A999999").rc == 2);
}

TEST_CASE("oeis b-file round trip", "[cli]") {
    fs::path good = scratch_dir() / "good.bf";
    std::ofstream(good) << dap::make_bfile("A110320", 10);
    auto r = run_cli("oeis A110320 --bfile " + good.string());
    CHECK(r.rc == 0);
    auto j = dap::json::parse(r.out);
    CHECK(j["compared"] == 10);
    CHECK(j["match"] == true);
    CHECK(j["source"] == good.string());

    // a comment line and blank line are skipped
    fs::path annotated = scratch_dir() / "annotated.bf";
    std::ofstream(annotated) << "# header comment\n\n" << dap::make_bfile("A110320", 6);
    CHECK(run_cli("oeis A110320 --bfile " + annotated.string()).rc == 0);

    // tamper with one value: exit 1 and a pinpointed disagreement
    fs::path bad = scratch_dir() / "bad.bf";
    std::ofstream(bad) << "1 1\n2 2\n3 999\n";
    auto rb = run_cli("oeis A110320 --bfile " + bad.string());
    CHECK(rb.rc == 1);
    auto jb = dap::json::parse(rb.out);
    CHECK(jb["match"] == false);
    CHECK(jb["first_disagreement"] == 3);
    CHECK(jb["expected"] == "999");
    CHECK(jb["actual"] == "5");

    // malformed line: exit 2
    fs::path mal = scratch_dir() / "mal.bf";
    std::ofstream(mal) << "1 one\n";
    CHECK(run_cli("oeis A110320 --bfile " + mal.string()).rc == 2);

    // a file with shifted indices matches once rebased
    fs::path shifted = scratch_dir() / "shifted.bf";
    std::ofstream(shifted) << "5 1\n6 2\n7 5\n";
    CHECK(run_cli("oeis A110320 --bfile " + shifted.string()).rc == 1);
    CHECK(run_cli("oeis A110320 --bfile " + shifted.string() + " --bfile-offset 1").rc == 0);
}

TEST_CASE("cache round trip", "[cli]") {
    fs::path cache = scratch_dir() / "cache";
    fs::remove_all(cache);
    std::string base = "--cache-dir " + cache.string() + " count AIR 9";

    auto first = run_cli(base);
    CHECK(first.rc == 0);
    CHECK(dap::json::parse(first.out)["count"] == "82");
    fs::path entry = cache / "count_AIR_n9.json";
    REQUIRE(fs::exists(entry));
    std::string stored = slurp(entry);
    CHECK(dap::json::parse(stored) ==
          dap::json::parse(R"({"version":1,"payload":{"family":"AIR","n":9,"count":"82"}})"));

    // second run serves the cached payload and leaves the file bit-identical
    auto second = run_cli(base);
    CHECK(second.out == first.out);
    CHECK(slurp(entry) == stored);

    // stale version: recomputed and rewritten at the current version
    std::ofstream(entry) << R"({"version":99,"payload":{"family":"AIR","n":9,"count":"0"}})";
    auto third = run_cli(base);
    CHECK(third.rc == 0);
    CHECK(dap::json::parse(third.out)["count"] == "82");
    CHECK(slurp(entry) == stored);
}

TEST_CASE("verify subcommand", "[cli]") {
    auto r = run_cli("verify bijections --max-n 6");
    CHECK(r.rc == 0);
    auto j = dap::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() >= 10);
    for (const auto& c : j) {
        CHECK(c.contains("name"));
        CHECK(c.contains("bound"));
        CHECK(c["pass"] == true);
    }

    // the table checks need sizes up to 11, so capping lower must fail loudly
    auto t = run_cli("verify tables --max-n 4");
    CHECK(t.rc == 1);
    bool any_fail = false;
    for (const auto& c : dap::json::parse(t.out))
        if (c["pass"] == false) any_fail = true;
    CHECK(any_fail);
}

TEST_CASE("exit codes for bad input", "[cli]") {
    CHECK(run_cli("count NO_SUCH_FAMILY 5").rc == 2);
    CHECK(run_cli("count AIR 99").rc == 2);            // over the resource limit
    CHECK(run_cli("count AIR -1").rc == 2);
    CHECK(run_cli("--format yaml count AIR 5").rc == 2);
    CHECK(run_cli("enumerate PEAKLESS_MOTZKIN -3").rc == 2);

    auto ord = run_cli("--order 3 grading catalan");
    CHECK(ord.rc == 2);
    CHECK(ord.out.find("--order must be at least 4") != std::string::npos);

    CHECK(run_cli("render LRLL --style svg").rc == 2);  // LL after the initial run
    CHECK(run_cli("stat UDUD 'DELTA(0)'").rc == 2);
    CHECK(run_cli("series NO_SUCH_SERIES").rc == 2);
}
