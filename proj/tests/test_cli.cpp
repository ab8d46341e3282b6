#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "jacklaurent/cache.hpp"
#include "jacklaurent/jsonio.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(JACKLAURENT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("jltest" + std::to_string(::getpid()) +
                                            std::to_string(rand()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
};

}  // namespace

TEST_CASE("class command emits the expected class") {
    auto r = run("class --n 1 --m 1 --alpha \"1;1\"");
    CHECK(r.exit_code == 0);
    auto j = jl::Json::parse(r.out);
    CHECK(j.at("r").get<int>() == 1);
    CHECK(j.at("members").size() == 2);

    auto top = run("class --n 2 --m 2 --alpha \";\"");
    CHECK(top.exit_code == 0);
    auto jt = jl::Json::parse(top.out);
    CHECK(jt.at("r").get<int>() == 1);
    CHECK(jt.at("members").size() == 2);
    CHECK(jl::bipartition_from_json(jt.at("members").at(1)) ==
          jl::Bipartition{jl::Partition({2, 2}), jl::Partition({2, 2})});
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("class --n 1 --m 1 --alpha \"oops\"").exit_code == 2);
    CHECK(run("class --n 1 --m 1 --alpha \"1,2;\"").exit_code == 2);  // not weakly decreasing
    CHECK(run("class --n 1 --m 1").exit_code == 2);                   // missing required flag
    CHECK(run("pieri --n 1 --m 1 --alpha \";\" --box 1,1").exit_code == 2);  // not removable
}

TEST_CASE("pieri command reports the simple-pole denominator") {
    auto r = run("pieri --n 1 --m 1 --alpha \";1\" --box 1,1");
    CHECK(r.exit_code == 0);
    auto j = jl::Json::parse(r.out);
    CHECK(j.at("product").get<std::string>() == "(-1*p0)/(k*p0 - k - 1)");
    CHECK(j.at("valuation").get<int>() == -1);
    CHECK(j.at("order_report").at("denominator_zero_order").get<int>() == 1);
}

TEST_CASE("transition and algebra verify and cache") {
    TempDir tmp;
    std::string cache = "--cache-dir " + tmp.path.string();
    auto a = run("transition --n 1 --m 1 --alpha \"1;1\" " + cache);
    CHECK(a.exit_code == 0);
    auto b = run("transition --n 1 --m 1 --alpha \"1;1\" " + cache);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);  // byte-identical via cache
    auto j = jl::Json::parse(a.out);
    CHECK(j.at("matrix").at(0).at(1).get<std::string>() == "(-1*p0)/(k*p0 - k - 1)");
    CHECK(j.at("pole_report").at("all_pass").get<bool>());

    auto alg = run("algebra --n 2 --m 2 --alpha \"1;1\" " + cache);
    CHECK(alg.exit_code == 0);
    auto ja = jl::Json::parse(alg.out);
    CHECK(ja.at("algebra").at("r").get<int>() == 2);
    CHECK(ja.at("algebra").at("relations").at("products_independent").get<bool>());

    // corrupted cache entries are ignored and rewritten
    bool corrupted = false;
    for (auto& entry : fs::directory_iterator(tmp.path)) {
        std::ofstream(entry.path()) << "{not json";
        corrupted = true;
    }
    REQUIRE(corrupted);
    auto c = run("transition --n 1 --m 1 --alpha \"1;1\" " + cache);
    CHECK(c.exit_code == 0);
    CHECK(c.out == a.out);
}

TEST_CASE("probe results live in a separate cache namespace") {
    TempDir tmp;
    std::string cache = "--cache-dir " + tmp.path.string();
    auto exact = run("transition --n 1 --m 1 --alpha \"1;1\" " + cache);
    std::size_t files_after_exact = std::distance(fs::directory_iterator(tmp.path), {});
    auto probe = run("transition --n 1 --m 1 --alpha \"1;1\" --mode probe --seed 5 " + cache);
    std::size_t files_after_probe = std::distance(fs::directory_iterator(tmp.path), {});
    CHECK(probe.exit_code == 0);
    CHECK(files_after_probe == files_after_exact + 1);
    CHECK(probe.out != exact.out);
    // env var overrides the flag
    TempDir other;
    auto env = run("transition --n 1 --m 1 --alpha \"1;1\" " + cache,
                   "JACKLAURENT_CACHE_DIR=" + other.path.string());
    CHECK(env.exit_code == 0);
    CHECK(std::distance(fs::directory_iterator(other.path), {}) == 1);
}

TEST_CASE("render and text output") {
    auto r = run("render --n 1 --m 1 --alpha \"1;1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find('#') != std::string::npos);
    auto t = run("class --n 1 --m 1 --alpha \"1;1\" --out text");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("r = 1") != std::string::npos);
}

TEST_CASE("verify at tiny bounds, deterministic across worker counts") {
    auto one = run("verify --max-n 1 --max-m 1", "JACKLAURENT_JOBS=1");
    CHECK(one.exit_code == 0);
    auto four = run("verify --max-n 1 --max-m 1", "JACKLAURENT_JOBS=4");
    CHECK(four.exit_code == 0);
    CHECK(one.out == four.out);
    auto j = jl::Json::parse(one.out);
    CHECK(j.at("all_passed").get<bool>());
    CHECK(j.at("complete").get<bool>());
    CHECK(j.at("mode").get<std::string>() == "exact");
}
