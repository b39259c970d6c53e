#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef LASK_BIN
#error "LASK_BIN must point at the command line binary"
#endif

namespace {

struct RunResult {
    int code;
    std::string out;
};

// Run the binary with the given arguments, capturing stdout (stderr is
// folded in only when merge_stderr is set so frozen outputs stay clean).
RunResult run(const std::string& args, bool merge_stderr = false,
              const std::string& stdin_text = "") {
    std::string cmd;
    if (!stdin_text.empty()) cmd += "printf '%s' '" + stdin_text + "' | ";
    cmd += std::string(LASK_BIN) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

const std::string kWorkedTableau =
    R"({"shape":[3,2,1],"cells":[[[1],[1,3],[3,6]],[[2,3],[4,7]],[[5,6,7]]]})";

const std::string kFrozen102 =
    "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x1*x3^2 + b^1*x1^2*x2^2 + "
    "2*b^1*x1^2*x2*x3 + b^1*x1^2*x3^2 + b^1*x1*x2^2*x3 + b^1*x1*x2*x3^2 + "
    "b^2*x1^2*x2^2*x3 + b^2*x1^2*x2*x3^2\n";

}  // namespace

TEST_CASE("cli: polynomial subcommands print frozen expansions") {
    CHECK(run("lascoux --alpha 2,1").out == "x1^2*x2\n");
    CHECK(run("lascoux --alpha 2,1").code == 0);

    auto both = run("lascoux --alpha 1,0,2 --method both");
    CHECK(both.code == 0);
    CHECK(both.out == kFrozen102);
    // byte-for-byte determinism across runs
    CHECK(run("lascoux --alpha 1,0,2 --method both").out == both.out);

    CHECK(run("lascoux --alpha 0,1 --format latex").out ==
          "x_1 + x_2 + \\beta x_1 x_2\n");
    CHECK(run("key --alpha 1,0,2 --method both").out ==
          "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x1*x3^2\n");
    CHECK(run("atom --alpha 1,0,2 --method both").code == 0);
    CHECK(run("grothendieck --lambda 2,1 --n 2 --method both").out ==
          "x1^2*x2 + x1*x2^2 + b^1*x1^2*x2^2\n");

    auto js = run("lascoux --alpha 0,1 --format json");
    auto parsed = nlohmann::json::parse(js.out);
    CHECK(parsed["n"] == 2);
    CHECK(parsed["terms"].size() == 3);
}

TEST_CASE("cli: enumeration counts and listings") {
    CHECK(run("svt --alpha 1,0,2 --count").out == "13\n");
    CHECK(run("svt --alpha 1,0,2 --ssyt --count").out == "5\n");
    CHECK(run("svt --alpha 1,0,2 --atoms --count").out == "8\n");
    CHECK(run("svt --alpha 0,1 --format plain").out == "[1]\n[2]\n[{1,2}]\n");

    // every JSON line round trips through the parser unchanged
    auto listed = run("svt --alpha 1,0,2");
    CHECK(listed.code == 0);
    std::istringstream lines(listed.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::ordered_json::parse(line);
        CHECK(j.dump() == line);
        CHECK(j["shape"].is_array());
        ++count;
    }
    CHECK(count == 13);
}

TEST_CASE("cli: right keys read tableaux from stdin or a file") {
    auto piped = run("rightkey --oracle --format plain", false, kWorkedTableau);
    CHECK(piped.code == 0);
    CHECK(piped.out == "[3,6,6] / [6,7] / [7]\n");

    auto tmp = std::filesystem::temp_directory_path() / "lask_cli_rk.json";
    {
        std::ofstream f(tmp);
        f << kWorkedTableau << "\n";
    }
    CHECK(run("rightkey " + tmp.string()).out ==
          R"({"shape":[3,2,1],"cells":[[[3],[6],[6]],[[6],[7]],[[7]]]})"
          "\n");
    std::filesystem::remove(tmp);

    CHECK(run("rightkey", false, "not json").code == 1);
}

TEST_CASE("cli: crystal graphs come out as DOT") {
    auto dot = run("crystal --alpha 0,1");
    CHECK(dot.code == 0);
    CHECK(dot.out.find("digraph crystal {") == 0);
    CHECK(dot.out.find("[label=\"[1]\"]") != std::string::npos);
    CHECK(dot.out.find("[label=\"[2]\"]") != std::string::npos);
    CHECK(dot.out.find("[label=\"[{1,2}]\"]") != std::string::npos);
    int solid = 0, dashed = 0;
    for (size_t p = 0; (p = dot.out.find("style=solid", p)) != std::string::npos; ++p) ++solid;
    for (size_t p = 0; (p = dot.out.find("style=dashed", p)) != std::string::npos; ++p) ++dashed;
    CHECK(solid == 1);   // the full lowering step
    CHECK(dashed == 2);  // its two halves
    CHECK(run("crystal --alpha 0,1 --lambda 1 --n 2", true).code == 1);
}

TEST_CASE("cli: self verification gates the exit code") {
    auto ok = run("verify --max-support 2 --max-entry 2 --max-n 3 --samples 5");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("[FAIL]") == std::string::npos);
    CHECK(ok.out.find("[PASS] lascoux-svt-rule") != std::string::npos);
    CHECK(ok.out.find("[PASS] operator-algebra") != std::string::npos);

    auto bad = run(
        "verify --inject-fault --max-support 2 --max-entry 2 --max-n 3 --samples 5");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("[FAIL] lascoux-svt-rule") != std::string::npos);
}

TEST_CASE("cli: bad invocations exit with a usage error") {
    CHECK(run("", true).code == 1);
    CHECK(run("--nope", true).code == 1);
    CHECK(run("lascoux", true).code == 1);
    CHECK(run("lascoux --alpha banana", true).code == 1);
    CHECK(run("lascoux --alpha 1,0,2 --n 2", true).code == 1);
    CHECK(run("lascoux --alpha -1,2", true).code == 1);
    CHECK(run("svt --alpha 1 --ssyt --atoms", true).code == 1);
    CHECK(run("grothendieck --lambda 1,2 --n 2", true).code == 1);
    CHECK(run("--help").code == 0);
    CHECK(run("lascoux --help").code == 0);
}

TEST_CASE("cli: --out writes the file instead of stdout") {
    auto tmp = std::filesystem::temp_directory_path() / "lask_cli_out.txt";
    std::filesystem::remove(tmp);
    auto r = run("lascoux --alpha 2,1 --out " + tmp.string());
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(tmp);
    std::string content((std::istreambuf_iterator<char>(f)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "x1^2*x2\n");
    std::filesystem::remove(tmp);
}
