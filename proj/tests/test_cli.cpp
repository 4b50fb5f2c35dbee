#include "fibpoly/family.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string("\"") + FIBPOLY_CLI_PATH + "\" " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) {
        lines.push_back(cur);
    }
    return lines;
}

std::filesystem::path write_temp_config(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("cli list") {
    const CliResult r = run_cli("list");
    CHECK(r.exit_code == 0);
    CHECK(lines_of(r.out).size() == 16);  // header + 15 families

    const CliResult lucas = run_cli("list --kind lucas");
    CHECK(lines_of(lucas.out).size() == 9);

    const CliResult js = run_cli("list --format json");
    CHECK(js.exit_code == 0);
    const auto loaded = fibpoly::load_families(js.out);
    REQUIRE(loaded.size() == 15);
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        CHECK(loaded[i] == fibpoly::builtin_families()[i]);
    }
}

TEST_CASE("cli gen golden terms") {
    const CliResult r = run_cli("gen --family fibonacci --from 1 --to 5");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "1: 1");
    CHECK(lines[1] == "2: x");
    CHECK(lines[2] == "3: x^2 + 1");
    CHECK(lines[3] == "4: x^3 + 2*x");
    CHECK(lines[4] == "5: x^4 + 3*x^2 + 1");

    CHECK(run_cli("gen --family fibonacci --from 0 --to 0").out == "0: 0\n");
    CHECK(run_cli("gen --family pell --from 4 --to 4").out == "4: 8*x^3 + 4*x\n");
}

TEST_CASE("cli gen method paths agree") {
    const CliResult it = run_cli("gen --family jacobsthal-lucas --from 0 --to 10 --method iter");
    const CliResult mp = run_cli("gen --family jacobsthal-lucas --from 0 --to 10 --method matpow");
    CHECK(it.exit_code == 0);
    CHECK(mp.exit_code == 0);
    CHECK(it.out == mp.out);

    // above the threshold a single term takes the matrix route by default
    const auto js = run_cli("gen --family pell --from 80 --to 80 --format json");
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["method"] == "matpow");
    const auto js2 = run_cli("gen --family pell --from 1 --to 4 --format json");
    CHECK(nlohmann::json::parse(js2.out)["method"] == "iter");
}

TEST_CASE("cli gen json carries ascending coefficient arrays") {
    const CliResult r = run_cli("gen --family fibonacci --from 5 --to 5 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["terms"].size() == 1);
    CHECK(doc["terms"][0]["n"] == 5);
    CHECK(doc["terms"][0]["text"] == "x^4 + 3*x^2 + 1");
    const auto coeffs = doc["terms"][0]["coeffs"];
    const std::vector<std::string> expected{"1", "0", "3", "0", "1"};
    REQUIRE(coeffs.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(coeffs[i] == expected[i]);
    }
}

TEST_CASE("cli gen usage errors") {
    CHECK(run_cli("gen --family fibonacci --from 5 --to 1").exit_code == 2);
    CHECK(run_cli("gen --family no-such-family --from 1 --to 2").exit_code == 2);
    CHECK(run_cli("gen --family fibonacci").exit_code == 2);
}

TEST_CASE("cli eval") {
    CHECK(run_cli("eval --family fibonacci --n 5 --at 1").out == "5\n");
    CHECK(run_cli("eval --family fibonacci --n 0 --at 7/3").out == "0\n");
    CHECK(run_cli("eval --family jacobsthal-lucas --n 2 --at 1/2").out == "2\n");
    CHECK(run_cli("eval --family pell --n 30 --at -3/7 --method both").exit_code == 0);
    CHECK(run_cli("eval --family fibonacci --n 5 --at nonsense").exit_code == 2);

    const CliResult js = run_cli("eval --family fibonacci --n 5 --at 1 --format json");
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["value"] == "5");
    CHECK(doc["n"] == 5);
    CHECK(doc["at"] == "1");
}

TEST_CASE("cli qpow") {
    CHECK(run_cli("qpow --family pell --n 1").out == "[[2*x, 1], [1, 0]]\n");
    CHECK(run_cli("qpow --family fibonacci --n 0").out == "[[1, 0], [0, 1]]\n");
    CHECK(run_cli("qpow --family fibonacci --n 2").out == "[[x^2 + 1, x], [x, 1]]\n");

    const CliResult js = run_cli("qpow --family fibonacci --n 2 --format json");
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["matrix"][0][0] == "x^2 + 1");
    CHECK(doc["matrix"][1][1] == "1");
}

TEST_CASE("cli check selections") {
    const CliResult one =
        run_cli("check --identity fib_cassini --family jacobsthal --max-n 10");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("PASS") != std::string::npos);
    CHECK(one.out.find("jacobsthal") != std::string::npos);

    CHECK(run_cli("check").exit_code == 2);

    const CliResult bad = run_cli("check --identity not_an_identity", true);
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("fib_cassini") != std::string::npos);
    CHECK(bad.out.find("mixed_docagne") != std::string::npos);

    const CliResult fam = run_cli("check --family pell --max-n 6 --max-m 6 --max-p 2");
    CHECK(fam.exit_code == 0);

    const CliResult p0 = run_cli("check --identity fib_binomial --family fibonacci --max-n 6 "
                                 "--max-p 2 --experimental-p0 --format json");
    CHECK(p0.exit_code == 0);
    const auto p0_doc = nlohmann::json::parse(p0.out);
    CHECK(p0_doc[0]["range"] == "0 <= n <= 6, 0 <= p <= 2");
    CHECK(p0_doc[0]["status"] == "PASS");
}

TEST_CASE("cli check --all is green and deterministic") {
    const std::string args = "check --all --max-n 6 --max-m 6 --max-p 2 --format json";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const auto doc = nlohmann::json::parse(a.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 15 * 16);
    for (const auto& row : doc) {
        CHECK(row["status"] != "FAIL");
        if (row["status"] == "SKIPPED") {
            CHECK(row["reason"].is_string());
        } else {
            CHECK(row["reason"].is_null());
        }
    }
}

TEST_CASE("cli check text and json carry the same rows") {
    const std::string args = "check --family fibonacci --max-n 4 --max-m 4 --max-p 1";
    const CliResult txt = run_cli(args);
    const CliResult js = run_cli(args + " --format json");
    const auto doc = nlohmann::json::parse(js.out);
    for (const auto& row : doc) {
        const std::string identity = row["identity"].get<std::string>();
        const std::string status = row["status"].get<std::string>();
        CHECK(txt.out.find(identity) != std::string::npos);
        CHECK(txt.out.find(status) != std::string::npos);
        CHECK(txt.out.find(row["range"].get<std::string>()) != std::string::npos);
    }
}

TEST_CASE("cli config files") {
    const auto good = write_temp_config("fibpoly_good_config.json", R"([
        {"name": "half-pell", "kind": "fibonacci", "a": "1/2", "c": "2x", "d": "1"}
    ])");
    const CliResult gen =
        run_cli("gen --family half-pell --from 1 --to 3 --config \"" + good.string() + "\"");
    CHECK(gen.exit_code == 0);
    CHECK(lines_of(gen.out).size() == 3);

    const CliResult check = run_cli("check --family half-pell --max-n 8 --max-m 8 --max-p 2 "
                                    "--config \"" +
                                    good.string() + "\"");
    CHECK(check.exit_code == 0);

    const CliResult listed = run_cli("list --config \"" + good.string() + "\" --format json");
    CHECK(fibpoly::load_families(listed.out).size() == 16);

    // invariant violations are config errors, surfaced before any checking
    const auto bad = write_temp_config("fibpoly_bad_config.json", R"([
        {"name": "degenerate", "kind": "fibonacci", "a": "1", "c": "x", "d": "0"}
    ])");
    const CliResult broken = run_cli("check --all --config \"" + bad.string() + "\"", true);
    CHECK(broken.exit_code == 2);
    CHECK(broken.out.find("d(x)") != std::string::npos);

    CHECK(run_cli("list --config /no/such/file.json").exit_code == 2);
}

TEST_CASE("cli bench") {
    const CliResult trivial = run_cli("bench --family pell --n 1 --at 0");
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.out.find("agree: true") != std::string::npos);

    const CliResult js = run_cli("bench --family fibonacci --n 4000 --at 1 --format json");
    CHECK(js.exit_code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["agree"] == true);
    CHECK(doc["iteration"]["recurrence_steps"] == 3999);
    CHECK(doc["matrix"]["matrix_mults"].get<std::uint64_t>() <= 2 * 12 + 2);
    CHECK(doc["matrix"]["big_mults"].get<std::uint64_t>() <
          doc["iteration"]["big_mults"].get<std::uint64_t>());

    CHECK(run_cli("bench --family pell --n 0 --at 1").exit_code == 2);
}
