#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lrcq/families.hpp"
#include "lrcq/field.hpp"
#include "lrcq/linear_code.hpp"
#include "lrcq/matrix.hpp"
#include "lrcq/serialize.hpp"

using nlohmann::json;
using lrcq::DistanceBudget;
using lrcq::Field;
using lrcq::FieldPtr;
using lrcq::LinearCode;
using lrcq::Matrix;

namespace {

struct CliResult {
    int status = -1;
    std::string out;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + LRCQ_CLI_PATH + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    size_t nread;
    while ((nread = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, nread);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    out << contents;
}

// The degenerate single-block instance: [6,4,3] over GF(49), (5,2)-optimal.
void write_f711_code(const std::string& path) {
    DistanceBudget budget;
    auto inst = lrcq::build_family1({7, 1, 1, 1}, budget);
    spit(path, lrcq::canonical_dump(lrcq::code_to_json(inst.classical, 3)));
}

}  // namespace

TEST_CASE("cli reports usage and rejects missing subcommands") {
    auto help = run_cli("--help");
    CHECK(help.status == 0);
    CHECK(help.out.find("Usage:") != std::string::npos);

    auto bare = run_cli("");
    CHECK(bare.status == 2);
    CHECK(bare.out.find("subcommand") != std::string::npos);

    auto badfam = run_cli("construct --family 4 --q 7 --u 1 --v 1 --t 1");
    CHECK(badfam.status == 2);
}

TEST_CASE("cli construction is deterministic and certifies its output") {
    auto a = run_cli("construct --family 1 --q 7 --u 1 --v 1 --t 1 --out /tmp/lrcq_cli_a.json");
    CHECK(a.status == 0);
    CHECK(a.out.find("classical [6,4,3]") != std::string::npos);
    CHECK(a.out.find("quantum [[6,2,3]]_7") != std::string::npos);
    CHECK(a.out.find("optimal: yes") != std::string::npos);

    auto b = run_cli("construct --family 1 --q 7 --u 1 --v 1 --t 1 --out /tmp/lrcq_cli_b.json");
    CHECK(b.status == 0);
    CHECK(slurp("/tmp/lrcq_cli_a.json") == slurp("/tmp/lrcq_cli_b.json"));

    auto bad = run_cli("construct --family 1 --q 5 --u 2 --v 2 --t 1");
    CHECK(bad.status == 2);
    CHECK(bad.out.find("InvalidParams") != std::string::npos);
}

TEST_CASE("cli verifies a stored code end to end") {
    write_f711_code("/tmp/lrcq_cli_code.json");
    auto res = run_cli("verify --code /tmp/lrcq_cli_code.json --r 5 --delta 2");
    CHECK(res.status == 0);
    CHECK(res.out.find("code: [6,4] over GF(49)") != std::string::npos);
    CHECK(res.out.find("declared d = 3 matches the computed distance") != std::string::npos);
    CHECK(res.out.find("optimal LRC: yes") != std::string::npos);
    CHECK(res.out.find("quantum: [[6,2,3]]_7, verdict optimal: yes") != std::string::npos);

    auto missing = run_cli("verify --code /tmp/no_such_file.json --r 5 --delta 2");
    CHECK(missing.status == 2);
    CHECK(missing.out.find("error:") != std::string::npos);

    auto strapped = run_cli("--max-subsets 1 verify --code /tmp/lrcq_cli_code.json --r 5 --delta 2");
    CHECK(strapped.status == 3);
    CHECK(strapped.out.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("cli verify accepts explicit repair groups") {
    FieldPtr f2 = Field::create(2, 1);
    LinearCode c642 = LinearCode::from_generator(Matrix::from_rows(
        f2, {{1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 1}, {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}}));
    spit("/tmp/lrcq_cli_642.json", lrcq::canonical_dump(lrcq::code_to_json(c642)));
    spit("/tmp/lrcq_cli_groups.json", "[[1,2,3],[2,4,5,6]]");

    auto res = run_cli(
        "verify --code /tmp/lrcq_cli_642.json --r 3 --delta 2 "
        "--groups /tmp/lrcq_cli_groups.json --form euclidean");
    CHECK(res.status == 0);
    CHECK(res.out.find("optimal LRC: yes") != std::string::npos);
    CHECK(res.out.find("dual-containing (euclidean): no") != std::string::npos);
}

TEST_CASE("cli decomposes the degenerate instance into the truncated form") {
    write_f711_code("/tmp/lrcq_cli_code.json");
    auto res = run_cli("decompose --code /tmp/lrcq_cli_code.json --r 5 --delta 2");
    CHECK(res.status == 0);
    CHECK(res.out.find("case I: 0 repair groups") != std::string::npos);
    CHECK(res.out.find("terminal coordinates: {1,2,3}") != std::string::npos);
    CHECK(res.out.find("residual set U = {4,5,6} (|U| = d = 3)") != std::string::npos);
    CHECK(res.out.find("re-verified: ok") != std::string::npos);
}

TEST_CASE("cli quantization reports the induced parameters or the blocker") {
    write_f711_code("/tmp/lrcq_cli_code.json");
    auto good = run_cli("quantize --code /tmp/lrcq_cli_code.json --r 5 --delta 2");
    CHECK(good.status == 0);
    CHECK(good.out.find("[[6,2,3]]_7 via hermitian construction (d exact)") !=
          std::string::npos);

    FieldPtr f2 = Field::create(2, 1);
    LinearCode c422 =
        LinearCode::from_generator(Matrix::from_rows(f2, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
    spit("/tmp/lrcq_cli_422.json", lrcq::canonical_dump(lrcq::code_to_json(c422)));
    auto blocked = run_cli("quantize --code /tmp/lrcq_cli_422.json --r 2 --delta 2 "
                           "--form euclidean");
    CHECK(blocked.status == 2);
    CHECK(blocked.out.find("NotOptimalLrc") != std::string::npos);
}

TEST_CASE("cli emit renders json idempotently plus text and latex forms") {
    auto made = run_cli("construct --family 1 --q 7 --u 1 --v 1 --t 1 --out /tmp/lrcq_cli_e.json");
    REQUIRE(made.status == 0);
    std::string stored = slurp("/tmp/lrcq_cli_e.json");

    auto rejson = run_cli("emit --in /tmp/lrcq_cli_e.json --format json");
    CHECK(rejson.status == 0);
    CHECK(rejson.out == stored);

    auto text = run_cli("emit --in /tmp/lrcq_cli_e.json --format text");
    CHECK(text.status == 0);
    size_t lines = 0;
    for (char ch : text.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 2);  // n - k parity rows

    auto latex = run_cli("emit --in /tmp/lrcq_cli_e.json --format latex-matrix");
    CHECK(latex.status == 0);
    CHECK(latex.out.find("\\begin{pmatrix}") != std::string::npos);
}

TEST_CASE("cli honors the field-table environment override") {
    // x^4 + 2x + 2 replaces the default GF(81) modulus x^4 + x + 2.
    spit("/tmp/lrcq_cli_table.json", R"([{"p": 3, "m": 4, "modulus": [2, 2, 0, 0, 1]}])");
    auto res = run_cli(
        "construct --family 2 --q 9 --v 8 --s 2 --t 1 --out /tmp/lrcq_cli_alt.json",
        "LRC_FIELD_TABLE=/tmp/lrcq_cli_table.json ");
    CHECK(res.status == 0);
    CHECK(res.out.find("optimal: yes") != std::string::npos);

    json alt = json::parse(slurp("/tmp/lrcq_cli_alt.json"));
    CHECK(alt.at("classical").at("field").at("modulus") == json::array({2, 2, 0, 0, 1}));
    CHECK(alt.at("verdict").at("optimal") == true);

    // The default build uses the table modulus and different element choices.
    auto def = run_cli("construct --family 2 --q 9 --v 8 --s 2 --t 1 --out /tmp/lrcq_cli_def.json");
    CHECK(def.status == 0);
    json dj = json::parse(slurp("/tmp/lrcq_cli_def.json"));
    CHECK(dj.at("classical").at("field").at("modulus") == json::array({2, 1, 0, 0, 1}));
    CHECK(slurp("/tmp/lrcq_cli_alt.json") != slurp("/tmp/lrcq_cli_def.json"));
}
