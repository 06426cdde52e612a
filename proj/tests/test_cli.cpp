// Drives the installed binary end to end: exit-code contract, JSON shapes,
// determinism, CSV traces.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string temp_path(const char* suffix) {
    static int counter = 0;
    return "/tmp/nonadd_cli_test_" + std::to_string(getpid()) + "_" +
           std::to_string(counter++) + suffix;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_path = temp_path(".out");
    std::string cmd = std::string(NONADD_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(out_path.c_str());
    return r;
}

std::string scenario(const std::string& name) {
    return std::string(NONADD_SCENARIO_DIR) + "/" + name + ".json";
}

}  // namespace

TEST_CASE("exit codes encode the verdict") {
    auto gould = run("integrate " + scenario("example4_12") + " --engine gould");
    CHECK(gould.exit_code == 2);
    CHECK(gould.out.find("\"divergent\"") != std::string::npos);

    auto rl = run("integrate " + scenario("example4_12") + " --engine rl");
    CHECK(rl.exit_code == 0);
    CHECK(rl.out.find("\"value\"") != std::string::npos);
    CHECK(rl.out.find("\"num\": 0") != std::string::npos);

    auto zero = run("integrate " + scenario("zero_function") + " --engine gould");
    CHECK(zero.exit_code == 0);

    auto missing = run("integrate /no/such/file.json --engine rl");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("the counterexample certificate lists sigma = 1..K") {
    auto gould = run("integrate " + scenario("example4_12") + " --engine gould --json");
    CHECK(gould.exit_code == 2);
    CHECK(gould.out.find("\"certificate\"") != std::string::npos);
    CHECK(gould.out.find("\"num\":1") != std::string::npos);
    CHECK(gould.out.find("\"num\":13") != std::string::npos);
}

TEST_CASE("byte-identical output for identical invocations") {
    std::string cmd = "integrate " + scenario("pointmass_geometric") + " --engine gould --json";
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    auto v1 = run("verify --profile omega --count 2 --seed 7");
    auto v2 = run("verify --profile omega --count 2 --seed 7");
    CHECK(v1.exit_code == 0);
    CHECK(v1.out == v2.out);
}

TEST_CASE("integration over a restricted set") {
    auto evens = run("integrate " + scenario("pointmass_geometric") + " --engine rl --set evens --json");
    CHECK(evens.exit_code == 0);
    CHECK(evens.out.find("\"num\":2,\"den\":3") != std::string::npos);
}

TEST_CASE("variation command and its exit codes") {
    auto fin = run("variation " + scenario("finite_table"));
    CHECK(fin.exit_code == 0);

    // additive weights (1,2,3): variation of the ground set is exactly 6
    auto six = run("variation " + scenario("pointmass_123") + " --json");
    CHECK(six.exit_code == 0);
    CHECK(six.out.find("\"num\":6,\"den\":1") != std::string::npos);

    auto inf = run("variation " + scenario("example4_12") + " --json");
    CHECK(inf.exit_code == 0);
    CHECK(inf.out.find("\"inf\"") != std::string::npos);

    auto sub = run("variation " + scenario("example4_12") + " --set finite:[0,1,2]");
    CHECK(sub.exit_code == 0);
    CHECK(sub.out.find("\"num\": 0") != std::string::npos);
}

TEST_CASE("verify writes a machine-readable report") {
    std::string report = temp_path(".json");
    auto v = run("verify --profile finite --count 2 --seed 3 --report " + report);
    CHECK(v.exit_code == 0);
    std::ifstream in(report);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("\"theorem\": \"T3.7-linearity\"") != std::string::npos);
    CHECK(ss.str().find("\"failures\": []") != std::string::npos);
    std::remove(report.c_str());
}

TEST_CASE("verdicts do not depend on the thread count") {
    std::string cmd_tail = std::string(NONADD_CLI_PATH) + " integrate " +
                           scenario("pointmass_geometric") + " --engine gould --json";
    std::string one_thread = temp_path(".out"), many = temp_path(".out");
    REQUIRE(std::system(("OMP_NUM_THREADS=1 " + cmd_tail + " > " + one_thread).c_str()) == 0);
    REQUIRE(std::system(("OMP_NUM_THREADS=2 " + cmd_tail + " > " + many).c_str()) == 0);
    std::ifstream a(one_thread), b(many);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
    std::remove(one_thread.c_str());
    std::remove(many.c_str());
}

TEST_CASE("properties and atoms commands") {
    auto props = run("properties " + scenario("example4_12") + " --json");
    CHECK(props.exit_code == 0);
    CHECK(props.out.find("\"monotone\":{\"verdict\":\"proved\"") != std::string::npos);
    CHECK(props.out.find("\"finitely-additive\":{\"verdict\":\"refuted\"") != std::string::npos);

    auto atoms = run("atoms " + scenario("finite_table"));
    CHECK(atoms.exit_code == 0);

    auto atoms_omega = run("atoms " + scenario("example4_12"));
    CHECK(atoms_omega.exit_code == 4);
}

TEST_CASE("verify command exits zero on the default corpus") {
    auto v = run("verify --count 3 --seed 20240811");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("E4.12-counterexample") != std::string::npos);
    CHECK(v.out.find("0 failed") != std::string::npos);
}

TEST_CASE("trace writes a strictly increasing sigma column for the counterexample") {
    std::string csv = temp_path(".csv");
    auto t = run("trace " + scenario("example4_12") + " --engine gould --csv " + csv);
    CHECK(t.exit_code == 2);
    std::ifstream in(csv);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "step,k_blocks,sigma_0,radius");
    double prev = -1;
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string step, blocks, sigma, radius;
        std::getline(ss, step, ',');
        std::getline(ss, blocks, ',');
        std::getline(ss, sigma, ',');
        std::getline(ss, radius, ',');
        double s = std::stod(sigma);
        CHECK(s > prev);
        prev = s;
        ++rows;
    }
    CHECK(rows >= 11);
    std::remove(csv.c_str());
}

TEST_CASE("budget environment variable changes the probe depth") {
    std::string csv = temp_path(".csv");
    std::string cmd = std::string("NONADD_BUDGET=depth=15,chains=4 ") + NONADD_CLI_PATH +
                      " trace " + scenario("example4_12") + " --engine gould --csv " + csv +
                      " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    std::ifstream in(csv);
    int rows = -1;  // discount header
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 16);
    std::remove(csv.c_str());
}
