// End-to-end tests of the pqmet binary: exit codes, output formats,
// reproducibility. The binary path comes from the build system.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef PQMET_CLI_PATH
#error "PQMET_CLI_PATH must point at the pqmet binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(PQMET_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe))
        result.output += buf.data();
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << body;
    return path;
}

const std::string two_point_doc = R"({"points":["a","b"],"matrix":[[0,1],[2,0]]})";

} // namespace

TEST_CASE("solve reaches the fixed point of the example map") {
    const auto r = run("solve paper_example example_map --start 64");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("fixed point: 0") != std::string::npos);
    CHECK(r.output.find("iterations: 4") != std::string::npos);
}

TEST_CASE("solve writes delimited traces") {
    const auto r = run("solve paper_example example_map --start 64 --format delimited");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("iter,point,step_p_plus,self_p", 0) == 0);
    CHECK(r.output.find("0,64,128,64") != std::string::npos);

    const auto trace_file = std::filesystem::temp_directory_path() / "pqmet_trace_test.csv";
    std::filesystem::remove(trace_file);
    const auto r2 = run("solve paper_example example_map --start 64 --trace " +
                        trace_file.string());
    CHECK(r2.exit_code == 0);
    std::ifstream in(trace_file);
    std::string header;
    std::getline(in, header);
    CHECK(header == "iter,point,step_p_plus,self_p");
}

TEST_CASE("delimited output is reserved for traces") {
    CHECK(run("axioms paper_example --format delimited").exit_code == 2);
}

TEST_CASE("a cycling map exhausts the iteration budget") {
    const auto path = write_temp("pqmet_cli_two_point.json", two_point_doc);
    const auto swap = write_temp("pqmet_cli_swap.json", R"({"table":[1,0]})");
    const auto r = run("solve " + path.string() + " " + swap.string() +
                       " --start 0 --max-iter 100");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("no fixed point within 100 iterations") != std::string::npos);
}

TEST_CASE("kannan accepts a working constant") {
    const auto r = run("kannan paper_example example_map --lambda 0.1334");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("result: pass") != std::string::npos);
}

TEST_CASE("kannan estimation flags infeasible maps") {
    const auto path = write_temp("pqmet_cli_two_point.json", two_point_doc);
    const auto id = write_temp("pqmet_cli_id.json", R"({"table":[0,1]})");
    const auto r = run("kannan " + path.string() + " " + id.string() + " --estimate");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("infeasible") != std::string::npos);
}

TEST_CASE("axioms classifies the built-in example as lopsided") {
    const auto r = run("axioms paper_example");
    CHECK(r.exit_code == 1); // (1b) fails, and the report says so
    CHECK(r.output.find("classification: lopsided partial quasi-metric") != std::string::npos);
    CHECK(r.output.find("check 1b: FAIL") != std::string::npos);
}

TEST_CASE("axioms passes a valid finite space") {
    const auto path = write_temp("pqmet_cli_two_point.json", two_point_doc);
    const auto r = run("axioms " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("classification: quasi-metric") != std::string::npos);
}

TEST_CASE("axioms rejects an invalid matrix with exit 1") {
    const auto path = write_temp("pqmet_cli_bad.json",
                                 R"({"points":["a","b"],"matrix":[[1,0],[0,1]]})");
    const auto r = run("axioms " + path.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("classification: invalid") != std::string::npos);
}

TEST_CASE("derived works on finite spaces and reports the lopsided example") {
    const auto path = write_temp("pqmet_cli_two_point.json", two_point_doc);
    CHECK(run("derived " + path.string()).exit_code == 0);
    const auto r = run("derived paper_example");
    CHECK(r.exit_code == 1); // precondition: the space fails its own axioms
    CHECK(r.output.find("fails axiom (1b)") != std::string::npos);
}

TEST_CASE("oracle cross-checks --n against a loaded space") {
    const auto path = write_temp("pqmet_cli_two_point.json", two_point_doc);
    const auto ok = run("oracle --n 2 --space " + path.string() + " --format structured");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"kannan_count\":2") != std::string::npos);
    CHECK(ok.output.find("\"violations\":[]") != std::string::npos);
    CHECK(run("oracle --n 3 --space " + path.string()).exit_code == 2);
    CHECK(run("oracle").exit_code == 2);
    CHECK(run("oracle --n 3").exit_code == 0);
}

TEST_CASE("classify-seq prints the limit verdicts") {
    const auto r =
        run("classify-seq paper_example --seq geometric:0.5 --candidates 0 --horizon 64");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("tau(p)-convergent to: 0") != std::string::npos);
    CHECK(run("classify-seq paper_example --seq nonsense").exit_code == 2);
}

TEST_CASE("probe separates the two built-ins") {
    CHECK(run("probe paper_example").exit_code == 0);
    const auto r = run("probe paper_example_punctured");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("counterexample 'geometric(0.5)'") != std::string::npos);
}

TEST_CASE("converse-demo passes its audit") {
    const auto r = run("converse-demo --samples 2000");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n(0.25) = 8") != std::string::npos);
    CHECK(r.output.find("result: pass") != std::string::npos);
}

TEST_CASE("structured output is byte-identical across runs") {
    const std::string cmd = "axioms paper_example --format structured --samples 2000";
    const auto a = run(cmd);
    const auto b = run(cmd);
    CHECK(a.exit_code == 1);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"command\":\"axioms\"") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("axioms no_such_space").exit_code == 2);
    CHECK(run("kannan paper_example example_map --lambda 0.3").exit_code == 2);
    CHECK(run("").exit_code == 2);
}
