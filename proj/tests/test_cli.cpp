#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string cli_path;

struct RunResult {
    int code = -1;
    std::string output;
};

RunResult run(const std::string& args)
{
    std::string cmd = cli_path + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.output.append(buf.data(), got);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path);
    REQUIRE(f.good());
    f << content;
}

} // namespace

TEST_CASE("generation prints the displayed second-degree polynomial")
{
    RunResult r = run("gen-q --n 2 --l 2 --format text");
    CHECK(r.code == 0);
    CHECK(r.output.find("l1*l2*z1*z2 - l1*z1^2 - l1*z1*z2 - l2*z1*z2 - l2*z2^2 + z1^2 + z1*z2 + z2^2")
          != std::string::npos);

    RunResult p = run("gen-p --n 1 --l 2 --format text");
    CHECK(p.code == 0);
    CHECK(p.output.find("z1^2*mu1_2") != std::string::npos);
}

TEST_CASE("reports are schema-versioned, echo the seed, and are byte-deterministic")
{
    RunResult a = run("gen-q --n 3 --l 3 --seed 42");
    RunResult b = run("gen-q --n 3 --l 3 --seed 42");
    CHECK(a.code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"schema\": 1") != std::string::npos);
    CHECK(a.output.find("\"seed\": 42") != std::string::npos);
    CHECK(a.output.find("\"version\"") != std::string::npos);

    RunResult c = run("verify-small --n 3 --seed 7");
    RunResult d = run("verify-small --n 3 --seed 7");
    CHECK(c.code == 0);
    CHECK(c.output == d.output);
}

TEST_CASE("verification subcommands pass on the supported ranges")
{
    CHECK(run("verify-link --n 3 --l 3").code == 0);
    CHECK(run("verify-small --n 2").code == 0);
    CHECK(run("verify-newton --n 4").code == 0);
    CHECK(run("verify-powersum --n 5").code == 0);
}

TEST_CASE("usage and range errors exit with code 2")
{
    CHECK(run("verify-small --n 5").code == 2);
    CHECK(run("gen-q --n 2").code == 2);          // --l missing
    CHECK(run("").code == 2);                      // subcommand missing
    CHECK(run("gen-q --n 2 --l 2 --format yaml").code == 2);
    CHECK(run("identity-check").code == 2);        // --model missing
}

TEST_CASE("model-driven subcommands")
{
    const std::string model = "/tmp/polyc_cli_model.json";
    write_file(model, R"({"saddles": [{"lambda": "3/2", "c": "1", "corrections": ["1/8"]},
                                      {"lambda": "2", "c": "2"}],
                          "precision_bits": 256, "jet_order": 6})");
    CHECK(run("identity-check --model " + model + " --l 3").code == 0);
    CHECK(run("saddle-limits --model " + model).code == 0);

    const std::string cycle = "/tmp/polyc_cli_cycle.json";
    write_file(cycle, R"({"saddles": [{"lambda": "2"}, {"lambda": "3"}],
                          "precision_bits": 256, "jet_order": 3})");
    RunResult r = run("double-cycle-probe --model " + cycle);
    CHECK(r.code == 0);
    CHECK(r.output.find("\"verdict\": \"pass\"") != std::string::npos);

    const std::string degenerate = "/tmp/polyc_cli_degenerate.json";
    write_file(degenerate, R"({"saddles": [{"lambda": "2"}, {"lambda": "1/2"}],
                               "precision_bits": 256, "jet_order": 3})");
    CHECK(run("double-cycle-probe --model " + degenerate).code == 2);

    const std::string broken = "/tmp/polyc_cli_broken.json";
    write_file(broken, R"({"saddles": [{"c": "1"}]})");
    RunResult bad = run("identity-check --model " + broken);
    CHECK(bad.code == 2);
    CHECK(bad.output.find("lambda") != std::string::npos);

    CHECK(run("identity-check --model /tmp/no_such_model.json").code == 2);
}

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-cli>\n");
        return 2;
    }
    cli_path = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
