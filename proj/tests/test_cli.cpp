#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// End-to-end checks of the command-line surface: exit codes and output
// formats, run against the installed binary.

namespace {

std::string g_cli;
std::filesystem::path g_dir;

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    const std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_file(const std::string& name, const std::string& text) {
    const auto path = g_dir / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("classify reports the class and witness") {
    const auto file = write_file("wheel.graph",
                                 "undirected\n5 8\n1 2\n2 3\n3 4\n4 1\n"
                                 "1 5\n2 5\n3 5\n4 5\n");
    const RunResult r = run("classify " + file);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("positively_regularizable") == 0);
    CHECK(r.output.find("witness r = ") != std::string::npos);

    const RunResult json = run("classify --json " + file);
    CHECK(json.exit_code == 0);
    CHECK(json.output.find("\"category\": \"positively_regularizable\"") !=
          std::string::npos);
}

TEST_CASE("classify surfaces certificates") {
    const auto file = write_file("star.graph", "undirected\n4 3\n1 2\n1 3\n1 4\n");
    const RunResult r = run("classify " + file);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("not_regularizable") == 0);
    CHECK(r.output.find("certificate: unbalanced bipartite component") !=
          std::string::npos);
}

TEST_CASE("weights exit codes distinguish predicate failures from bad input") {
    const auto tri = write_file("triangle.graph", "undirected\n3 3\n1 2\n2 3\n3 1\n");
    CHECK(run("weights " + tri + " --class positive").exit_code == 0);
    CHECK(run("weights " + tri + " --class best").exit_code == 0);
    CHECK(run("weights " + tri + " --class regular").exit_code == 0);

    const auto star = write_file("star2.graph", "undirected\n4 3\n1 2\n1 3\n1 4\n");
    CHECK(run("weights " + star + " --class arbitrary").exit_code == 1);
    CHECK(run("weights " + star + " --class best").exit_code == 1);

    const auto broken = write_file("broken.graph", "undirected\n2 1\n1 5\n");
    CHECK(run("weights " + broken + " --class best").exit_code == 2);
    CHECK(run("weights " + tri).exit_code == 2);  // missing --class
    CHECK(run("classify /nonexistent.graph").exit_code == 2);
}

TEST_CASE("weights then verify round-trips through files") {
    const auto file = write_file("dpos.graph",
                                 "directed\n4 7\n1 1\n1 2\n2 1\n2 3\n3 4\n4 3\n4 2\n");
    const RunResult w = run("weights " + file + " --class positive");
    REQUIRE(w.exit_code == 0);
    const auto witness = write_file("dpos.witness", w.output);
    const RunResult v = run("verify " + file + " --witness " + witness);
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("witness accepted") != std::string::npos);

    // a tampered degree must be rejected with exit 1
    std::string bad = w.output;
    const auto r_at = bad.find("\nr ");
    REQUIRE(r_at != std::string::npos);
    bad.replace(r_at, bad.find('\n', r_at + 1) - r_at, "\nr 999983");
    const auto tampered = write_file("bad.witness", bad);
    const RunResult rej = run("verify " + file + " --witness " + tampered);
    CHECK(rej.exit_code == 1);
    CHECK(rej.output.find("witness rejected") != std::string::npos);
}

TEST_CASE("kernel command emits the null-strength witness") {
    const auto chair = write_file("chair.graph",
                                  "undirected\n5 5\n1 2\n2 3\n3 4\n4 1\n5 1\n");
    const RunResult r = run("kernel " + chair);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("class kernel\nr 0\n") == 0);
    CHECK(r.output.find("1 1 2 1\n") != std::string::npos);
    CHECK(r.output.find("2 2 3 -1\n") != std::string::npos);

    const auto verify = run("verify " + chair + " --witness " +
                            write_file("chair.witness", r.output));
    CHECK(verify.exit_code == 0);

    const auto tree = write_file("tree.graph", "undirected\n4 3\n1 2\n1 3\n1 4\n");
    CHECK(run("kernel " + tree).exit_code == 1);
}

TEST_CASE("canonical prints blocks and permutations") {
    const auto file = write_file("twoclass.graph",
                                 "directed\n4 6\n1 2\n2 3\n3 1\n3 4\n4 2\n4 3\n");
    const RunResult r = run("canonical " + file);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("blocks: 3x2 1x2\n") == 0);
    CHECK(r.output.find("row order: 1 2 4 3") != std::string::npos);
    CHECK(r.output.find("column order: 2 3 1 4") != std::string::npos);
    CHECK(r.output.find("all blocks square: no") != std::string::npos);

    const auto sink = write_file("sink.graph", "directed\n2 2\n1 1\n1 2\n");
    CHECK(run("canonical " + sink).exit_code == 1);
}

TEST_CASE("lp writes the model to a file") {
    const auto tri = write_file("tri2.graph", "undirected\n3 3\n1 2\n2 3\n3 1\n");
    const auto out = (g_dir / "model.lp").string();
    CHECK(run("lp " + tri + " --class positive -o " + out).exit_code == 0);
    std::ifstream in(out);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(text.find("Subject To") != std::string::npos);
    CHECK(text.find(" w1 >= 1") != std::string::npos);
    CHECK(text.find(" r free") != std::string::npos);
}

TEST_CASE("vuln prints the value and witness") {
    const auto star = write_file("star3.graph", "undirected\n4 3\n1 2\n1 3\n1 4\n");
    const RunResult r = run("vuln " + star);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "vulnerability = 2\nwitness S = 2 3 4\n");
    CHECK(run("vuln " + star + " --max-n 3").exit_code == 2);
}

TEST_CASE("dot renders weighted edges from a witness file") {
    const auto chair = write_file("chair2.graph",
                                  "undirected\n5 5\n1 2\n2 3\n3 4\n4 1\n5 1\n");
    const RunResult k = run("kernel " + chair);
    REQUIRE(k.exit_code == 0);
    const auto witness = write_file("chair2.witness", k.output);
    const RunResult r = run("dot " + chair + " --witness " + witness);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("graph G {") == 0);
    CHECK(r.output.find("[label=\"-1\"]") != std::string::npos);
}

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (argv[i][0] != '-') g_cli = argv[i];
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-regraph-binary>\n");
        return 1;
    }
    g_dir = std::filesystem::temp_directory_path() / "regraph_cli_test";
    std::filesystem::create_directories(g_dir);
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);  // keep the binary path away from doctest
    const int rc = ctx.run();
    std::filesystem::remove_all(g_dir);
    return rc;
}
