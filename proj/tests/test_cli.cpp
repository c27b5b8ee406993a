#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

// Runs the built binary through the shell, capturing standard output only.
CmdResult run(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + RYSER_CLI_PATH + " " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string first_line(const std::string& s) {
    size_t nl = s.find('\n');
    return nl == std::string::npos ? s : s.substr(0, nl);
}

bool contains(const std::string& s, const std::string& needle) {
    return s.find(needle) != std::string::npos;
}

int line_count(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

std::string corpus_file(const std::string& name) {
    return std::string(RYSER_CORPUS_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("solve on files and constructions") {
    CmdResult r = run("solve tau " + corpus_file("f7.rhg"));
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "tau = 6");
    CHECK(contains(r.out, "cover = "));

    CHECK(first_line(run("solve nu " + corpus_file("f6.rhg")).out) == "nu = 1");
    CHECK(first_line(run("solve taustar --construct pg 2").out) == "tau* = 7/3");
    CHECK(first_line(run("solve nustar --construct f7").out) == "nu* = 203/48");
    CHECK(first_line(run("solve taus --construct f6").out) == "tau_s = 1");
    CHECK(first_line(run("solve biased --construct biased 4").out) == "biased = 4/3");
    CHECK(first_line(run("solve avoiding --construct biased 4").out) == "avoiding = 4");

    CmdResult greedy = run("solve greedy --construct onefact 5");
    CHECK(greedy.exit_code == 0);
    CHECK(contains(first_line(greedy.out), "greedy = "));
}

TEST_CASE("input format handling") {
    {
        std::ofstream out("cli_triangle.dig");
        out << "112 121 211\n";
    }
    CmdResult dig = run("solve tau cli_triangle.dig");
    CHECK(dig.exit_code == 0);
    CHECK(first_line(dig.out) == "tau = 2");

    {
        std::ofstream out("cli_triangle.txt");
        out << "112 121 211\n";
    }
    CHECK(run("solve tau cli_triangle.txt").exit_code == 2);
    CHECK(first_line(run("solve tau cli_triangle.txt --format dig").out) == "tau = 2");

    CHECK(run("solve tau cli_missing_file.rhg").exit_code == 2);
    CHECK(run("solve tau cli_triangle.dig --construct f6").exit_code == 2);
    CHECK(run("solve biased --construct pg 2").exit_code == 2);
}

TEST_CASE("construct output") {
    CmdResult tpp = run("construct tpp 3");
    CHECK(tpp.exit_code == 0);
    CHECK(first_line(tpp.out) == "4 3 3 3 3");
    CHECK(line_count(tpp.out) == 10);

    CHECK(run("construct f6").out == read_file(corpus_file("f6.rhg")));
    CHECK(run("construct f7").out == read_file(corpus_file("f7.rhg")));

    CmdResult pg = run("construct pg 2");
    CHECK(first_line(pg.out) == "general 7");
    CHECK(line_count(pg.out) == 8);

    CHECK(line_count(run("construct oval 3").out) == 7);

    CmdResult a = run("construct random-intersecting 3 5 4 --seed 9");
    CmdResult b = run("construct random-intersecting 3 5 4 --seed 9");
    CmdResult c = run("construct random-intersecting 3 5 4 --seed 10");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);

    CmdResult sub = run("construct random-subset 3 4 --seed 2");
    CHECK(first_line(sub.out) == "4 3 3 3 3");
    CHECK(line_count(sub.out) == 5);

    CHECK(run("construct nosuch").exit_code == 2);
    CHECK(run("construct tpp").exit_code == 2);
    CHECK(run("construct tpp x").exit_code == 2);
    CHECK(run("construct tpp 6").exit_code == 2);
}

TEST_CASE("verify suites") {
    CmdResult pe = run("verify paper-examples --machine");
    CHECK(pe.exit_code == 0);
    CHECK(contains(pe.out, "paper-examples/f7/tau = PASS"));
    CHECK(contains(pe.out, "paper-examples/f7/no-5-cover = PASS"));
    CHECK(contains(pe.out, "paper-examples/f6linear/linear = PASS"));
    CHECK(contains(pe.out, "\nverify = PASS\n"));

    CmdResult ce = run("verify counterexamples --machine");
    CHECK(ce.exit_code == 0);
    CHECK(contains(ce.out, "counterexamples/biased-5/avoiding-cover-size = PASS"));
    CHECK(contains(ce.out, "counterexamples/expside-4/edge-minus-v1-never-covers = PASS"));

    CmdResult lem = run("verify lemmas --machine");
    CHECK(lem.exit_code == 0);
    CHECK(contains(lem.out, "lemmas/onefact-7/structure = PASS"));

    CHECK(run("verify bogus-suite").exit_code == 2);
}

TEST_CASE("bound output") {
    CHECK(run("bound 8 --machine").out == "summands = 1 2 2 2 3 3 5\nlb_f = 18\n");
    CHECK(contains(run("bound 7 --machine").out, "lb_f = 14"));
    CHECK(contains(run("bound 10 --machine").out, "lb_f = 24"));
    CHECK(contains(run("bound 2").out, "= 1"));
    CHECK(run("bound 1").exit_code == 2);
}

TEST_CASE("search") {
    CmdResult absent = run("search 4 5 3 --machine");
    CHECK(absent.exit_code == 0);
    CHECK(absent.out == "found = no\nclasses = 62\n");

    CHECK(run("search 4 5 3 --reverse --machine").out == absent.out);

    CmdResult found = run("search 3 4 2 --machine");
    CHECK(found.exit_code == 0);
    CHECK(contains(found.out, "found = yes"));
    CHECK(contains(found.out, "witness_tau = 2"));

    CHECK(run("search 5 5 3").exit_code == 2);
    CHECK(run("search 4 7 3").exit_code == 2);
    CHECK(run("search 4 6 3 --long-running --machine", "RYSER_BUDGET_MS=1").exit_code == 2);
}

TEST_CASE("experiment") {
    CmdResult probe = run("experiment random-tpp 6 20 --trials 200 --machine");
    CHECK(probe.exit_code == 0);
    CHECK(probe.out ==
          "hits = 199\ntrials = 200\nfraction = 199/200\n"
          "note = empirical probe: asymptotic theorem not verifiable at desk scale\n");
    CHECK(run("experiment random-tpp 6 20 --trials 200 --machine").out == probe.out);

    CHECK(contains(run("experiment random-tpp 4 9 --trials 3 --machine").out, "fraction = 1\n"));
    CHECK(contains(run("experiment random-tpp 4 1 --trials 3 --machine").out, "fraction = 0\n"));

    CHECK(run("experiment random-tpp 6 26").exit_code == 2);
    CHECK(run("experiment bogus 6 20").exit_code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(run("").exit_code == 2);
    CHECK(run("solve frob cli_triangle.dig").exit_code == 2);
    CHECK(run("verify").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("solve --help").exit_code == 0);
}
