#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* env = std::getenv("DMORSE_CLI");
    REQUIRE(env != nullptr);
    return env;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "dmorse_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;
    const std::string cmd = "'" + cli_path() + "' " + args + " > '" +
                            out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ','))
        fields.push_back(f);
    return fields;
}

const std::string kSpinArgs =
    "--mode spin --D 4 --r0 1.4 --a 1.2 --m0 10 --A 0.5";

} // namespace

TEST_CASE("solve: roots found, table shape, CSV row parity") {
    const fs::path csv = scratch_dir() / "solve.csv";
    const RunResult r = run(kSpinArgs + " --kappa 1,-2 --n 0,1 solve --out '" +
                            csv.string() + "'");
    CHECK(r.exit_code == 0);
    const auto stdout_lines = lines_of(r.out);
    REQUIRE(stdout_lines.size() >= 2);
    const int data_rows = static_cast<int>(stdout_lines.size()) - 1;
    CHECK(data_rows == 4); // 2 kappa x 2 n

    const auto csv_lines = lines_of(slurp(csv));
    REQUIRE(!csv_lines.empty());
    CHECK(csv_lines[0] == "mode,kappa,ell,ell_tilde,state,E,residual,w1,w2");
    CHECK(static_cast<int>(csv_lines.size()) - 1 == data_rows);
    for (std::size_t i = 1; i < csv_lines.size(); ++i)
        CHECK(split_csv(csv_lines[i]).size() == 9);
}

TEST_CASE("solve: no roots exits 2, missing lists exit 1") {
    const RunResult none =
        run("--preset co --convention raw --mode pdm --kappa -1,-2,-3,-4 "
            "--n 1 solve");
    CHECK(none.exit_code == 2);
    CHECK(!none.err.empty()); // per-pair diagnostics

    const RunResult nolist = run(kSpinArgs + " solve");
    CHECK(nolist.exit_code == 1);
    CHECK(nolist.err.find("kappa") != std::string::npos);
}

TEST_CASE("solve: config file feeds values, flags override, parse errors carry line numbers") {
    const fs::path good = scratch_dir() / "good.conf";
    {
        std::ofstream f(good);
        f << "# spin-mode example\n";
        f << "mode = spin\n";
        f << "D = 4\nr0 = 1.4\na = 1.2\nm0 = 10\nA = 0.5\n";
        f << "kappa = 1\nn = 0\n";
    }
    const RunResult from_file =
        run("--config '" + good.string() + "' solve");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out.find("6.63467261") != std::string::npos);

    // flag wins over the file value: heavier mass moves the level
    const RunResult overridden =
        run("--config '" + good.string() + "' --m0 12 solve");
    CHECK(overridden.exit_code == 0);
    CHECK(overridden.out.find("6.63467261") == std::string::npos);

    const fs::path bad = scratch_dir() / "bad.conf";
    {
        std::ofstream f(bad);
        f << "mode = spin\n";
        f << "this line has no equals sign\n";
    }
    const RunResult broken = run("--config '" + bad.string() + "' solve");
    CHECK(broken.exit_code == 1);
    CHECK(broken.err.find(":2:") != std::string::npos);

    const fs::path unknown = scratch_dir() / "unknown.conf";
    {
        std::ofstream f(unknown);
        f << "frequency = 12\n";
    }
    const RunResult unk = run("--config '" + unknown.string() + "' solve");
    CHECK(unk.exit_code == 1);
    CHECK(unk.err.find("frequency") != std::string::npos);
}

TEST_CASE("wavefunction: row count, s column, coarse normalization") {
    const RunResult two =
        run(kSpinArgs + " --kappa 1 --n 0 --count 2 wavefunction");
    CHECK(two.exit_code == 0);
    const auto two_lines = lines_of(two.out);
    REQUIRE(two_lines.size() == 3);
    CHECK(two_lines[0] == "r,s,value,value_normalized");

    const fs::path csv = scratch_dir() / "wf.csv";
    const RunResult r = run(kSpinArgs +
                            " --kappa 1 --n 1 --rlo 0.05 --rhi 9.0 "
                            "--count 4001 wavefunction --out '" +
                            csv.string() + "'");
    CHECK(r.exit_code == 0);
    const auto csv_lines = lines_of(slurp(csv));
    REQUIRE(csv_lines.size() == 4002);

    double trapezoid = 0.0;
    double prev_r = 0.0, prev_v = 0.0;
    bool have_prev = false;
    for (std::size_t i = 1; i < csv_lines.size(); ++i) {
        const auto f = split_csv(csv_lines[i]);
        REQUIRE(f.size() == 4);
        const double rr = std::stod(f[0]);
        const double s = std::stod(f[1]);
        const double vn = std::stod(f[3]);
        CHECK(std::fabs(s - std::exp(-1.2 * (rr - 1.4))) <=
              1e-12 * std::max(1.0, s));
        if (have_prev)
            trapezoid += 0.5 * (vn * vn + prev_v * prev_v) * (rr - prev_r);
        prev_r = rr;
        prev_v = vn;
        have_prev = true;
    }
    CHECK(std::fabs(trapezoid - 1.0) < 1e-3);

    const RunResult no_state =
        run("--preset co --convention raw --mode pdm --kappa -1 --n 1 "
            "wavefunction");
    CHECK(no_state.exit_code == 2);
}

TEST_CASE("verify: passes cleanly, corrupted energies fail with exit 3") {
    const RunResult ok = run(kSpinArgs + " --kappa 1,-2,2 --n 0,1 verify");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const RunResult corrupted = run(
        kSpinArgs + " --kappa 1 --n 0 --inject-e-error 1e-3 verify");
    CHECK(corrupted.exit_code == 3);
    CHECK(corrupted.out.find("FAIL") != std::string::npos);

    const RunResult skipped =
        run("--preset co --convention raw --mode pdm --kappa -1 --n 1 "
            "verify");
    CHECK(skipped.exit_code == 0);
    CHECK(skipped.out.find("SKIPPED") != std::string::npos);
    CHECK(skipped.out.find("FAIL") == std::string::npos);
}

TEST_CASE("scan-conventions: full report plus honest summary") {
    const fs::path csv = scratch_dir() / "scan.csv";
    const RunResult r =
        run("--preset co scan-conventions --out '" + csv.string() + "'");
    CHECK(r.exit_code == 0);
    const auto csv_lines = lines_of(slurp(csv));
    REQUIRE(csv_lines.size() == 25); // header + 3 conventions x 4 rows x 2 n
    CHECK(r.out.find("6.15913020") != std::string::npos);
    CHECK(r.out.find("7.24974882") != std::string::npos);
    const bool matched = r.out.find("best convention") != std::string::npos;
    const bool unmatched =
        r.out.find("no convention reproduces") != std::string::npos;
    CHECK((matched || unmatched));
    for (const char* target :
         {"6.15913020", "6.52968379", "6.89146288", "7.24974882"}) {
        CHECK(slurp(csv).find(target) != std::string::npos);
    }
}

TEST_CASE("dump-config output re-parses to the same configuration") {
    const fs::path dumped = scratch_dir() / "dumped.conf";
    const RunResult first =
        run(kSpinArgs + " --kappa 1,-2 --n 0,1 --tol 1e-11 dump-config");
    CHECK(first.exit_code == 0);
    {
        std::ofstream f(dumped, std::ios::binary);
        f << first.out;
    }
    const RunResult second =
        run("--config '" + dumped.string() + "' dump-config");
    CHECK(second.exit_code == 0);
    CHECK(second.out == first.out);
}

TEST_CASE("CSV output is bit-stable across runs") {
    const fs::path a = scratch_dir() / "stable_a.csv";
    const fs::path b = scratch_dir() / "stable_b.csv";
    const std::string args =
        kSpinArgs + " --kappa 1,-2,2,-3 --n 0,1 solve --out '";
    CHECK(run(args + a.string() + "'").exit_code == 0);
    CHECK(run(args + b.string() + "'").exit_code == 0);
    const std::string bytes_a = slurp(a);
    CHECK(!bytes_a.empty());
    CHECK(bytes_a == slurp(b));
}
