#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rstep_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream f(dir_ / name);
    f << text;
  }

  Outcome run(const std::string& args) const {
    const std::string err = path("stderr.txt");
    const std::string cmd = std::string(RSTEP_CLI) + " " + args + " 2>" + err;
    FILE* pipe = popen(cmd.c_str(), "r");
    Outcome r{-1, {}, {}};
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err);
    return r;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SsspOnPathWithRhoRadii) {
  write("p.txt", "0 1 2\n1 2 3\n");
  write("r.txt", "0 0\n1 0\n2 0\n");
  const auto a = run("sssp -i " + path("p.txt") + " --radii " + path("r.txt") + " -s 0");
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, "0 0\n1 2\n2 5\n");
  EXPECT_NE(a.err.find("steps"), std::string::npos);
  const auto b = run("sssp -i " + path("p.txt") + " --rho 1 -s 0 --engine ref");
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out, "0 0\n1 2\n2 5\n");
}

TEST_F(Cli, GenThenSssp) {
  const auto g = run("gen --kind grid2d --w 3 --h 3 -o " + path("g.txt"));
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_TRUE(g.out.empty());
  const auto s = run("sssp -i " + path("g.txt") + " --rho 2 -s 0 --engine unweighted --stats " + path("st.csv"));
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.out, "0 0\n1 1\n2 2\n3 1\n4 2\n5 3\n6 2\n7 3\n8 4\n");
  EXPECT_EQ(slurp(path("st.csv")).rfind("i,d_i,active_count,substeps,settled_prefix\n", 0), 0u);
}

TEST_F(Cli, GenIsDeterministic) {
  ASSERT_EQ(run("gen --kind random --n 40 --m 90 --graph-seed 3 --weights 1:50 --seed 2 -o " + path("a.txt")).code, 0);
  ASSERT_EQ(run("gen --kind random --n 40 --m 90 --graph-seed 3 --weights 1:50 --seed 2 -o " + path("b.txt")).code, 0);
  EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));
  const auto adv = run("gen --kind adversarial --d 4 -o " + path("adv.txt"));
  EXPECT_EQ(adv.code, 0);
  EXPECT_NE(adv.err.find("start vertex 0"), std::string::npos);
  EXPECT_EQ(run("gen --kind grid3d --w 2 --h 2 --depth 2 -o " + path("c.txt")).code, 0);
}

TEST_F(Cli, PreprocessThenValidate) {
  ASSERT_EQ(run("gen --kind grid2d --w 6 --h 6 --weights 1:9 --seed 4 -o " + path("g.txt")).code, 0);
  const auto p = run("preprocess -i " + path("g.txt") + " --k 2 --rho 6 --heuristic dp -o " + path("aug.txt") +
                     " --radii " + path("r.txt"));
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_NE(p.err.find("added"), std::string::npos);
  const auto v = run("validate -i " + path("aug.txt") + " --radii " + path("r.txt") + " --k 2 --rho 6");
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_EQ(v.out, "valid: 0 violation(s)\n");
  // the unaugmented graph fails the same check
  const auto bad = run("validate -i " + path("g.txt") + " --radii " + path("r.txt") + " --k 1 --rho 6");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("invalid"), std::string::npos);
}

TEST_F(Cli, Bench) {
  const auto b = run("bench --kind grid2d --w 8 --h 8 --weights 1:20 --rho 1,4 --k 2 --sources 3 -o " + path("b.csv"));
  ASSERT_EQ(b.code, 0) << b.err;
  const std::string csv = slurp(path("b.csv"));
  EXPECT_EQ(csv.rfind("graph,n,m,k,rho,heuristic,added_edge_factor,mean_steps,mean_substeps,reduction_factor\n", 0), 0u);
  EXPECT_NE(b.out.find("reduction"), std::string::npos);

  write("cfg.json", R"({"label": "g", "graph": {"kind": "grid2d", "width": 8, "height": 8},
                        "weights": {"lo": 1, "hi": 20, "seed": 0}, "rho": [1, 4], "k": [2], "sources": 3})");
  const auto c = run("bench --config " + path("cfg.json"));
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out.rfind("graph,n,m,k,rho", 0), 0u);
}

TEST_F(Cli, ErrorsAndExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("sssp --bogus").code, 2);
  EXPECT_EQ(run("gen --kind grid2d --w 3 --h 3").code, 2);  // missing -o
  EXPECT_EQ(run("gen --kind hexagon -o " + path("x.txt")).code, 2);
  const auto missing = run("sssp -i " + path("nope.txt") + " --rho 1 -s 0");
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find(path("nope.txt")), std::string::npos);
  write("z.txt", "0 1 0\n");
  EXPECT_EQ(run("sssp -i " + path("z.txt") + " --rho 1 -s 0").code, 1);
  write("p.txt", "0 1 2\n");
  EXPECT_EQ(run("sssp -i " + path("p.txt") + " --rho 1 -s 5").code, 1);
  EXPECT_EQ(run("sssp -i " + path("p.txt") + " -s 0").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}
