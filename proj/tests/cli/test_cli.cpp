#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(NCDIOPH_BIN) + " " + args + " 2>&1";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ncdioph_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }

  static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, Chebyshev) {
  auto r = run("chebyshev --kind U --n 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2*t\n");
  EXPECT_EQ(run("chebyshev --kind T --n 2").out, "2*t^2 - 1\n");
  EXPECT_EQ(run("chebyshev --kind X --n 2").code, 1);
  EXPECT_EQ(run("chebyshev --n 2").code, 1);
}

TEST_F(Cli, PellCheck) {
  auto ok = run("pell --check \"2*t^2-1\" \"2*t\"");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "OK\n");
  auto bad = run("pell --check \"t\" \"t\"");
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.out, "FAIL\n");
}

TEST_F(Cli, PellFamily) {
  auto r = run("pell --family 0 1 + +");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("OK"), std::string::npos);
  EXPECT_NE(r.out.find("t^-1"), std::string::npos);
  EXPECT_EQ(run("pell --family 0 1 + x").code, 1);
}

TEST_F(Cli, PellList) {
  auto r = run("pell --n-max 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2*t^2 - 1"), std::string::npos);
}

TEST_F(Cli, CompileWithWitness) {
  auto in = file("h10.eq", "structure int; x1^2 = 4;\n");
  auto r = run("compile --target \"freealg(Q;a,b)\" " + in + " --witness \"x1=2\"");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  auto bad = run("compile --target \"freealg(Q;a,b)\" " + in + " --witness \"x1=3\"");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("not a source solution"), std::string::npos);
}

TEST_F(Cli, CompileIsDeterministicAndWritesProvenance) {
  auto in = file("h10.eq", "structure int; x1 + x2 = 3; x1*x2 = 2;\n");
  auto o1 = (dir_ / "a.eq").string(), o2 = (dir_ / "b.eq").string();
  ASSERT_EQ(run("compile --target \"poly(Q;t)\" " + in + " -o " + o1).code, 0);
  ASSERT_EQ(run("compile --target \"poly(Q;t)\" " + in + " -o " + o2).code, 0);
  EXPECT_EQ(slurp(o1), slurp(o2));
  EXPECT_FALSE(slurp(o1).empty());
  EXPECT_TRUE(fs::exists(o1 + ".provenance.json"));
  EXPECT_EQ(slurp(o1 + ".provenance.json"), slurp(o2 + ".provenance.json"));
  // The compiled output is itself a parseable system.
  auto again = run("solve " + o1 + " --mode field");
  EXPECT_EQ(again.code, 1);
  EXPECT_NE(again.out.find("error"), std::string::npos);
}

TEST_F(Cli, CompileCharPIsOutOfScope) {
  auto in = file("h10.eq", "structure int; x1 = 1;\n");
  auto r = run("compile --target \"freealg(F5;a)\" " + in);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("out of scope: char-p construction"), std::string::npos);
}

TEST_F(Cli, SolveWidth) {
  auto in = file("comm.eq", "structure freealg(F2; a, b); x1*a - a*x1 = 0;\n");
  auto r = run("solve --mode width --bound 1 --wordlen 2 " + in);
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("SAT", 0), 0u);
  auto again = run("solve --mode width --bound 1 --wordlen 2 " + in);
  EXPECT_EQ(r.out, again.out);
  auto all = run("solve --mode width --bound 1 --wordlen 2 --max-witnesses 0 --format json " + in);
  EXPECT_EQ(all.code, 0);
  EXPECT_NE(all.out.find("\"status\""), std::string::npos);
  EXPECT_NE(all.out.find("a^2"), std::string::npos);
}

TEST_F(Cli, SolveExitCodes) {
  auto unsat = file("u.eq", "structure freealg(F2; a); x1 + x1 = a;\n");
  EXPECT_EQ(run("solve --mode degree --bound 1 " + unsat).code, 3);
  auto bound = file("b.eq", "structure freealg(F2; a, b); x1 = a*a*b;\n");
  auto r = run("solve --mode width --bound 1 --wordlen 1 " + bound);
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out.rfind("UNSAT_WITHIN_BOUNDS", 0), 0u);
  auto unknown = file("f.eq", "structure field(Q); x1^2 = 2;\n");
  EXPECT_EQ(run("solve --mode field " + unknown).code, 4);
  auto konly = file("k.eq", "structure freealg(Q; a); x1^2 = 4;\n");
  EXPECT_EQ(run("solve --mode degree --bound 0 " + konly).code, 0);
}

TEST_F(Cli, SolveModeMismatch) {
  auto in = file("z.eq", "structure int; x1 = 1;\n");
  EXPECT_EQ(run("solve --mode degree " + in).code, 1);
  auto fa = file("fa.eq", "structure freealg(Q; a); x1 = a;\n");
  EXPECT_EQ(run("solve --mode length " + fa).code, 1);
  EXPECT_EQ(run("solve --mode nope " + fa).code, 1);
}

TEST_F(Cli, SolveLength) {
  auto in = file("g.eq", "structure groupalg(F2; freegroup(2)); x1*a = a*x1;\n");
  EXPECT_EQ(run("solve --mode length --bound 1 " + in).code, 0);
  auto ww = file("w.eq", "structure groupalg(Q; freegroup(2)); a*b*a^-1*b^-1 = 1;\n");
  EXPECT_EQ(run("solve --mode length --bound 2 " + ww).code, 3);
}

TEST_F(Cli, Wordsolve) {
  auto in = file("we.eq", "x1 a = a x1\n");
  auto r = run("wordsolve " + in + " --maxlen 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("4 solutions", 0), 0u) << r.out;
  auto none = file("none.eq", "alphabet a b\nx1 b = a x1\n");
  EXPECT_EQ(run("wordsolve " + none + " --maxlen 4").code, 3);
}

TEST_F(Cli, ParseErrorsAndMissingFiles) {
  auto in = file("bad.eq", "structure int; x1 + = 0;\n");
  auto r = run("compile --target \"poly(Q;t)\" " + in);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("error"), std::string::npos);
  EXPECT_EQ(run("solve /nonexistent/file.eq --mode degree").code, 1);
  EXPECT_EQ(run("").code, 1);
}

TEST_F(Cli, ThreadsVariableIsValidated) {
  auto in = file("we.eq", "x1 a = a x1\n");
  EXPECT_EQ(run("wordsolve " + in + " --maxlen 1").code, 0);
  std::string cmd = "NCDIOPH_THREADS=zero " + std::string(NCDIOPH_BIN) + " wordsolve " + in + " --maxlen 1 >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 1);
  cmd = "NCDIOPH_THREADS=4 " + std::string(NCDIOPH_BIN) + " wordsolve " + in + " --maxlen 1 >/dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
}
