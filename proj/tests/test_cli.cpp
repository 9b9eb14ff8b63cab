#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

namespace {

struct Result {
  int code;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("affschur-cli-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(dir_);
    cache_ = (dir_ / "cache.ndjson").string();
    ::setenv("AFFSCHUR_CACHE", cache_.c_str(), 1);
  }
  void TearDown() override {
    ::unsetenv("AFFSCHUR_CACHE");
    std::filesystem::remove_all(dir_);
  }

  Result run(const std::string& args, const std::string& prefix = "") {
    std::string cmd = prefix + "'" AFFSCHUR_CLI_PATH "' " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  std::string file(const std::string& name, const std::string& content) {
    auto p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  std::filesystem::path dir_;
  std::string cache_;
};

}  // namespace

TEST_F(Cli, MultiplyExpressions) {
  auto r = run("--text multiply --n 1 'xi[(1,1)|(1,2)]' 'xi[(1,1)|(1,2)]'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "xi[(1,1)|(1,3)] + 2*xi[(1,1)|(2,2)]\n");
  for (const char* engine : {"schur", "tensor", "all"}) {
    auto e = run(std::string("--text multiply --engine ") + engine + " --n 1 'xi[(1,1)|(1,2)]' 'xi[(1,1)|(1,2)]'");
    EXPECT_EQ(e.code, 0);
    EXPECT_EQ(e.out, r.out);
  }
  EXPECT_TRUE(std::filesystem::exists(cache_));
}

TEST_F(Cli, MultiplyJsonFilesAndPipeline) {
  std::string x = file("x.json", R"({"n":2,"r":2,"terms":[{"coeff":[[0,"1"]],"pairs":[[1,1],[2,1]]}]})");
  std::string y = file("y.json", R"({"n":2,"r":2,"terms":[{"coeff":[[0,"1"]],"pairs":[[1,1],[1,2]]}]})");
  auto direct = run("multiply " + x + " " + y);
  EXPECT_EQ(direct.code, 0);
  EXPECT_EQ(direct.out, R"({"n":2,"r":2,"terms":[{"coeff":[[0,"1"]],"pairs":[[1,1],[2,2]]},{"coeff":[[0,"1"]],"pairs":[[1,2],[2,1]]}]})" "\n");
  auto piped = run("--text multiply - " + y, "cat " + x + " | ");
  EXPECT_EQ(piped.code, 0);
  EXPECT_EQ(piped.out, "xi[(1,2)|(1,2)] + xi[(1,2)|(2,1)]\n");
  auto chained = run("--text multiply - " + y, "'" AFFSCHUR_CLI_PATH "' multiply " + x + " | ");
  EXPECT_EQ(chained.code, 0);
  EXPECT_EQ(chained.out, "xi[(1,2)|(1,2)] + xi[(1,2)|(2,1)]\n");
}

TEST_F(Cli, OtherCommands) {
  EXPECT_EQ(run("weyl --n 2 --perm 2,1 --eps 0,1 --tuple 1,2").out, "[2,3]\n");
  EXPECT_EQ(run("--text lie pi --s 1 --t 2 --n 2 --r 2").out, "xi[(1,1)|(1,2)] + xi[(1,2)|(2,2)]\n");
  EXPECT_EQ(run("--text hom apply --kind psi_as --s 2 --n 2 'xi[(1,2)|(4,-1)]'").out, "xi[(1,2)|(6,-3)]\n");
  EXPECT_EQ(run("--text hom apply --kind det_sharp --n 2 'xi[(1,1,2)|(2,1,2)]'").out, "xi[(1)|(2)]\n");
  std::string g = file("g.json", R"({"n":1,"entries":[[1,1,"2"],[1,2,"3"]]})");
  EXPECT_EQ(run("det --matrix " + g).out, R"({"det":"2 + 3*a"})" "\n");
  EXPECT_EQ(run("--spec-a -1/3 det --matrix " + g).out, R"({"a0":"-1/3","det":"2 + 3*a","special_at_a0":true})" "\n");
  EXPECT_EQ(run("--text eval-semigroup --r 1 --matrix " + g).out, "2*xi[(1)|(1)] + 3*xi[(1)|(2)]\n");
  auto w = run("witness --poly '{\"n\":1,\"r\":1,\"terms\":[{\"coeff\":\"1\",\"pairs\":[[1,3]]}]}'");
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("\"value\""), std::string::npos);
}

TEST_F(Cli, Verify) {
  auto ok = run("verify oracle-equivalence --n 2 --r 2 --window 1");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("\"failed\":0"), std::string::npos);
  EXPECT_EQ(run("verify no-such-suite").code, 1);
}

TEST_F(Cli, UserErrors) {
  EXPECT_EQ(run("multiply --n 1 'xi[(1,1)|(1,2)'").code, 1);
  EXPECT_EQ(run("multiply 'xi[(1,1)|(1,2)]'").code, 1);
  EXPECT_EQ(run("multiply --n 2 'xi[(1)|(1)]' 'xi[(1,1)|(1,1)]'").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("multiply - -", "echo '{}' | ").code, 1);
}

TEST_F(Cli, DecomposeWindow) {
  auto ok = run("decompose --index '[(1,1)|(2,2)]' --using Y --n 2 --window 1");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("\"op\""), std::string::npos);
  EXPECT_EQ(run("decompose --index '[(1,1)|(2,2)]' --using Y --n 2 --window 0").code, 2);
}

TEST_F(Cli, CorruptedCacheIsCaught) {
  {
    std::ofstream out(cache_);
    out << R"({"format":"affschur-structure-cache","version":1})" << "\n";
    out << R"({"n":1,"r":2,"left":[[1,1],[1,2]],"right":[[1,1],[1,2]],"value":[[[[1,1],[1,3]],1]]})" << "\n";
  }
  EXPECT_EQ(run("multiply --n 1 'xi[(1,1)|(1,2)]' 'xi[(1,1)|(1,2)]'").code, 2);
  EXPECT_EQ(run("--no-cache --text multiply --n 1 'xi[(1,1)|(1,2)]' 'xi[(1,1)|(1,2)]'").out,
            "xi[(1,1)|(1,3)] + 2*xi[(1,1)|(2,2)]\n");
  EXPECT_EQ(run("cache clear").out, "{\"removed\":1}\n");
  EXPECT_EQ(run("--text multiply --n 1 'xi[(1,1)|(1,2)]' 'xi[(1,1)|(1,2)]'").code, 0);
  EXPECT_NE(run("cache stats").out.find("\"records\":1"), std::string::npos);
}
