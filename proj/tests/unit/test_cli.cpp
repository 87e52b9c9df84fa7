/*
 *   Copyright 2026 The bhw Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Drives the command-line tool end to end.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BHW_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::path(::testing::TempDir()) /
           ("bhw_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
    write("tri.hg", "a b\nb c\na c\n");
    std::string p9;
    for (int i = 1; i < 9; ++i) p9 += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
    write("p9.hg", p9);
    std::string k44;
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) k44 += "u" + std::to_string(i) + " v" + std::to_string(j) + "\n";
    }
    write("k44.hg", k44);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  std::filesystem::path dir_;
};

TEST_F(Cli, CoverNumbers) {
  EXPECT_EQ(run("cover --input " + path("tri.hg") + " --set a,b,c").out, "rho 2\ne1 e2\n");
  EXPECT_EQ(run("cover --input " + path("tri.hg") + " --set a,b,c --fractional").out,
            "rho* 3/2\ne1 1/2\ne2 1/2\ne3 1/2\n");
  const auto yes = run("cover --input " + path("tri.hg") + " --set a,b --at-most 1");
  EXPECT_EQ(yes.out, "yes\n");
  EXPECT_EQ(yes.code, 0);
  const auto no = run("cover --input " + path("tri.hg") + " --set a,b,c --fractional --at-most 7/5");
  EXPECT_EQ(no.out, "no\n");
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(run("cover --input " + path("tri.hg") + " --set a,z").code, 2);
}

TEST_F(Cli, ApproxWritesAValidDecomposition) {
  const auto r = run("approx --k 1 --mode ghw4 --input " + path("p9.hg") + " --output " + path("p9.td"));
  EXPECT_EQ(r.code, 0);
  const auto v = run("validate --hypergraph " + path("p9.hg") + " --decomposition " + path("p9.td") +
                     " --check-width 4");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("valid"), std::string::npos);
  EXPECT_EQ(read("p9.td").rfind("s ghtd ", 0), 0u);

  const auto f = run("approx --k 1 --mode fhw --input " + path("p9.hg"));
  EXPECT_EQ(f.code, 0);
  write("p9f.td", f.out);
  EXPECT_EQ(run("validate --fractional --hypergraph " + path("p9.hg") + " --decomposition " +
                path("p9f.td") + " --check-width 9/2")
                .code,
            0);
}

TEST_F(Cli, ApproxRefusal) {
  const auto r = run("approx --k 1 --input " + path("k44.hg"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "NO\n");
  EXPECT_EQ(run("approx --k 1 --mode fhw --input " + path("k44.hg")).code, 1);
}

TEST_F(Cli, StatsGoToStderr) {
  const std::string cmd = std::string(BHW_CLI_PATH) + " approx --k 1 --stats --input " +
                          path("p9.hg") + " --output " + path("o.td") + " 2>" + path("err.txt");
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(read("err.txt").rfind("{invocations: ", 0), 0u);
}

TEST_F(Cli, ValidateDetectsProblems) {
  write("bad.td", "s ghtd 2 1/1 3 3\nb 1 a b\nb 2 b c\nt 1 2\n");
  const auto r = run("validate --hypergraph " + path("tri.hg") + " --decomposition " + path("bad.td"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("invalid"), std::string::npos);
  EXPECT_NE(r.out.find("containment"), std::string::npos);

  write("wide.td", "s ghtd 1 2/1 3 3\nb 1 a b c\n");
  const auto w = run("validate --hypergraph " + path("tri.hg") + " --decomposition " +
                     path("wide.td") + " --check-width 1");
  EXPECT_EQ(w.code, 1);
  EXPECT_EQ(run("validate --hypergraph " + path("tri.hg") + " --decomposition " + path("wide.td"))
                .out,
            "ghw 2\nvalid\n");

  write("badcert.td", "s ghtd 1 2/1 3 3\nb 1 a b c\nc 1 e1\n");
  EXPECT_EQ(run("validate --hypergraph " + path("tri.hg") + " --decomposition " + path("badcert.td"))
                .code,
            1);
}

TEST_F(Cli, Exact) {
  EXPECT_EQ(run("exact --input " + path("tri.hg")).out, "ghw 2\n");
  EXPECT_EQ(run("exact --mode fhw --input " + path("tri.hg")).out, "fhw 3/2\n");
  const auto r = run("exact --input " + path("k44.hg") + " --output " + path("k44.td"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run("validate --hypergraph " + path("k44.hg") + " --decomposition " + path("k44.td"))
                .code,
            0);
}

TEST_F(Cli, GeneratorIsDeterministic) {
  const auto a = run("gen --n 9 --m 7 --rank 3 --seed 5");
  const auto b = run("gen --n 9 --m 7 --rank 3 --seed 5");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(run("gen --n 1 --m 7 --rank 3 --seed 5").code, 2);
}

TEST_F(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("approx --input " + path("tri.hg")).code, 2);
  EXPECT_EQ(run("approx --k 1 --mode ghw5 --input " + path("tri.hg")).code, 2);
  EXPECT_EQ(run("approx --k 3/2 --mode ghw4 --input " + path("tri.hg")).code, 2);
  EXPECT_EQ(run("approx --k 1 --input " + path("missing.hg")).code, 2);
  write("broken.hg", "a b\nx:\n");
  EXPECT_EQ(run("approx --k 1 --input " + path("broken.hg")).code, 2);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  ASSERT_EQ(run("gen --n 12 --m 14 --rank 3 --seed 99 --output " + path("g.hg")).code, 0);
  const auto a = run("approx --k 2 --input " + path("g.hg") + " --threads 1");
  const auto b = run("approx --k 2 --input " + path("g.hg") + " --threads 4");
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
