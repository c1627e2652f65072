/*
   Copyright 2026 The loopvir Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = loopvir::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

const std::string alt_phi = R"({"phi_d":{"exppoly":[{"base":"-1","poly":["0","1"]}]},"phi_c":{"exppoly":[]}})";

TEST(Cli, Bracket) {
  auto r = run({"bracket", "d(2,1)", "d(-2,3)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-4*d(0,4)+1/2*c(4)\n");
  r = run({"bracket", "d(1,1)", "d(2,1)", "--mod", "t^2+2t+1"});
  EXPECT_EQ(r.out, "-d(3,0)-2*d(3,1)\n");
  r = run({"--format", "json", "bracket", "d(1,0)", "d(-1,0)"});
  const auto j = loopvir::json::parse(r.out);
  EXPECT_EQ(j["result"], "-2*d(0,0)");
}

TEST(Cli, Jacobi) {
  auto r = run({"jacobi", "--deg-window", "-2..2", "--loop-window", "-1..1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("violations: 0"), std::string::npos);
  r = run({"--format", "json", "jacobi", "--deg-window=-2..2", "--loop-window=-1..1", "--mod", "t^2+2t+1"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = loopvir::json::parse(r.out);
  EXPECT_EQ(j["violations"], 0);
  EXPECT_GT(j["triples"].get<int>(), 0);
}

TEST(Cli, IntSeriesVerify) {
  auto r = run({"intseries-verify", "V(1/3,2/5)@2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0 violations"), std::string::npos);
  r = run({"--format", "json", "intseries-verify", "A(3)@1"});
  const auto j = loopvir::json::parse(r.out);
  EXPECT_EQ(j["relation_violations"], 0);
  EXPECT_FALSE(j["irreducible"].get<bool>());
  r = run({"intseries-verify", "V(1/3,2/5)"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, DualAndCanonical) {
  EXPECT_EQ(run({"dual", "A(3)@1"}).out, "B(3)@1\n");
  EXPECT_EQ(run({"dual", "V(1/3,2/5)"}).out, "V(1/3,3/5)\n");
  EXPECT_EQ(run({"canonical", "V(7/3,1)"}).out, "V(1/3,0)\n");
}

TEST(Cli, AnnihilatorAndTests) {
  EXPECT_EQ(run({"annihilator", "--seq", R"({"exppoly":[{"base":"-1","poly":["0","1"]}]})"}).out, "t^2+2t+1\n");
  EXPECT_EQ(run({"annihilator", "--seq", R"({"finite":{"0":"1"}})"}).out, "none\n");
  EXPECT_EQ(run({"hc-test", "--phi", alt_phi}).out, "P = t^2+2t+1\n");
  EXPECT_EQ(run({"verma-test", "--phi", alt_phi}).out, "reducible, P = t^2+2t+1\n");
  EXPECT_EQ(run({"verma-test", "--phi", R"({"phi_d":{"finite":{"0":"1"}}})"}).out, "irreducible\n");
  EXPECT_EQ(run({"hc-test", "--phi", R"({"phi_d":{"finite":{"0":"1"}}})"}).out, "not Harish-Chandra\n");
}

TEST(Cli, CharacterFormats) {
  auto r = run({"--format", "csv", "char", "--phi", alt_phi, "--depth", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "depth,pbw_dim,j_dim,irreducible_dim\n0,1,0,1\n1,2,0,2\n2,5,0,5\n3,10,0,10\n");
  r = run({"--format", "json", "char", "--phi", alt_phi, "--depth", "3"});
  const auto j = loopvir::json::parse(r.out);
  EXPECT_EQ(j["modulus"], "t^2+2t+1");
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_EQ(j["rows"][3]["irreducible_dim"], 10);
  r = run({"char", "--phi", alt_phi, "--depth", "2", "--mod", "t^3+3t^2+3t+1", "--redundant"});
  EXPECT_EQ(r.code, 0) << r.err;
  r = run({"char", "--phi", alt_phi, "--depth", "2", "--mod", "t+1"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, JsonOutputIsDeterministic) {
  const std::vector<std::string> args{"--format", "json", "tensor-check", "--phi",
                                      R"({"phi_d":{"exppoly":[{"base":"2","poly":["1"]},{"base":"5","poly":["3"]}]}})",
                                      "--depth", "3"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = loopvir::json::parse(a.out);
  EXPECT_EQ(j["character"], j["convolution"]);
  EXPECT_TRUE(j["mismatched_depths"].empty());
}

TEST(Cli, FileInput) {
  const std::string path = ::testing::TempDir() + "loopvir_phi.json";
  {
    std::ofstream f(path);
    f << alt_phi;
  }
  EXPECT_EQ(run({"hc-test", "--phi", "@" + path}).out, "P = t^2+2t+1\n");
  std::remove(path.c_str());
  const auto r = run({"hc-test", "--phi", "@" + path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(path), std::string::npos);
}

TEST(Cli, UsageErrorsNameTheToken) {
  auto r = run({"bracket", "d(1,x)", "d(0,0)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("d(1,x)"), std::string::npos);
  r = run({"jacobi", "--deg-window", "4..1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("4..1"), std::string::npos);
  r = run({"hc-test", "--phi", "{not json"});
  EXPECT_EQ(r.code, 2);
  r = run({"nonsense"});
  EXPECT_EQ(r.code, 2);
  r = run({});
  EXPECT_EQ(r.code, 2);
  r = run({"char", "--phi", alt_phi, "--depth", "40"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--depth-cap"), std::string::npos);
  r = run({"--window-cap", "4", "jacobi", "--deg-window", "-4..4"});
  EXPECT_EQ(r.code, 2);
  r = run({"--format", "xml", "dual", "A(1)"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verma-test"), std::string::npos);
  EXPECT_EQ(run({"char", "--help"}).code, 0);
}

}  // namespace
