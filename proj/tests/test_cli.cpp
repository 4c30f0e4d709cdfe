#include "json_io.hpp"

#include "picard/corpus.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace picard;
using io::Json;
namespace fs = std::filesystem;

namespace {

struct Output {
  int code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("picard_cli_" + std::to_string(getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string json_file(const std::string& name, const Json& j) { return file(name, j.dump()); }

  Output run(const std::string& args) {
    Output r;
    FILE* pipe = popen((std::string(PICARD_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  fs::path dir_;
};

TwoTermComplex in0(long long n) { return TwoTermComplex::in_degree(FgAbGroup::cyclic(n), 0); }

}  // namespace

TEST_F(Cli, Ext1Example) {
  Output r = run("ext1 " + file("z6.json", "{\"orders\": [6]}") + " " + file("z4.json", "{\"orders\": [4]}"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.json(), Json::parse(R"({"invariants": {"free_rank": 0, "factors": ["2"]}})"));
}

TEST_F(Cli, GroupsAndComplexes) {
  const std::string g = file("g.json", R"({"rank": 2, "relations": {"rows": 2, "cols": 2, "entries": [["2", "0"], ["0", "3"]]}})");
  Output r = run("group invariants " + g);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["invariants"]["factors"], Json::parse(R"(["6"])"));

  Output h = run("hom " + file("a.json", "{\"orders\": [6]}") + " " + file("b.json", "{\"orders\": [4]}"));
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(h.json()["invariants"]["factors"], Json::parse(R"(["2"])"));
  ASSERT_EQ(h.json()["generators"].size(), 1u);
  EXPECT_NO_THROW(io::hom_from_json(h.json()["generators"][0]));

  TwoTermComplex k(FgAbGroup::free(1), FgAbGroup::free(1), IntMatrix{{3}});
  Output c = run("complex cohomology " + json_file("k.json", io::to_json(k)));
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(c.json()["h0"]["factors"], Json::parse(R"(["3"])"));
  EXPECT_EQ(c.json()["h_minus1"]["factors"], Json::array());

  Output d = run("dhom " + json_file("k.json", io::to_json(k)) + " " + json_file("k.json", io::to_json(k)) + " --degree 1");
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(d.json()["invariants"]["factors"], Json::parse(R"(["3"])"));
}

TEST_F(Cli, ClassifyPsiTheta) {
  const std::string m = json_file("m.json", io::to_json(in0(2))), k = json_file("k.json", io::to_json(in0(4)));
  Output cl = run("ext classify " + m + " " + k + " --representatives");
  ASSERT_EQ(cl.code, 0) << cl.out;
  EXPECT_EQ(cl.json()["invariants"]["factors"], Json::parse(R"(["2"])"));
  EXPECT_FALSE(cl.json()["truncated"].get<bool>());
  ASSERT_FALSE(cl.json()["representatives"].empty());

  Output ps = run("ext psi " + m + " " + k + " --class 1");
  ASSERT_EQ(ps.code, 0) << ps.out;
  const std::string e = file("e.json", ps.out);
  Output th = run("ext theta " + e);
  ASSERT_EQ(th.code, 0);
  ExtClass x = io::ext_class_from_json(th.json());
  EXPECT_FALSE(x.is_zero());

  Output sp = run("ext split " + e);
  ASSERT_EQ(sp.code, 0);
  EXPECT_FALSE(sp.json()["split"].get<bool>());

  Output sum = run("ext sum " + e + " " + e);
  ASSERT_EQ(sum.code, 0);
  Output split2 = run("ext split " + file("e2.json", sum.out));
  EXPECT_TRUE(split2.json()["split"].get<bool>());
}

TEST_F(Cli, NeutralAndFunctoriality) {
  TwoTermComplex m = in0(2), k = in0(2);
  const std::string e = json_file("neutral.json", io::to_json(neutral_extension(m, k)));
  Output th = run("ext theta " + e);
  ASSERT_EQ(th.code, 0);
  for (const auto& c : th.json()["coords"]) EXPECT_EQ(c, "0");

  TwoTermComplex m4 = in0(4);
  Output pb = run("ext pullback " + e + " " + json_file("f.json", io::to_json(ChainMap(m4, m, IntMatrix(0, 0), IntMatrix{{1}}))));
  ASSERT_EQ(pb.code, 0) << pb.out;
  EXPECT_NO_THROW(io::extension_from_json(pb.json()));
  Output pd = run("ext pushdown " + e + " " + json_file("g.json", io::to_json(ChainMap(k, m4, IntMatrix(0, 0), IntMatrix{{2}}))));
  ASSERT_EQ(pd.code, 0) << pd.out;
  EXPECT_NO_THROW(io::extension_from_json(pd.json()));
}

TEST_F(Cli, ExitCodes) {
  TwoTermComplex k = in0(2);
  TwoTermComplex l = direct_sum(k, k);
  Json bad{{"k", io::to_json(k)}, {"l", io::to_json(l)}, {"m", io::to_json(k)},
           {"i", io::to_json(ChainMap::zero(k, l), true)}, {"j", io::to_json(ChainMap::zero(l, k), true)}};
  Output r = run("ext theta " + json_file("bad.json", bad));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["error"], "not_an_extension");

  Output p = run("group invariants " + file("broken.json", "{\"rank\": "));
  EXPECT_EQ(p.code, 2);
  EXPECT_EQ(p.json()["error"], "parse");
  EXPECT_EQ(run("group invariants " + (dir_ / "missing.json").string()).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("ext psi " + json_file("m.json", io::to_json(k)) + " " + json_file("k.json", io::to_json(k)) + " --class x").code, 2);
}

TEST_F(Cli, Deterministic) {
  const std::string args = "verify --seed 3 --iterations 5";
  Output a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.json()["passed"].get<bool>());
  EXPECT_EQ(a.json()["suites"].size(), 9u);
  EXPECT_NE(run("verify --seed 4 --iterations 5").out, a.out);
}
