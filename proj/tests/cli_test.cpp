#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "opsqft/field_io.hpp"
#include "opsqft/random.hpp"

namespace opsqft {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "opsqft-cli");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("opsqft_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, PlanesHandWorkedFrame) {
  const Result r = run({"planes", "--a", "1,0,0", "--b", "0,1,0", "--c", "0,0,1", "--d", "scalar",
                        "--assign", "minus"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "f = 0,0,0,-1\ng = 0,0,0,1\ndegenerate = true\n");
}

TEST_F(Cli, PlanesRejectsBadFrame) {
  const Result r = run({"planes", "--a", "1,0,0", "--b", "1,1,0", "--c", "0,0,1", "--d", "scalar"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("orthogonal"), std::string::npos);
}

TEST_F(Cli, TransformRoundTripThroughFiles) {
  Rng rng(5);
  const QuaternionField2D h = random_field(rng, 6, 8);
  write_field(h, path("a.qf2d"));
  for (const std::string variant : {"twosided", "conjc"}) {
    for (const std::string mode : {"--fast", "--direct"}) {
      const std::vector<std::string> common{"--variant", variant, "--f", "0.3,-1,2", "--g", "1,1,0", mode};
      std::vector<std::string> fwd{"transform", "--in", path("a.qf2d"), "--out", path("s.qf2d")};
      fwd.insert(fwd.end(), common.begin(), common.end());
      ASSERT_EQ(run(fwd).code, 0);
      std::vector<std::string> inv{"transform", "--inverse", "--in", path("s.qf2d"), "--out", path("b.qf2d")};
      inv.insert(inv.end(), common.begin(), common.end());
      ASSERT_EQ(run(inv).code, 0);
      EXPECT_LE(max_abs_diff(read_field(path("b.qf2d")), h), 1e-10) << variant << mode;
    }
  }
}

TEST_F(Cli, FastAndDirectAgree) {
  Rng rng(6);
  write_field(random_field(rng, 5, 4), path("a.qf2d"));
  for (const std::string variant : {"twosided", "phased", "conjc"}) {
    ASSERT_EQ(run({"transform", "--variant", variant, "--in", path("a.qf2d"), "--out", path("fast.qf2d")}).code, 0);
    ASSERT_EQ(run({"transform", "--variant", variant, "--direct", "--in", path("a.qf2d"), "--out",
                   path("direct.qf2d")}).code,
              0);
    EXPECT_LE(relative_diff(read_field(path("fast.qf2d")), read_field(path("direct.qf2d"))), 1e-9);
  }
}

TEST_F(Cli, SplitCoeffsInfo) {
  write_field(QuaternionField2D(1, 2, {Quaternion{1, 2, 3, 4}, Quaternion{0, 0, 0, 1}}), path("a.qf2d"));
  ASSERT_EQ(run({"split", "--f", "1,0,0", "--g", "1,0,0", "--in", path("a.qf2d"), "--out-plus",
                 path("p.qf2d"), "--out-minus", path("m.qf2d")}).code,
            0);
  EXPECT_EQ(read_field(path("p.qf2d")).data()[0], (Quaternion{0, 0, 3, 4}));
  EXPECT_EQ(read_field(path("m.qf2d")).data()[0], (Quaternion{1, 2, 0, 0}));

  const Result single = run({"coeffs", "--f", "1,0,0", "--g", "0,1,0", "--q", "1,2,3,4"});
  EXPECT_EQ(single.code, 0);
  EXPECT_EQ(single.out, "2.5 -0.5 -1.5 2.5\n");
  const Result many = run({"coeffs", "--in", path("a.qf2d")});
  EXPECT_EQ(many.code, 0);
  EXPECT_EQ(many.out, "0 0 2.5 -0.5 -1.5 2.5\n0 1 0.5 0 -0.5 0\n");
  EXPECT_EQ(run({"coeffs", "--f", "1,0,0", "--g", "1,0,0", "--q", "1,0,0,0"}).code, 2);
  EXPECT_EQ(run({"coeffs"}).code, 2);

  const Result info = run({"info", "--in", path("a.qf2d")});
  EXPECT_EQ(info.code, 0);
  EXPECT_EQ(info.out, "format = QF2D\nversion = 1\nn1 = 1\nn2 = 2\n");
}

TEST_F(Cli, ImportAndExport) {
  std::ofstream(path("img.ppm"), std::ios::binary) << std::string("P6\n2 1\n255\n\xff\x00\x00\x00\x00\xff", 17);
  ASSERT_EQ(run({"import-ppm", "--in", path("img.ppm"), "--out", path("img.qf2d")}).code, 0);
  const QuaternionField2D img = read_field(path("img.qf2d"));
  EXPECT_EQ(img(0, 0), (Quaternion{0, 1, 0, 0}));
  EXPECT_EQ(img(0, 1), (Quaternion{0, 0, 0, 1}));
  EXPECT_EQ(run({"export-pgm", "--in", path("img.qf2d"), "--out", path("img.pgm"), "--centered"}).code, 0);
  EXPECT_TRUE(fs::exists(path("img.pgm")));
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"transform", "--in", "x"}).code, 2);
  EXPECT_EQ(run({"transform", "--variant", "nope", "--in", path("x"), "--out", path("y")}).code, 2);
  EXPECT_EQ(run({"transform", "--variant", "twosided", "--fast", "--direct", "--in", path("x"), "--out",
                 path("y")}).code,
            2);
  const Result missing = run({"info", "--in", path("missing.qf2d")});
  EXPECT_EQ(missing.code, 3);
  EXPECT_NE(missing.err.find("missing.qf2d"), std::string::npos);
  std::ofstream(path("bad.qf2d")) << "nope";
  EXPECT_EQ(run({"transform", "--variant", "twosided", "--in", path("bad.qf2d"), "--out", path("y")}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, VerifyIsDeterministic) {
  const Result a = run({"verify", "--seed", "42"});
  const Result b = run({"verify", "--seed", "42"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("REPORT phased round trip"), std::string::npos);
}

}  // namespace
}  // namespace opsqft
