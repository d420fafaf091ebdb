#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "detsr/commands.hpp"

using namespace detsr;

namespace {

const std::string kFixtures = DETSR_FIXTURE_DIR;

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("detsr_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = (path_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

struct Run {
  int code;
  std::string out, err;
};

template <typename Fn>
Run capture(Fn&& fn) {
  std::ostringstream out, err;
  const int code = fn(out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(TensorFile, ParsesAndNormalizes) {
  const auto t = parse_tensor_file(
      R"({"kind":"configuration","q":2,"d":1,"r":2,"entries":[{"vec":["14/2"],"idx":[1,2]}]})");
  EXPECT_EQ(t.r, 2);
  EXPECT_EQ(t.kind, TensorKind::configuration);
  EXPECT_EQ(t.values[0], (Vector{7}));
  EXPECT_EQ(to_json(t)["entries"][0]["vec"][0], "7");
}

TEST(TensorFile, RejectsMalformedInput) {
  const char* bad[] = {
      "not json",
      R"([1,2])",
      R"({"r":2,"d":1,"q":2,"kind":"forces"})",
      R"({"r":2,"d":1,"q":2,"kind":"torques","entries":[]})",
      R"({"r":0,"d":1,"q":2,"kind":"forces","entries":[]})",
      R"({"r":3,"d":1,"q":2,"kind":"forces","entries":[]})",
      R"({"r":2,"d":1,"q":2,"kind":"forces","entries":[{"idx":[2,1],"vec":["1"]}]})",
      R"({"r":2,"d":1,"q":2,"kind":"forces","entries":[{"idx":[1,3],"vec":["1"]}]})",
      R"({"r":2,"d":1,"q":2,"kind":"forces","entries":[{"idx":[1],"vec":["1"]}]})",
      R"({"r":2,"d":1,"q":2,"kind":"forces","entries":[{"idx":[1,2],"vec":["1","2"]}]})",
      R"({"r":2,"d":1,"q":2,"kind":"forces","entries":[{"idx":[1,2],"vec":[1]}]})",
      R"({"r":2,"d":1,"q":2,"kind":"forces","entries":[{"idx":[1,2],"vec":["1/0"]}]})",
      R"({"r":2,"d":1,"q":3,"kind":"forces","entries":[{"idx":[1,2],"vec":["1"]},{"idx":[1,2],"vec":["2"]}]})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_tensor_file(std::string(text)), InputError) << text;
}

TEST(TensorFile, SerializationIsCanonicalAndIdempotent) {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = 1 + static_cast<int>(rng.uniform(0, 2)), d = 1 + static_cast<int>(rng.uniform(0, 2));
    auto f = random_forces(rng, r, d, r + 2, 2);
    Vector frac(static_cast<std::size_t>(d));
    frac[0] = Rational(rng.nonzero(9)) / 4;
    f.set_rank(0, frac);
    const auto first = to_json(TensorFile::from(f));
    const auto reparsed = parse_tensor_file(first.dump());
    EXPECT_EQ(reparsed.forces(), f);
    EXPECT_EQ(to_json(reparsed), first);
  }
}

TEST(TensorFile, ForcesConvertToConfiguration) {
  const auto t = parse_tensor_file(
      R"({"r":2,"d":2,"q":4,"kind":"forces","entries":[{"idx":[1,3],"vec":["0","1"]}]})");
  EXPECT_EQ(t.configuration().get({1, 3}), (Vector{0, -1}));
  EXPECT_THROW(TensorFile::from(VectorConfiguration(2, 2, 4)).forces(), InputError);
}

TEST(CmdDet, SingleEntry) {
  TempDir dir;
  const auto path = dir.write("v.json", R"({"r":2,"d":1,"q":2,"kind":"configuration","entries":[{"idx":[1,2],"vec":["7"]}]})");
  const auto run = capture([&](auto& o, auto& e) { return cmd_det(path, false, o, e); });
  EXPECT_EQ(run.code, exit_code::success);
  EXPECT_EQ(run.out, "det_sr = 7\nNONZERO\n");
}

TEST(CmdDet, CrossProductExampleIsZero) {
  TempDir dir;
  const auto path = dir.file("cp.json");
  ASSERT_EQ(capture([&](auto& o, auto& e) { return cmd_example("cross-product", {}, path, o, e); }).code, 0);
  const auto run = capture([&](auto& o, auto& e) { return cmd_det(path, false, o, e); });
  EXPECT_EQ(run.code, exit_code::success);
  EXPECT_EQ(run.out, "det_sr = 0\nZERO\n");
}

TEST(CmdDet, MatrixDumpAndErrors) {
  TempDir dir;
  const auto ok = dir.write("v.json", R"({"r":2,"d":1,"q":2,"kind":"forces","entries":[{"idx":[1,2],"vec":["-3"]}]})");
  const auto dump = capture([&](auto& o, auto& e) { return cmd_det(ok, true, o, e); });
  EXPECT_EQ(dump.out, "matrix 1x1\ncolumns: {1,2}\nE{1}[1]: -3\ndet_sr = -3\nNONZERO\n");

  const auto wrong_q = dir.write("q.json", R"({"r":2,"d":2,"q":5,"kind":"forces","entries":[]})");
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cmd_det(wrong_q, false, o, e); }).code, exit_code::precondition);

  const auto broken = dir.write("b.json", R"({"r":2,"d":2)");
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cmd_det(broken, false, o, e); }).code, exit_code::input_error);
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cmd_det(dir.file("missing.json"), false, o, e); }).code,
            exit_code::input_error);
}

TEST(CmdSolve, Outcomes) {
  TempDir dir;
  Rng rng(62);
  const auto five = dir.file("five.json");
  write_tensor_file(TensorFile::from(random_forces(rng, 2, 2, 5, 9)), five);
  auto run = capture([&](auto& o, auto& e) { return cmd_solve(five, o, e); });
  EXPECT_EQ(run.code, exit_code::success);
  EXPECT_EQ(run.out.rfind("SOLVABLE\n", 0), 0u);
  EXPECT_NE(run.out.find("residual = 0\n"), std::string::npos);

  run = capture([&](auto& o, auto& e) { return cmd_solve(kFixtures + "/witness_r2_d2_forces.json", o, e); });
  EXPECT_EQ(run.code, exit_code::success);
  EXPECT_EQ(run.out, "UNSOLVABLE\ndet_sr = 252\nkernel_dim = 0\nconsistency: CONSISTENT\n");

  const auto zero = dir.write("zero.json", R"({"r":2,"d":2,"q":4,"kind":"forces","entries":[]})");
  run = capture([&](auto& o, auto& e) { return cmd_solve(zero, o, e); });
  EXPECT_EQ(run.out, "SOLVABLE\nlambda {1,2} = 1\nresidual = 0\ndet_sr = 0\nkernel_dim = 6\nconsistency: CONSISTENT\n");

  EXPECT_EQ(capture([&](auto& o, auto& e) {
              return cmd_solve(kFixtures + "/witness_r2_d2_configuration.json", o, e);
            }).code,
            exit_code::input_error);
}

TEST(CmdExample, GeneratorsWriteWellFormedFiles) {
  TempDir dir;
  struct Case {
    std::string name;
    ExampleParams params;
    int r, d, q;
    TensorKind kind;
  };
  ExampleParams wedge;
  wedge.s = 3;
  ExampleParams diffs;
  diffs.d = 2;
  for (const auto& c : {Case{"cross-product", {}, 3, 3, 9, TensorKind::forces},
                        Case{"wedge", wedge, 3, 3, 9, TensorKind::forces},
                        Case{"differences", diffs, 2, 2, 4, TensorKind::configuration}}) {
    const auto path = dir.file(c.name + ".json");
    ASSERT_EQ(capture([&](auto& o, auto& e) { return cmd_example(c.name, c.params, path, o, e); }).code, 0);
    const auto t = read_tensor_file(path);
    EXPECT_EQ(t.r, c.r);
    EXPECT_EQ(t.d, c.d);
    EXPECT_EQ(t.q, c.q);
    EXPECT_EQ(t.kind, c.kind);
    EXPECT_EQ(sgn(det_sr(t.configuration())), 0);
    EXPECT_EQ(make_example(c.name, c.params), t);  // reproducible from the seed
  }
  ExampleParams other;
  other.seed = 2;
  EXPECT_NE(make_example("cross-product", other), make_example("cross-product", {}));
  ExampleParams bad;
  bad.s = 2;
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cmd_example("wedge", bad, "", o, e); }).code, exit_code::input_error);
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cmd_example("spiral", {}, "", o, e); }).code, exit_code::input_error);
}

TEST(CmdWitnessSearch, EmitsJsonReport) {
  const auto run = capture([&](auto& o, auto& e) { return cmd_witness_search(2, 2, 10, 3, 5, false, "", o, e); });
  ASSERT_EQ(run.code, exit_code::success);
  const auto doc = json::parse(run.out);
  EXPECT_EQ(doc["trials"], 10);
  EXPECT_GE(doc["nonzero_count"].get<int>(), 1);
  const auto witness = parse_tensor_json(doc["first_witness"]);
  EXPECT_EQ(to_string(det_sr(witness.configuration())), doc["first_value"].get<std::string>());
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cmd_witness_search(2, 2, 0, 3, 5, false, "", o, e); }).code,
            exit_code::input_error);
}

TEST(CmdVerifyRelations, PassesOnFixtures) {
  for (const char* name : {"witness_r2_d2_forces.json", "witness_r3_d2_configuration.json"}) {
    const auto run = capture([&](auto& o, auto& e) { return cmd_verify_relations(kFixtures + "/" + name, 5, 1, o, e); });
    EXPECT_EQ(run.code, exit_code::success) << run.out << run.err;
    EXPECT_EQ(run.out, "PASS dependence relations (5 trials, 0 failures)\n");
  }
}

TEST(CmdSelfcheck, PassesAndReportsTrialCounts) {
  std::ostringstream out;
  EXPECT_EQ(cmd_selfcheck({4, 1, false, standard_sign}, out), exit_code::success);
  EXPECT_NE(out.str().find("PASS dependence relations r=2 d=2 (4 trials)"), std::string::npos);
  EXPECT_NE(out.str().find("PASS theorem consistency r=3 d=2 (4 trials)"), std::string::npos);
  EXPECT_EQ(out.str().substr(out.str().size() - 5), "PASS\n");
}

TEST(CmdSelfcheck, ParallelMatchesSequential) {
  std::ostringstream seq, par;
  cmd_selfcheck({6, 3, false, standard_sign}, seq);
  cmd_selfcheck({6, 3, true, standard_sign}, par);
  EXPECT_EQ(seq.str(), par.str());
}

TEST(CmdSelfcheck, CorruptedSignTableFails) {
  const SignRule corrupted = [](int value, int slot) { return slot == 1 ? standard_sign(value, slot) : 1; };
  std::ostringstream out;
  EXPECT_EQ(cmd_selfcheck({4, 1, false, corrupted}, out), exit_code::check_failed);
  EXPECT_NE(out.str().find("FAIL dependence relations r=2 d=2"), std::string::npos);
}
