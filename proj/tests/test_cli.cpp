#include <gtest/gtest.h>

#include <cbmw/cli/app.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"

using namespace cbmw;
using namespace cbmw::cli;
using testutil::qv;

namespace {

  struct Outcome {
    int         code;
    std::string out, err;
  };

  Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  class TempFile {
   public:
    explicit TempFile(std::string const& text) {
      static int counter = 0;
      path_ = (std::filesystem::temp_directory_path()
               / ("cbmw_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++)
                  + ".json"))
                  .string();
      std::ofstream(path_) << text;
    }
    ~TempFile() {
      std::filesystem::remove(path_);
    }
    std::string const& path() const {
      return path_;
    }

   private:
    std::string path_;
  };

  std::string file_for(ParamSet const& p) {
    return to_json(param_file_from(p)).dump(2);
  }

  std::string demo(std::string const& name) {
    return std::string(CBMW_DEMO_DIR) + "/params/" + name;
  }

}  // namespace

TEST(Cli, CountsRankFormula) {
  auto const r = run_cli({"counts", "--n", "2", "--r", "3", "--d", "1"});
  EXPECT_EQ(r.code, exit_pass);
  EXPECT_EQ(r.out, "19\n");
  EXPECT_EQ(run_cli({"counts", "--n", "4"}).out, "105\n");
  EXPECT_EQ(run_cli({"counts", "--n", "4", "--r", "3"}).out, "8505\n");
  auto const j = json::parse(run_cli({"counts", "--n", "2", "--r", "3", "--d", "1", "--json"}).out);
  EXPECT_EQ(j["rank"], "19");
  EXPECT_EQ(j["b_prime"], "1");
  EXPECT_EQ(run_cli({"counts", "--n", "2", "--d", "1"}).code, exit_input);
}

TEST(Cli, UnknownFlagsAndSubcommands) {
  auto const a = run_cli({"counts", "--n", "2", "--bogus"});
  EXPECT_EQ(a.code, exit_input);
  EXPECT_NE(a.err.find("--bogus"), std::string::npos);
  EXPECT_NE(a.err.find("counts"), std::string::npos);  // usage text
  EXPECT_EQ(run_cli({"frobnicate"}).code, exit_input);
  EXPECT_EQ(run_cli({}).code, exit_input);
  EXPECT_EQ(run_cli({"--help"}).code, exit_pass);
}

TEST(Cli, CheckGeneratedFilesPass) {
  auto const nd = run_cli({"check", "--file", demo("nondegenerate_odd.json")});
  EXPECT_EQ(nd.code, exit_pass) << nd.out << nd.err;
  EXPECT_EQ(nd.out.substr(0, nd.out.find('\n')), "WY: pass, RX: pass");

  auto const dg = run_cli({"check", "--file", demo("degenerate_admissible.json")});
  EXPECT_EQ(dg.code, exit_pass) << dg.out << dg.err;
  EXPECT_EQ(dg.out.substr(0, dg.out.find('\n')), "recursion+relations: pass, u-admissible: pass");
}

TEST(Cli, CheckFailureQuotesWitness) {
  Field const& F = testutil::Q();
  auto const   u = testutil::ints(F, {2, 3});
  ParamSet const p = ParamSet::degenerate(
      u, omega_from_u_degenerate(F, u, 30).without_closure().perturbed(4, qv(1)));
  TempFile const f(file_for(p));
  auto const     r = run_cli({"check", "--file", f.path()});
  EXPECT_EQ(r.code, exit_fail);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("index 4"), std::string::npos) << r.out;

  auto const j = json::parse(run_cli({"check", "--file", f.path(), "--json"}).out);
  EXPECT_FALSE(j["left"]["pass"]);
  EXPECT_FALSE(j["right"]["pass"]);
  EXPECT_TRUE(j["agree"]);
}

TEST(Cli, DetectSemiOnConstructedExample) {
  auto const r = run_cli({"detect-semi", "--file", demo("semi_d1.json")});
  EXPECT_EQ(r.code, exit_pass) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "d=1, subset [2]");

  auto const c = run_cli({"construct-example", "--d", "1", "--base", "2", "--extra", "3"});
  EXPECT_EQ(c.code, exit_pass);
  TempFile const f(c.out);
  EXPECT_EQ(run_cli({"detect-semi", "--file", f.path()}).out, r.out);

  auto const bad = run_cli({"construct-example", "--d", "1", "--base", "2", "--extra", "-2"});
  EXPECT_EQ(bad.code, exit_input);
  EXPECT_NE(bad.err.find("constraint violated"), std::string::npos);
}

TEST(Cli, ClassifyAllCaseFiles) {
  for (int k = 1; k <= 4; ++k) {
    auto const r = run_cli({"classify", "--file", demo("affine_case" + std::to_string(k) + ".json")});
    EXPECT_EQ(r.code, exit_pass) << r.err;
    EXPECT_EQ(r.out.rfind("case " + std::to_string(k) + ":", 0), 0u) << r.out;
  }
  auto const j = json::parse(run_cli({"classify", "--file", demo("affine_case2.json"), "--json"}).out);
  EXPECT_EQ(j["case"], 2);
  EXPECT_EQ(j["extension"], json::array({"-1", "1"}));
  EXPECT_TRUE(j["pass"]);
}

TEST(Cli, ClassifyPreconditionIsInputError) {
  // A degenerate file cannot be classified.
  auto const r = run_cli({"classify", "--file", demo("degenerate_admissible.json")});
  EXPECT_EQ(r.code, exit_input);
  EXPECT_NE(r.err.find("nondegenerate"), std::string::npos);
}

TEST(Cli, PositionedParseErrors) {
  TempFile const syntax("{\n  \"kind\": \"degenerate\",\n  \"field\": \"Q\"\n  \"u\": []\n}\n");
  auto const     a = run_cli({"check", "--file", syntax.path()});
  EXPECT_EQ(a.code, exit_input);
  EXPECT_NE(a.err.find("line 4"), std::string::npos) << a.err;

  TempFile const flt(R"({"kind": "degenerate", "field": "Q", "u": ["2", 3.5]})");
  auto const     b = run_cli({"check", "--file", flt.path()});
  EXPECT_EQ(b.code, exit_input);
  EXPECT_NE(b.err.find("/u/1"), std::string::npos) << b.err;
  EXPECT_NE(b.err.find("floating point"), std::string::npos);

  TempFile const key(R"({"kind": "degenerate", "field": "Q", "u": ["2"], "extra": 1})");
  EXPECT_NE(run_cli({"check", "--file", key.path()}).err.find("/extra"), std::string::npos);

  TempFile const rho(R"({"kind": "nondegenerate", "field": "Q", "u": ["2"], "rho": "2", "q": "1"})");
  EXPECT_EQ(run_cli({"check", "--file", rho.path()}).code, exit_input);

  EXPECT_EQ(run_cli({"check", "--file", "/nonexistent/params.json"}).code, exit_input);
}

TEST(Cli, BinaryFieldValuesAsCoefficientLists) {
  auto const r = run_cli({"gen-omega", "--file", demo("degenerate_gf4.json"), "--json"});
  ASSERT_EQ(r.code, exit_pass) << r.err;
  auto const j = json::parse(r.out);
  EXPECT_EQ(j["field"], "GF(2^2)");
  EXPECT_TRUE(j["omega"][1].is_array());
  auto const c = run_cli({"check", "--file", demo("degenerate_gf4.json")});
  EXPECT_EQ(c.code, exit_pass) << c.out;
}

TEST(Cli, GenOmegaAndParamFileRoundTrip) {
  Field const&   F = testutil::Q();
  auto const     u = testutil::ints(F, {3});
  ParamSet const p = ParamSet::nondegenerate(
      u, qv(3), qv(2), omega_from_u_nondegenerate(F, qv(3), qv(2), u, 5));
  TempFile const f(file_for(p));
  auto const     r = run_cli({"gen-omega", "--file", f.path()});
  EXPECT_EQ(r.code, exit_pass);
  EXPECT_NE(r.out.find("w_1 = 25/3\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("w_5 = 675\n"), std::string::npos);
  auto const longer = run_cli({"gen-omega", "--file", f.path(), "--bound", "8"});
  EXPECT_NE(longer.out.find("w_8 = "), std::string::npos);

  ParamFile const back = parse_param_file(file_for(p));
  ParamSet const  q    = back.to_params();
  EXPECT_EQ(q.omega().prefix(), p.omega().prefix());
  EXPECT_EQ(q.rho(), p.rho());
  EXPECT_EQ(q.omega().has_closure(), p.omega().has_closure());
}

TEST(Cli, OutputIsDeterministic) {
  std::vector<std::vector<std::string>> const cmds = {
      {"check", "--file", demo("nondegenerate_odd.json"), "--json"},
      {"detect-semi", "--file", demo("semi_d1.json")},
      {"classify", "--file", demo("affine_case3.json")},
      {"harness", "--kind", "nondegenerate", "--field", "GF(13)", "--seed", "5", "--count", "20"},
  };
  for (auto const& c : cmds) {
    auto const a = run_cli(c), b = run_cli(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, exit_pass) << a.out << a.err;
  }
}
