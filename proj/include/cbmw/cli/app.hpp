#ifndef CBMW_CLI_APP_HPP_
#define CBMW_CLI_APP_HPP_

// Command-line front end.  Exit codes: 0 pass or emitted, 1 check failed,
// 2 input or precondition error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../adm_degenerate.hpp"
#include "../adm_nondegenerate.hpp"
#include "../counting.hpp"
#include "../omega.hpp"
#include "../rationality.hpp"
#include "../semi_adm.hpp"
#include "param_file.hpp"

namespace cbmw::cli {

  enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_input = 2 };

  namespace detail {

    inline std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error(ErrorCode::invalid_argument, "cannot read " + path);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    inline std::string join(std::vector<FieldValue> const& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + v[i].to_string();
      }
      return out;
    }

    inline std::vector<FieldValue> parse_list(Field const& F, std::string const& s) {
      std::vector<FieldValue> out;
      std::stringstream       ss(s);
      std::string             tok;
      while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(' '));
        tok.erase(tok.find_last_not_of(' ') + 1);
        out.push_back(F.parse(tok));
      }
      return out;
    }

    //! Continues a closed sequence by its recursion up to w_N when shorter.
    inline ParamSet ensure_length(ParamSet const& p, std::size_t N) {
      OmegaSeq const& w = p.omega();
      if (w.size() > N || !w.has_closure()) {
        return p;
      }
      return p.with_omega(extend_by_recursion(w, *w.closure(), N));
    }

    inline json report_json(AdmissibilityReport const& rep) {
      json out = json::array();
      for (auto const& c : rep.criteria()) {
        json e{{"tag", c.tag}, {"pass", c.pass}};
        if (c.witness) {
          e["witness"] = {{"relation", c.witness->relation},
                          {"index", c.witness->index},
                          {"lhs", c.witness->lhs},
                          {"rhs", c.witness->rhs}};
        }
        if (!c.detail.empty()) {
          e["detail"] = c.detail;
        }
        out.push_back(e);
      }
      return out;
    }

    inline char const* verdict(bool b) {
      return b ? "pass" : "FAIL";
    }

    struct Options {
      std::string   file;
      std::size_t   bound = default_bound;
      bool          json  = false;
      unsigned      n = 0, r = 0, d = 0;
      std::string   base, extra, field = "Q", out, kind = "degenerate";
      std::uint64_t seed  = 1;
      std::size_t   count = 100;
      std::size_t   max_r = 4;
      std::size_t   order = 0;
    };

    inline ParamSet load(Options const& o, std::size_t min_order) {
      return parse_param_file(read_file(o.file)).to_params(min_order);
    }

    ////////////////////////////////////////////////////////////////////////

    inline int gen_omega(Options const& o, std::ostream& out) {
      ParamFile const pf = parse_param_file(read_file(o.file));
      ParamSet        p  = pf.to_params(o.order);
      if (o.order) {
        p = ensure_length(p, o.order);
      }
      OmegaSeq const& w = p.omega();
      if (o.json) {
        json j{{"field", p.field().name()}, {"omega", values_to_json(w.prefix())}};
        if (w.closure()) {
          j["closure"] = values_to_json(*w.closure());
        }
        out << j.dump(2) << "\n";
        return exit_pass;
      }
      for (std::size_t a = 0; a < w.size(); ++a) {
        out << "w_" << a << " = " << w.prefix()[a].to_string() << "\n";
      }
      if (w.closure()) {
        out << "closure a_0..a_" << w.closure()->size() - 1 << ": "
            << join(*w.closure()) << "\n";
      }
      return exit_pass;
    }

    inline int check(Options const& o, std::ostream& out) {
      ParamSet p = load(o, 0);
      p          = ensure_length(p, o.bound + p.r());
      AdmissibilityReport left, right;
      std::string         lname, rname;
      if (p.is_degenerate()) {
        lname = "recursion+relations";
        rname = "u-admissible";
        left  = check_recursion(p, o.bound);
        left.merge(check_relations(p));
        right = check_u_admissible(p, o.bound + p.r());
      } else {
        lname = "WY";
        rname = "RX";
        left  = wilcox_yu_check(p);
        right = rui_xu_check(p, o.bound);
      }
      bool const lp = left.pass(), rp = right.pass();
      if (o.json) {
        out << json{{"kind", to_string(p.kind())},
                    {"left", {{"name", lname}, {"pass", lp}, {"criteria", report_json(left)}}},
                    {"right", {{"name", rname}, {"pass", rp}, {"criteria", report_json(right)}}},
                    {"agree", lp == rp}}
                   .dump(2)
            << "\n";
      } else {
        out << lname << ": " << verdict(lp) << ", " << rname << ": " << verdict(rp)
            << "\n";
        out << left.to_string() << right.to_string();
        if (lp != rp) {
          out << "criteria disagree\n";
        }
      }
      return lp && rp ? exit_pass : exit_fail;
    }

    inline int detect_semi(Options const& o, std::ostream& out) {
      ParamSet const p   = load(o, 0);
      auto const     res = detect(p, o.bound);
      using O            = SemiAdmissibilityResult::Outcome;
      if (o.json) {
        json subsets = json::array();
        for (std::size_t i = 0; i < res.subsets.size(); ++i) {
          subsets.push_back({{"indices", res.subsets[i]},
                             {"roots", values_to_json(res.roots[i])},
                             {"p0", values_to_json(res.p0[i])}});
        }
        out << json{{"outcome", to_string(res.outcome)}, {"d", res.d}, {"subsets", subsets}}
                   .dump(2)
            << "\n";
        return exit_pass;
      }
      switch (res.outcome) {
        case O::admissible:
          out << "admissible, d=r=" << res.d << "\n";
          break;
        case O::hecke_collapse:
          out << "hecke-collapse: no sub-collection of the roots is admissible\n";
          break;
        case O::semi_admissible: {
          out << "d=" << res.d << ", subset" << (res.roots.size() > 1 ? "s " : " ");
          for (std::size_t i = 0; i < res.roots.size(); ++i) {
            out << (i ? ", " : "") << "[" << join(res.roots[i]) << "]";
          }
          out << "\n";
          for (std::size_t i = 0; i < res.p0.size(); ++i) {
            out << "p0 b_0..b_d: " << join(res.p0[i]) << "\n";
          }
          break;
        }
      }
      return exit_pass;
    }

    inline int classify(Options const& o, std::ostream& out, std::ostream& err) {
      ParamSet const            p = load(o, 0);
      RationalityClassification c;
      try {
        c = affine_classify(p);
      } catch (Error const& e) {
        if (e.code() == ErrorCode::verification_failed
            || e.code() == ErrorCode::not_split) {
          err << "classification failed: " << e.what() << "\n";
          return exit_fail;
        }
        throw;
      }
      bool const pass = c.certificate.pass();
      if (o.json) {
        out << json{{"case", c.case_tag},
                    {"alpha", c.alpha},
                    {"roots", values_to_json(c.roots)},
                    {"extension", values_to_json(c.extension)},
                    {"admissible_roots", values_to_json(c.admissible_roots)},
                    {"rho", value_to_json(c.rho_recovered)},
                    {"certificate", report_json(c.certificate)},
                    {"pass", pass}}
                   .dump(2)
            << "\n";
      } else {
        out << "case " << c.case_tag << ": alpha=" << c.alpha << ", roots ["
            << join(c.roots) << "], extension [" << join(c.extension) << "]\n";
        out << "rho = (-1)^alpha prod u = " << c.rho_recovered.to_string() << "\n";
        out << "RX on [" << join(c.admissible_roots) << "]: " << verdict(pass) << "\n";
        out << c.certificate.to_string();
      }
      return pass ? exit_pass : exit_fail;
    }

    inline int counts(Options const& o, bool have_r, bool have_d, std::ostream& out) {
      mpz_class const diagrams = odd_double_factorial(o.n);
      json            j{{"n", o.n}, {"diagrams", diagrams.get_str()},
                        {"b_prime", b_prime(o.n).get_str()}};
      std::string     text;
      if (have_r && have_d) {
        mpz_class const rank = rank_formula(o.n, o.r, o.d);
        j["r"]               = o.r;
        j["d"]               = o.d;
        j["rank"]            = rank.get_str();
        text                 = rank.get_str();
      } else if (have_r) {
        mpz_class const regular = power(o.r, o.n) * diagrams;
        j["r"]                  = o.r;
        j["regular"]            = regular.get_str();
        text                    = regular.get_str();
      } else if (have_d) {
        throw Error(ErrorCode::invalid_argument, "--d needs --r");
      } else {
        text = diagrams.get_str();
      }
      out << (o.json ? j.dump(2) : text) << "\n";
      return exit_pass;
    }

    inline int construct(Options const& o, std::ostream& out, std::ostream& err) {
      Field const F     = parse_field_name(o.field);
      auto const  base  = parse_list(F, o.base);
      auto const  extra = parse_list(F, o.extra);
      auto const  bad   = construct_example_violations(F, base, extra);
      if (!bad.empty()) {
        for (auto const& b : bad) {
          err << "constraint violated: " << b << "\n";
        }
        return exit_input;
      }
      std::optional<std::size_t> N;
      if (o.order) {
        N = o.order;
      }
      ParamSet const  p   = construct_example(F, o.d, extra, base, N);
      std::string const doc = to_json(param_file_from(p)).dump(2) + "\n";
      if (o.out.empty()) {
        out << doc;
      } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!(f << doc)) {
          throw Error(ErrorCode::invalid_argument, "cannot write " + o.out);
        }
        out << "wrote " << o.out << "\n";
      }
      return exit_pass;
    }

    inline int harness(Options const& o, std::ostream& out) {
      SampleSpec spec;
      spec.field = parse_field_name(o.field);
      spec.count = o.count;
      spec.max_r = o.max_r;
      spec.seed  = o.seed;
      spec.bound = o.bound;
      HarnessReport rep;
      if (o.kind == "degenerate") {
        rep = equivalence_harness_degenerate(spec);
      } else if (o.kind == "nondegenerate") {
        rep = equivalence_harness_nondegenerate(spec);
      } else {
        throw Error(ErrorCode::invalid_argument, "unknown kind '" + o.kind + "'");
      }
      if (o.json) {
        out << json{{"samples", rep.samples},
                    {"agreements", rep.agreements},
                    {"left_passes", rep.left_passes},
                    {"right_passes", rep.right_passes},
                    {"discrepancies", rep.discrepancies}}
                   .dump(2)
            << "\n";
      } else {
        out << rep.to_string();
      }
      return rep.pass() ? exit_pass : exit_fail;
    }

  }  // namespace detail

  //! Runs one command; args excludes the program name.
  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App        app{"Parameter checks for cyclotomic BMW algebras", "cbmw"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen-omega", "print the omega prefix of a parameter file");
    gen->add_option("--file", o.file, "parameter file (JSON)")->required();
    gen->add_option("--bound", o.order, "print at least w_0..w_bound");
    gen->add_flag("--json", o.json);

    auto* chk = app.add_subcommand("check", "both admissibility criteria, cross-reported");
    chk->add_option("--file", o.file, "parameter file (JSON)")->required();
    chk->add_option("--bound", o.bound, "comparison bound")->capture_default_str();
    chk->add_flag("--json", o.json);

    auto* sem = app.add_subcommand("detect-semi", "minimal admissible sub-collections of the roots");
    sem->add_option("--file", o.file, "parameter file (JSON)")->required();
    sem->add_option("--bound", o.bound, "comparison bound")->capture_default_str();
    sem->add_flag("--json", o.json);

    auto* cls = app.add_subcommand("classify", "affine rationality classification");
    cls->add_option("--file", o.file, "parameter file (JSON)")->required();
    cls->add_flag("--json", o.json);

    auto* cnt = app.add_subcommand("counts", "diagram and rank counts");
    cnt->add_option("--n", o.n)->required();
    auto* opt_r = cnt->add_option("--r", o.r);
    auto* opt_d = cnt->add_option("--d", o.d);
    cnt->add_flag("--json", o.json);

    auto* con = app.add_subcommand("construct-example",
                                   "degenerate d-semi-admissible parameter file");
    con->add_option("--d", o.d)->required();
    con->add_option("--base", o.base, "comma-separated base roots")->required();
    con->add_option("--extra", o.extra, "comma-separated extra roots")->required();
    con->add_option("--field", o.field, "Q, GF(p)")->capture_default_str();
    con->add_option("--bound", o.order, "last omega index written (default 20 + r)");
    con->add_option("--out", o.out, "output path (default stdout)");

    auto* har = app.add_subcommand("harness", "randomized equivalence of the two criteria");
    har->add_option("--kind", o.kind, "degenerate or nondegenerate")->capture_default_str();
    har->add_option("--field", o.field, "Q, GF(p) or GF(2^k)")->capture_default_str();
    har->add_option("--seed", o.seed)->capture_default_str();
    har->add_option("--count", o.count)->capture_default_str();
    har->add_option("--max-r", o.max_r)->capture_default_str();
    har->add_option("--bound", o.bound)->capture_default_str();
    har->add_flag("--json", o.json);

    std::reverse(args.begin(), args.end());
    try {
      app.parse(std::move(args));
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_pass;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_pass;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
      return exit_input;
    }

    try {
      if (gen->parsed()) {
        return detail::gen_omega(o, out);
      }
      if (chk->parsed()) {
        return detail::check(o, out);
      }
      if (sem->parsed()) {
        return detail::detect_semi(o, out);
      }
      if (cls->parsed()) {
        return detail::classify(o, out, err);
      }
      if (cnt->parsed()) {
        return detail::counts(o, opt_r->count() > 0, opt_d->count() > 0, out);
      }
      if (con->parsed()) {
        return detail::construct(o, out, err);
      }
      if (har->parsed()) {
        return detail::harness(o, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_input;
    }
    return exit_input;
  }

  inline int run(int argc, char const* const* argv, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
  }

}  // namespace cbmw::cli

#endif  // CBMW_CLI_APP_HPP_
