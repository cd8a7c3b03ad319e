#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chordal_betti/closed_form.hpp"
#include "chordal_betti/dual_closed_form.hpp"
#include "chordal_betti/errors.hpp"
#include "chordal_betti/identities.hpp"
#include "chordal_betti/render.hpp"
#include "chordal_betti/verify.hpp"

namespace cb = chordal_betti;

namespace {

struct SpecFlags {
  std::vector<int> n;
  std::vector<int> r;
  std::vector<int> parents;

  cb::GluingSpec spec() const {
    cb::GluingSpec s;
    s.n = n;
    s.r = r;
    s.parents = parents;
    cb::validate_spec(s);
    return s;
  }
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags) {
  cmd->add_option("--n", flags.n, "clique sizes, comma separated")
      ->required()
      ->delimiter(',');
  cmd->add_option("--r", flags.r, "gluing overlap sizes, comma separated")
      ->delimiter(',');
  cmd->add_option("--parents", flags.parents,
                  "1-based parent clique of each gluing (defaults to the "
                  "latest feasible clique)")
      ->delimiter(',');
}

cb::FieldChoice parse_field(const std::string& name) {
  if (name == "q") return cb::FieldChoice::rationals();
  if (name.size() > 1 && name[0] == 'f') {
    try {
      return cb::FieldChoice::prime_field(std::stoi(name.substr(1)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw cb::RangeError("unknown field '" + name + "'; use q or f<prime>");
}

int run_report(const SpecFlags& flags, std::optional<int> skeleton, bool dual,
               std::optional<int> dual_skeleton, bool summary,
               const std::string& format) {
  const cb::GluingSpec s = flags.spec();
  const int n_vars = cb::n_vertices(s);
  const bool json = format == "json";

  if (summary) {
    if (json) {
      cb::ordered_json out;
      out["spec"] = cb::spec_to_string(s);
      out["summary"] = cb::ordered_json::array();
      const int dim = cb::complex_dim(s);
      for (int k = 0; k <= dim; ++k) {
        const cb::SkeletonInvariants inv = cb::skeleton_invariants(s, k);
        out["summary"].push_back({{"k", k},
                                  {"side", "primal"},
                                  {"multiplicity", cb::to_string(inv.multiplicity)},
                                  {"h_degree", inv.h_degree},
                                  {"euler", cb::to_string(inv.euler)}});
      }
      if (cb::max_clique(s) < n_vars)
        for (int k = 0; k <= n_vars - 3; ++k) {
          const cb::DualSkeletonProfile p = cb::dual_skeleton_profile(s, k);
          out["summary"].push_back({{"k", k},
                                    {"side", "dual"},
                                    {"multiplicity", cb::to_string(p.multiplicity)},
                                    {"h_degree", p.h_degree},
                                    {"euler", cb::to_string(p.euler)}});
        }
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << cb::render_summary_table(s);
    }
    return 0;
  }

  cb::BettiTable table;
  cb::ordered_json invariants;
  std::string invariants_text;
  bool with_resolution = false;

  if (dual || dual_skeleton) {
    if (dual_skeleton) {
      table = cb::dual_skeleton_betti_table(s, *dual_skeleton);
      const cb::DualSkeletonProfile p = cb::dual_skeleton_profile(s, *dual_skeleton);
      invariants = cb::dual_skeleton_profile_to_json(p);
      invariants_text = cb::render_dual_skeleton_profile(p);
    } else {
      table = cb::dual_betti_table(s);
      const cb::DualProfile p = cb::dual_profile(s);
      invariants = cb::dual_profile_to_json(p);
      invariants_text = cb::render_dual_profile(p);
      with_resolution = true;
    }
  } else {
    const int k = skeleton ? *skeleton : cb::complex_dim(s);
    table = cb::skeleton_betti_table(s, k);
    const cb::SkeletonInvariants inv = cb::skeleton_invariants(s, k);
    invariants = cb::invariants_to_json(inv);
    invariants_text = cb::render_invariants(inv);
  }

  if (json) {
    cb::ordered_json out = cb::table_to_json(table, n_vars);
    out["invariants"] = std::move(invariants);
    if (with_resolution)
      out["resolution"] = cb::resolution_to_json(cb::dual_resolution(s));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << cb::render_betti_table(table) << '\n' << invariants_text;
    if (with_resolution)
      std::cout << '\n' << cb::render_resolution(cb::dual_resolution(s));
  }
  return 0;
}

int run_verify(const SpecFlags& flags, const std::string& field_name, int cap,
               const std::string& format) {
  const cb::GluingSpec s = flags.spec();
  const cb::FieldChoice field = parse_field(field_name);
  const cb::VerificationReport report = cb::verify_all(s, field, cap);
  if (format == "json") {
    cb::ordered_json out;
    out["spec"] = cb::spec_to_string(s);
    out["field"] = field.str();
    out["pass"] = report.all_pass();
    out["checks"] = cb::ordered_json::array();
    for (const auto& c : report.checks)
      out["checks"].push_back({{"name", c.name},
                               {"pass", c.pass},
                               {"detail", c.detail},
                               {"micros", c.micros}});
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      std::printf("%-28s %s  (%lld us)\n", c.name.c_str(),
                  c.pass ? "ok" : "FAIL", c.micros);
      if (!c.pass) std::printf("  %s\n", c.detail.c_str());
    }
    std::printf("%d/%zu checks passed\n",
                static_cast<int>(report.checks.size()) - report.failures(),
                report.checks.size());
  }
  return report.all_pass() ? 0 : 1;
}

int run_identities(const std::string& only, const std::vector<long long>& n,
                   const std::vector<long long>& r, std::optional<long long> j,
                   std::optional<long long> A, std::optional<long long> sv,
                   std::optional<long long> e, int max_param, int max_e) {
  // a fully specified single case evaluates both sides directly
  if (!only.empty() && (j || A || sv || !n.empty())) {
    const cb::IdentityFamily fam = cb::family_from_name(only);
    cb::IdentityCase c;
    c.family = fam;
    const auto one = [&](const std::vector<long long>& v,
                         const char* what) -> long long {
      if (v.size() != 1)
        throw cb::UnknownIdentity(std::string("expected exactly one ") + what);
      return v[0];
    };
    switch (fam) {
      case cb::IdentityFamily::ConvolutionLemma:
        c.params = {one(n, "--n value"), A.value_or(0), sv.value_or(0)};
        break;
      case cb::IdentityFamily::GeneralHilbert:
        c.params = {static_cast<long long>(n.size()), j.value_or(1)};
        c.params.insert(c.params.end(), n.begin(), n.end());
        c.params.insert(c.params.end(), r.begin(), r.end());
        break;
      case cb::IdentityFamily::EqualN:
        c.params = {static_cast<long long>(r.size()) + 1, j.value_or(1),
                    one(n, "--n value")};
        c.params.insert(c.params.end(), r.begin(), r.end());
        break;
      case cb::IdentityFamily::EqualR:
        c.params = {static_cast<long long>(n.size()), j.value_or(1),
                    one(r, "--r value")};
        c.params.insert(c.params.end(), n.begin(), n.end());
        break;
      case cb::IdentityFamily::EqualNR:
      case cb::IdentityFamily::Reduced:
        c.params = {e.value_or(2), j.value_or(1), one(n, "--n value"),
                    one(r, "--r value")};
        break;
      case cb::IdentityFamily::ChuVandermonde:
        c.params = {one(n, "--n value"), one(r, "--r value"), j.value_or(1)};
        break;
      case cb::IdentityFamily::SingleClique:
        c.params = {one(n, "--n value"), j.value_or(1)};
        break;
    }
    const cb::IdentityResult res = cb::check_specializations(c);
    std::cout << cb::family_name(fam) << ": " << cb::to_string(res.lhs)
              << (res.equal ? " = " : " != ") << cb::to_string(res.rhs) << '\n';
    return res.equal ? 0 : 1;
  }

  cb::SweepLimits lim;
  lim.max_param = max_param;
  lim.max_e = max_e;
  std::vector<cb::SweepOutcome> outcomes;
  if (only.empty()) {
    outcomes = cb::run_all_sweeps(lim);
  } else {
    outcomes.push_back(cb::run_sweep(cb::family_from_name(only), lim));
  }
  bool all = true;
  for (const auto& o : outcomes) {
    std::printf("%-20s %10lld cases  %s\n", cb::family_name(o.family).c_str(),
                o.cases, o.pass() ? "ok" : "FAIL");
    for (const auto& bad : o.counterexamples) {
      std::string params;
      for (long long p : bad.params)
        params += (params.empty() ? "" : ",") + std::to_string(p);
      std::printf("  counterexample: {%s}\n", params.c_str());
    }
    all = all && o.pass();
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti tables and homological invariants of glued clique "
               "complexes and their Alexander duals"};
  app.require_subcommand(1);

  SpecFlags report_spec;
  std::optional<int> skeleton, dual_skeleton;
  bool dual = false, summary = false;
  std::string report_format = "table";
  CLI::App* report = app.add_subcommand("report", "print tables and invariants");
  add_spec_flags(report, report_spec);
  report->add_option("--skeleton", skeleton, "truncate the complex at dimension K");
  report->add_flag("--dual", dual, "report on the Alexander dual");
  report->add_option("--dual-skeleton", dual_skeleton,
                     "truncate the Alexander dual at dimension K");
  report->add_flag("--summary", summary,
                   "multiplicity / deg h / Euler characteristic of every skeleton");
  report->add_option("--format", report_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  SpecFlags verify_spec;
  std::string verify_field = "q", verify_format = "table";
  int verify_cap = cb::oracle_cap_from_env();
  CLI::App* verify =
      app.add_subcommand("verify", "check every closed form against brute force");
  add_spec_flags(verify, verify_spec);
  verify->add_option("--field", verify_field, "q (rationals) or f<p> (prime field)");
  verify->add_option("--oracle-cap", verify_cap,
                     "largest vertex count the brute-force engine accepts");
  verify->add_option("--format", verify_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  std::string only;
  std::vector<long long> id_n, id_r;
  std::optional<long long> id_j, id_A, id_s, id_e;
  int max_param = 12, max_e = 4;
  CLI::App* identities =
      app.add_subcommand("identities", "sweep the binomial identity families");
  identities->add_option("--only", only, "restrict to one family by name");
  identities->add_option("--n", id_n, "clique size(s)")->delimiter(',');
  identities->add_option("--r", id_r, "overlap size(s)")->delimiter(',');
  identities->add_option("--j", id_j, "identity degree");
  identities->add_option("--A", id_A, "convolution shift");
  identities->add_option("--s", id_s, "convolution degree");
  identities->add_option("--e", id_e, "clique count");
  identities->add_option("--max-param", max_param, "sweep bound on every parameter");
  identities->add_option("--max-e", max_e, "sweep bound on the clique count");

  try {
    app.parse(argc, argv);
    if (report->parsed())
      return run_report(report_spec, skeleton, dual, dual_skeleton, summary,
                        report_format);
    if (verify->parsed())
      return run_verify(verify_spec, verify_field, verify_cap, verify_format);
    return run_identities(only, id_n, id_r, id_j, id_A, id_s, id_e, max_param,
                          max_e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const cb::InternalMismatch& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return 1;
  } catch (const cb::NegativeBetti& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return 1;
  } catch (const cb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
