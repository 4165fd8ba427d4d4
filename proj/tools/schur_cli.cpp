// Command line workbench for finite sigma-p-groups: truncated free group
// quotients, relation-tuple classification against exact predictions,
// sigma-automorphism counts, character checks for cyclic-quotient kernels,
// and imaginary quadratic class group surveys.
//
// Exit codes: 0 success, 1 comparison failure, 2 usage or configuration
// error, 3 cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "schur/acceptance.hpp"
#include "schur/class_groups.hpp"
#include "schur/experiments.hpp"
#include "schur/free_subgroups.hpp"
#include "schur/magnus.hpp"
#include "schur/measure.hpp"
#include "schur/report_io.hpp"
#include "schur/sigma_iso.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComparisonFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file " + path);
    f << text;
  }
};

std::vector<schur::FreeWord> parse_relations(const std::string& text, unsigned n) {
  auto words = schur::FreeWord::parse_list(text);
  for (const auto& w : words)
    if (w.max_index() > static_cast<int>(n))
      throw std::invalid_argument("relation \"" + w.str() + "\" uses a generator beyond x" +
                                  std::to_string(n));
  return words;
}

// Evaluate a free word inside an enumerated truncated group.
std::uint32_t word_in_group(const schur::SigmaGroup& G, const schur::FreeWord& w, unsigned n) {
  std::uint32_t g = 0;
  for (int l : w.letters)
    g = G.act(l > 0 ? static_cast<unsigned>(l - 1) : static_cast<unsigned>(-l - 1 + n), g);
  return g;
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma-p-group workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags (-p, -o, --format) are accepted after a subcommand
  app.set_config("--config", "", "key=value configuration file; flags override");

  std::uint32_t p = 3;
  app.add_option("-p,--prime", p, "odd prime modulus")->capture_default_str();

  Output out;
  app.add_option("-o,--output", out.path, "write the report to a file instead of stdout");

  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // ---- witt ----------------------------------------------------------------
  auto* witt = app.add_subcommand("witt", "graded dimensions and predicted orders of F_n/D_i");
  unsigned witt_n = 2, witt_i = 4;
  witt->add_option("-n", witt_n, "generator count")->required();
  witt->add_option("-i,--depth", witt_i, "truncation depth")->required();

  // ---- group ---------------------------------------------------------------
  auto* group = app.add_subcommand("group", "enumerate F_n/D_i and print its invariants");
  unsigned grp_n = 2, grp_i = 3;
  std::uint64_t grp_cap = 1'000'000;
  group->add_option("-n", grp_n, "generator count")->required();
  group->add_option("-i,--depth", grp_i, "truncation depth")->required();
  group->add_option("--cap", grp_cap, "group order cap")->capture_default_str();

  // ---- quotient ------------------------------------------------------------
  auto* quot = app.add_subcommand("quotient", "invariants of F_{n,i}/N_r for odd relations r");
  unsigned quo_n = 2, quo_i = 3;
  std::string quo_rel;
  std::uint64_t quo_cap = 1'000'000, quo_aut_cap = 2187;
  quot->add_option("-n", quo_n, "generator count")->required();
  quot->add_option("-i,--depth", quo_i, "truncation depth")->required();
  quot->add_option("-r,--relations", quo_rel,
                   "semicolon-separated words, e.g. \"1 1 1; 2 2 2\"")->required();
  quot->add_option("--cap", quo_cap, "group order cap")->capture_default_str();
  quot->add_option("--aut-cap", quo_aut_cap, "automorphism enumeration cap")->capture_default_str();

  // ---- aut -----------------------------------------------------------------
  auto* aut = app.add_subcommand("aut", "sigma-automorphism group order");
  unsigned aut_n = 2, aut_i = 3;
  std::string aut_rel;
  std::uint64_t aut_cap = 2187;
  aut->add_option("-n", aut_n, "generator count")->required();
  aut->add_option("-i,--depth", aut_i, "truncation depth")->required();
  aut->add_option("-r,--relations", aut_rel, "optional relations defining a quotient");
  aut->add_option("--cap", aut_cap, "order cap for the enumeration")->capture_default_str();

  // ---- zassenhaus ----------------------------------------------------------
  auto* zass = app.add_subcommand("zassenhaus", "Zassenhaus type from relation words");
  unsigned za_n = 2, za_depth = 5;
  std::string za_rel;
  std::uint64_t za_cap = 1'000'000;
  zass->add_option("-n", za_n, "generator count")->required();
  zass->add_option("-r,--relations", za_rel, "exactly n odd relations inside Fr(F_n)")->required();
  zass->add_option("--max-depth", za_depth, "deepest truncation level to probe")
      ->capture_default_str();
  zass->add_option("--cap", za_cap, "group order cap")->capture_default_str();

  // ---- measure ---------------------------------------------------------------
  auto* meas = app.add_subcommand("measure", "evaluate one of the closed-form measure values");
  std::string meas_op;
  unsigned meas_n = 1, meas_m = 0;
  std::string meas_aut = "1", meas_odd = "1";
  meas->add_option("op", meas_op,
                   "one of: mu-inf-schn, mu-inf-udg, mu-n-class-count, mu-n-restriction, mu-inf-ab")
      ->required()
      ->check(CLI::IsMember({"mu-inf-schn", "mu-inf-udg", "mu-n-class-count",
                             "mu-n-restriction", "mu-inf-ab"}));
  meas->add_option("-n", meas_n, "generator count");
  meas->add_option("-m", meas_m, "relation rank");
  meas->add_option("--aut", meas_aut, "automorphism group order");
  meas->add_option("--odd-size", meas_odd, "|F_{n,D}^-| for the class count");

  // ---- classify --------------------------------------------------------------
  auto* cls = app.add_subcommand("classify", "run a relation-tuple experiment and compare");
  unsigned cls_n = 1, cls_i = 4;
  bool cls_exhaustive = false;
  std::uint64_t cls_samples = 0, cls_seed = 0;
  bool cls_seed_given = false;
  double cls_tol = 4.0;
  unsigned cls_workers = default_workers();
  std::uint64_t cls_cap = 1'000'000, cls_aut_cap = 2187;
  cls->add_option("-n", cls_n, "generator count")->required();
  cls->add_option("-i,--depth", cls_i, "truncation depth")->required();
  cls->add_flag("--exhaustive", cls_exhaustive, "iterate every relation tuple");
  cls->add_option("--samples", cls_samples, "monte carlo sample count");
  cls->add_option("--seed", cls_seed, "master seed (recorded in the report)")
      ->each([&](const std::string&) { cls_seed_given = true; });
  cls->add_option("--tolerance", cls_tol, "sigma tolerance for monte carlo comparison")
      ->capture_default_str();
  cls->add_option("--workers", cls_workers, "worker threads")->capture_default_str();
  cls->add_option("--cap", cls_cap, "group order cap")->capture_default_str();
  cls->add_option("--aut-cap", cls_aut_cap, "automorphism enumeration cap")->capture_default_str();

  // ---- character ---------------------------------------------------------------
  auto* chr = app.add_subcommand("character", "cyclic-kernel character table and index formula");
  unsigned chr_n = 2, chr_r = 1;
  chr->add_option("-n", chr_n, "generator count (>= 2)")->required();
  chr->add_option("-r", chr_r, "quotient F_n -> Z/p^r")->capture_default_str();

  // ---- classgroup ---------------------------------------------------------------
  auto* cgr = app.add_subcommand("classgroup", "reduced forms and p-Sylow type of one discriminant");
  long long cg_d = -23;
  bool cg_forms = false;
  cgr->add_option("-d,--discriminant", cg_d, "negative fundamental discriminant")->required();
  cgr->add_flag("--forms", cg_forms, "list the reduced forms");

  // ---- survey ---------------------------------------------------------------
  auto* srv = app.add_subcommand("survey", "p-Sylow type distribution over a discriminant range");
  long long srv_bound = 1'000'000;
  bool srv_exclude_pd = false;
  long long srv_residue = 0, srv_modulus = 0;
  unsigned srv_workers = default_workers();
  std::string srv_csv;
  srv->add_option("--bound", srv_bound, "consider -bound < d < 0")->capture_default_str();
  srv->add_flag("--exclude-p-dividing", srv_exclude_pd, "drop discriminants with p | d");
  srv->add_option("--residue", srv_residue, "congruence filter: d = residue (mod modulus)");
  srv->add_option("--modulus", srv_modulus, "congruence filter modulus (0 = off)");
  srv->add_option("--workers", srv_workers, "worker threads")->capture_default_str();
  srv->add_option("--csv", srv_csv, "also write per-discriminant rows to this CSV file");

  // ---- verify-all ---------------------------------------------------------------
  auto* ver = app.add_subcommand("verify-all", "run the full acceptance suite");
  schur::AcceptanceOptions acc;
  ver->add_option("--samples", acc.mc_samples, "monte carlo sample count")->capture_default_str();
  ver->add_option("--seed", acc.mc_seed, "monte carlo master seed")->capture_default_str();
  ver->add_option("--survey-bound", acc.survey_bound, "survey discriminant bound")
      ->capture_default_str();
  ver->add_option("--workers", acc.workers, "worker threads (0 = hardware)");
  ver->add_option("--only", acc.only, "run a single criterion 1..11");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    schur::require_odd_prime(p);

    if (*witt) {
      auto dims = schur::witt_graded_dims(p, witt_n, witt_i);
      std::ostringstream os;
      os << "graded dims c_1..c_" << witt_i - 1 << ":";
      for (long long d : dims.dims) os << " " << d;
      os << "\norder p^sum = " << dims.group_order().str()
         << "\nodd part   = " << dims.odd_part_order().str() << "\n";
      out.write(os.str());
      return kExitOk;
    }

    if (*group) {
      schur::SigmaGroup G = schur::enumerate_group(p, grp_n, grp_i, grp_cap);
      auto [even, odd] = schur::parts(G);
      auto series = schur::dimension_subgroup_series(G);
      std::ostringstream os;
      os << "F_" << grp_n << " / D_" << grp_i << " at p = " << p << "\n"
         << "order   = " << G.order() << "\n"
         << "|G^+|   = " << even.size << "\n"
         << "|G^-|   = " << odd.size() << "\n";
      os << "|D_i|   =";
      for (std::size_t i = 0; i < series.size(); ++i) os << " " << series[i].size;
      os << "  (i = 1.." << series.size() << ")\n";
      os << "fingerprint = " << schur::fingerprint(G).digest() << "\n";
      out.write(os.str());
      return kExitOk;
    }

    if (*quot) {
      auto rel = parse_relations(quo_rel, quo_n);
      schur::SigmaGroup G = schur::enumerate_group(p, quo_n, quo_i, quo_cap);
      schur::MagnusAlgebra A(p, quo_n, quo_i);
      std::vector<std::uint32_t> seeds;
      for (const auto& w : rel) {
        if (!A.is_odd(A.eval(w)))
          throw std::invalid_argument("relation \"" + w.str() + "\" is not odd at depth " +
                                      std::to_string(quo_i));
        std::uint32_t g = word_in_group(G, w, quo_n);
        if (g != 0) seeds.push_back(g);
      }
      schur::SubgroupSet N = schur::normal_closure(G, seeds);
      auto q = schur::quotient(G, N, false);
      auto [even, odd] = schur::parts(q.group);
      std::ostringstream os;
      os << "|N_r|   = " << N.size << "\n"
         << "order   = " << q.group.order() << "\n"
         << "|G^+|   = " << even.size << ", |G^-| = " << odd.size() << "\n"
         << "m (relation rank) = " << schur::relation_rank(G, N) << "\n"
         << "fingerprint = " << schur::fingerprint(q.group).digest() << "\n";
      try {
        os << "|Aut_sigma| = " << schur::sigma_aut_group(q.group, quo_aut_cap).order().str() << "\n";
      } catch (const schur::CapExceeded&) {
        os << "|Aut_sigma| = (cap exceeded)\n";
      }
      out.write(os.str());
      return kExitOk;
    }

    if (*aut) {
      schur::SigmaGroup G = schur::enumerate_group(p, aut_n, aut_i);
      schur::SigmaGroup target;
      if (aut_rel.empty()) {
        target = std::move(G);
      } else {
        auto rel = parse_relations(aut_rel, aut_n);
        std::vector<std::uint32_t> seeds;
        for (const auto& w : rel) {
          std::uint32_t g = word_in_group(G, w, aut_n);
          if (g != 0) seeds.push_back(g);
        }
        target = schur::quotient(G, schur::normal_closure(G, seeds), false).group;
      }
      auto a = schur::sigma_aut_group(target, aut_cap);
      out.write("|Aut_sigma| = " + a.order().str() + "  (|G| = " +
                std::to_string(target.order()) + ")\n");
      return kExitOk;
    }

    if (*zass) {
      auto rel = parse_relations(za_rel, za_n);
      auto t = schur::zassenhaus_type(p, za_n, rel, za_depth, za_cap);
      out.write("Zassenhaus type: " + t.str() + "\n");
      return kExitOk;
    }

    if (*meas) {
      schur::Int aut_order(meas_aut);
      std::ostringstream os;
      if (meas_op == "mu-inf-schn") {
        auto v = schur::mu_inf_sch_n(p, meas_n);
        os << v.str() << " ~ " << v.approx().value << "\n";
      } else if (meas_op == "mu-inf-udg") {
        auto v = schur::mu_inf_udg(p, meas_n, meas_m, aut_order);
        os << v.str() << " ~ " << v.approx().value << "\n";
      } else if (meas_op == "mu-n-class-count") {
        auto v = schur::mu_n_class_count(p, meas_n, schur::Int(meas_odd), meas_m, aut_order);
        os << v.str() << "\n";
      } else if (meas_op == "mu-n-restriction") {
        os << schur::mu_n_restriction_factor(p, meas_n, meas_m).str() << "\n";
      } else {
        auto v = schur::mu_inf_abelianization(p, aut_order);
        os << v.str() << " ~ " << v.approx().value << "\n";
      }
      out.write(os.str());
      return kExitOk;
    }

    if (*cls) {
      schur::ExperimentSpec spec;
      spec.p = p;
      spec.n = cls_n;
      spec.depth = cls_i;
      spec.exhaustive = cls_exhaustive;
      spec.workers = cls_workers;
      spec.caps.group_order = cls_cap;
      spec.caps.aut_order = cls_aut_cap;
      if (!cls_exhaustive) {
        if (cls_samples == 0)
          throw std::invalid_argument("monte carlo mode needs --samples (or pass --exhaustive)");
        spec.samples = cls_samples;
        if (!cls_seed_given) {
          spec.master_seed = std::random_device{}();
          std::cerr << "no --seed given; generated seed " << spec.master_seed
                    << " (recorded in the report)\n";
        } else {
          spec.master_seed = cls_seed;
        }
      }
      schur::FrequencyReport rep = schur::run_experiment(spec);
      schur::CompareResult cr = schur::compare(rep, cls_tol);
      std::string text = format == "json" ? schur::to_json(rep).dump(2)
                                          : schur::to_text(rep);
      out.write(text + "\nverdict: " + cr.summary() + "\n");
      return cr.pass ? kExitOk : kExitComparisonFailed;
    }

    if (*chr) {
      schur::CyclicKernelBasis basis{p, chr_n, chr_r};
      std::ostringstream os;
      os << "kernel of F_" << chr_n << " -> Z/" << p << "^" << chr_r
         << ", rank N_ab = " << basis.size() << "\n";
      bool all = true;
      for (const auto& row : schur::character_check(basis)) {
        os << "  chi_N(" << row.delta << ") = ";
        if (row.vacuous) {
          os << "(vacuous: no even a outside N)\n";
          continue;
        }
        os << row.computed << ", predicted " << row.predicted << " -> "
           << (row.match ? "ok" : "MISMATCH") << "\n";
        all = all && row.match;
      }
      auto ic = schur::index_formula_check(basis);
      os << "  i_N = " << ic.i_n_computed << ", |(G/N)^+| (i_G - 1) + 1 = " << ic.rhs << " -> "
         << (ic.match ? "ok" : "MISMATCH") << "\n";
      all = all && ic.match;
      out.write(os.str());
      return all ? kExitOk : kExitComparisonFailed;
    }

    if (*cgr) {
      schur::FormClassGroup cg(cg_d);
      std::ostringstream os;
      os << "d = " << cg_d << ", h = " << cg.class_number() << ", " << p
         << "-Sylow type = " << schur::partition_str(cg.p_sylow_type(p)) << "\n";
      if (cg_forms)
        for (const auto& f : cg.forms())
          os << "  (" << f.a << ", " << f.b << ", " << f.c << ")\n";
      out.write(os.str());
      return kExitOk;
    }

    if (*srv) {
      schur::SurveyOptions so;
      so.p = p;
      so.bound = srv_bound;
      so.include_p_dividing = !srv_exclude_pd;
      so.residue = srv_residue;
      so.modulus = srv_modulus;
      so.workers = srv_workers;
      if (!srv_csv.empty()) {
        std::ofstream f(srv_csv);
        if (!f) throw std::invalid_argument("cannot open CSV file " + srv_csv);
        f << schur::to_csv(schur::survey_rows(so));
      }
      schur::SurveyReport rep = schur::survey(so);
      out.write(format == "json" ? schur::to_json(rep).dump(2) : schur::to_text(rep));
      return kExitOk;
    }

    if (*ver) {
      int failures = 0;
      for (const auto& r : schur::run_acceptance(acc)) {
        std::cout << schur::format_criterion(r) << "\n" << std::flush;
        if (!r.pass) ++failures;
      }
      return failures == 0 ? kExitOk : kExitComparisonFailed;
    }
  } catch (const schur::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
