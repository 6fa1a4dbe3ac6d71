#include "liftfan/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "liftfan/cohomology.hpp"
#include "liftfan/oracle.hpp"
#include "liftfan/problemfile.hpp"
#include "liftfan/projmodel.hpp"
#include "liftfan/scan.hpp"

namespace liftfan {

namespace {

using nlohmann::json;

struct GlobalOpts {
  bool json = false;
  std::uint64_t seed = 0;
  int capn = kDefaultAmbientCap;
};

std::vector<std::vector<int>> rows_of(const Subspace& s) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < s.dim(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < s.ambient(); ++j) row.push_back(s.basis().at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<int>> rows_of(const MatF& m) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string rows_text(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) out += "; ";
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(rows[i][j]);
    }
  }
  return out;
}

std::string subspace_text(const Subspace& s) { return rows_text(rows_of(s)); }

int cmd_fan(const GlobalOpts& g, const std::string& file, bool complete) {
  CommutatorForm f = ProblemFile::load(file).to_form();
  Fan fz = fan(f, complete, g.capn);
  if (g.json) {
    json out;
    out["complete"] = complete;
    out["count"] = fz.sigmas.size();
    out["sigmas"] = json::array();
    for (const auto& s : fz.sigmas) out["sigmas"].push_back(rows_of(s));
    std::cout << out.dump() << "\n";
    return 0;
  }
  const char* name = complete ? "Σ̄" : "Σ";
  if (fz.sigmas.empty()) {
    std::cout << name << " = ∅ (0 subgroups)\n";
    return 0;
  }
  std::cout << name << ": " << fz.sigmas.size() << " subgroups\n";
  for (const auto& s : fz.sigmas)
    std::cout << "dim " << s.dim() << ": " << subspace_text(s) << "\n";
  return 0;
}

int cmd_delta_pairs(const GlobalOpts& g, const std::string& file,
                    bool include_trivial) {
  CommutatorForm f = ProblemFile::load(file).to_form();
  std::vector<DeltaPair> pairs = delta_pairs(f, include_trivial, g.capn);
  if (g.json) {
    json out;
    out["count"] = pairs.size();
    out["pairs"] = json::array();
    for (const auto& p : pairs) {
      json one;
      one["I"] = rows_of(p.I);
      one["D"] = rows_of(p.D);
      out["pairs"].push_back(one);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << pairs.size() << " maximal pairs\n";
  for (const auto& p : pairs)
    std::cout << "I dim " << p.I.dim() << ": " << subspace_text(p.I)
              << " | D dim " << p.D.dim() << ": " << subspace_text(p.D)
              << "\n";
  return 0;
}

int cmd_unramified(const GlobalOpts& g, const std::string& file) {
  CommutatorForm f = ProblemFile::load(file).to_form();
  UnramifiedReport rep = unramified_quotient(f, g.capn);
  if (g.json) {
    json out;
    out["quotient_dim"] = rep.quotient_dim;
    out["r2_min"] = rows_of(rep.r2_min);
    out["r2_sigma"] = rows_of(rep.r2_sigma);
    out["quotient_basis"] = json::array();
    for (const auto& cls : rep.quotient_basis) {
      std::vector<int> coords(cls.coords().begin(), cls.coords().end());
      out["quotient_basis"].push_back(coords);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "r2_sigma dim " << rep.r2_sigma.dim() << ", r2_min dim "
            << rep.r2_min.dim() << ", quotient " << rep.quotient_dim << "\n";
  for (const auto& cls : rep.quotient_basis) {
    std::cout << "class:";
    for (u8 c : cls.coords()) std::cout << ' ' << int(c);
    std::cout << "\n";
  }
  return 0;
}

int cmd_isoclinic(const GlobalOpts& g, const std::string& file_a,
                  const std::string& file_b, bool orbit) {
  CommutatorForm fa = ProblemFile::load(file_a).to_form();
  CommutatorForm fb = ProblemFile::load(file_b).to_form();
  IsoResult res = isoclinic_eq(fa, fb, orbit ? IsoMode::GlOrbit : IsoMode::Fixed);
  if (g.json) {
    json out;
    out["equivalent"] = res.equivalent;
    out["mode"] = orbit ? "orbit" : "fixed";
    out["witness"] = res.witness ? json(rows_of(*res.witness)) : json();
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "isoclinic: " << (res.equivalent ? "yes" : "no") << "\n";
  if (res.witness) std::cout << "witness: " << rows_text(rows_of(*res.witness)) << "\n";
  return 0;
}

int cmd_reduce(const GlobalOpts& g, const std::string& file,
               const std::string& out_path) {
  CommutatorForm f = ProblemFile::load(file).to_form();
  RadicalReduction red = reduce_radical(f);
  ProblemFile reduced = ProblemFile::from_form(red.reduced);
  if (!out_path.empty()) reduced.save(out_path);
  if (g.json) {
    json out;
    out["radical"] = rows_of(red.rad);
    out["radical_dim"] = red.rad.dim();
    out["witness"] = rows_of(red.witness);
    out["reduced"] = json::parse(reduced.dumps());
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "radical dim " << red.rad.dim() << ": " << subspace_text(red.rad)
            << "\n";
  std::cout << "witness: " << rows_text(rows_of(red.witness)) << "\n";
  std::cout << "reduced: " << reduced.dumps();
  if (!out_path.empty())
    std::cout << "reduced problem written to " << out_path << "\n";
  return 0;
}

int cmd_oracle_verify(const GlobalOpts& g, unsigned l, int n, int samples) {
  Modulus m(l);
  if (n < 2) throw InputError("n ≥ 2 required");
  if (n > g.capn)
    throw CapError("n = " + std::to_string(n) + " above --cap-n = " +
                   std::to_string(g.capn));
  const int wedge = n * (n - 1) / 2;
  std::mt19937_64 rng(g.seed);
  std::vector<Subspace> subs = enumerate_subspaces(l, n, {}, g.capn);

  json cx;  // first counterexample, if any
  int pairs_checked = 0;
  for (int trial = 0; trial < samples; ++trial) {
    int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(
                                             std::min(3, wedge)));
    MatF lam(l, r, wedge);
    for (;;) {
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < wedge; ++j)
          lam.set(i, j, static_cast<u8>(rng() % l));
      if (rank(lam) == r) break;
    }
    CommutatorForm f(m, n, lam);
    Cocycle c(f);
    for (const auto& s : subs) {
      if (is_liftable(s, f) != c.preimage_abelian(s)) {
        cx["kind"] = "liftable";
        cx["lambda"] = rows_of(lam);
        cx["sigma"] = rows_of(s);
        break;
      }
    }
    if (!cx.empty()) break;
    for (const auto& D : subs) {
      if (D.dim() < 2) continue;
      for (const auto& I : subs) {
        if (!D.contains(I)) continue;
        ++pairs_checked;
        if (is_delta_pair(I, D, f) != c.pairs_commute(I, D)) {
          cx["kind"] = "delta-pair";
          cx["lambda"] = rows_of(lam);
          cx["I"] = rows_of(I);
          cx["D"] = rows_of(D);
          break;
        }
      }
      if (!cx.empty()) break;
    }
    if (!cx.empty()) break;
  }

  if (g.json) {
    json out;
    out["forms"] = samples;
    out["subspaces"] = subs.size();
    out["pairs_checked"] = pairs_checked;
    out["agree"] = cx.empty();
    if (!cx.empty()) out["counterexample"] = cx;
    std::cout << out.dump() << "\n";
    return cx.empty() ? 0 : 1;
  }
  if (!cx.empty()) {
    std::cout << "disagreement (" << cx["kind"].get<std::string>()
              << "): lambda = " << cx["lambda"].dump() << "\n";
    return 1;
  }
  std::cout << samples << " forms × " << subs.size()
            << " subspaces: all agree\n";
  std::cout << pairs_checked << " nested pairs: all agree\n";
  return 0;
}

int cmd_projcheck(const GlobalOpts& g, const std::string& file, unsigned q) {
  CommutatorForm f = ProblemFile::load(file).to_form();
  ActionReport rep = check_projective_action(f, q);
  if (g.json) {
    json out;
    out["faithful"] = rep.faithful;
    out["fixed_iff_liftable"] = rep.fixed_iff_liftable;
    out["components_disjoint"] = rep.components_disjoint;
    out["stabilizer_splits_action"] = rep.stabilizer_splits_action;
    out["free_outside_fixed_loci"] = rep.free_outside_fixed_loci;
    out["subspaces_checked"] = rep.subspaces_checked;
    out["components_checked"] = rep.components_checked;
    out["all_hold"] = rep.all_hold();
    std::cout << out.dump() << "\n";
    return rep.all_hold() ? 0 : 1;
  }
  auto line = [](const char* what, bool ok) {
    std::cout << what << ": " << (ok ? "pass" : "FAIL") << "\n";
  };
  line("claim 1 faithful action", rep.faithful);
  line("claim 2 fixed loci detect liftability", rep.fixed_iff_liftable);
  line("claim 3 components pairwise disjoint", rep.components_disjoint);
  line("claim 4 stabilizer fixes, quotient free", rep.stabilizer_splits_action);
  line("claim 5 fixed points confined to own loci", rep.free_outside_fixed_loci);
  if (rep.all_hold())
    std::cout << "all five claims hold (" << rep.subspaces_checked
              << " subspaces, " << rep.components_checked << " components)\n";
  else
    std::cout << "claims failed\n";
  return rep.all_hold() ? 0 : 1;
}

int cmd_scan(const GlobalOpts& g, unsigned l, int n, int r,
             const std::string& out_path, bool resume) {
  ScanSummary s = run_scan(Modulus(l), n, r, out_path, resume, &std::cerr);
  std::vector<ScanRecord> recs = read_scan_records(out_path);
  if (g.json) {
    json out;
    out["orbits"] = s.orbits_total;
    out["new"] = s.orbits_written;
    out["partial_dedup"] = s.partial_dedup;
    out["highlights"] = json::array();
    for (const auto& rec : recs)
      if (rec.quotient_dim > 0)
        out["highlights"].push_back(json::parse(rec.to_line()));
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "scan complete: " << s.orbits_total << " orbits ("
            << s.orbits_written << " new) -> " << out_path << "\n";
  for (const auto& rec : recs)
    if (rec.quotient_dim > 0)
      std::cout << "quotient_dim " << rec.quotient_dim << ": kernel "
                << rows_text(rec.kernel) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"fans, maximal pairs, and unramified quotients of central "
               "extensions of elementary abelian groups"};
  app.set_version_flag("--version", std::string(kToolVersion));
  GlobalOpts g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for randomized sweeps");
  app.add_option("--cap-n", g.capn, "ambient rank cap for enumerations");
  app.require_subcommand(0, 1);

  std::string fan_file;
  bool fan_complete = false;
  CLI::App* c_fan = app.add_subcommand("fan", "list liftable subgroups");
  c_fan->add_option("file", fan_file, "problem file")->required();
  c_fan->add_flag("--complete", fan_complete, "include cyclic and trivial");

  std::string dp_file;
  bool dp_trivial = false;
  CLI::App* c_dp = app.add_subcommand("delta-pairs", "list maximal pairs");
  c_dp->add_option("file", dp_file, "problem file")->required();
  c_dp->add_flag("--include-trivial", dp_trivial, "add the I = 0 pair");

  std::string un_file;
  CLI::App* c_un =
      app.add_subcommand("unramified", "unramified quotient dimensions");
  c_un->add_option("file", un_file, "problem file")->required();

  std::string iso_a, iso_b;
  bool iso_orbit = false;
  CLI::App* c_iso =
      app.add_subcommand("isoclinic", "compare two extension problems");
  c_iso->add_option("a", iso_a, "first problem file")->required();
  c_iso->add_option("b", iso_b, "second problem file")->required();
  c_iso->add_flag("--orbit", iso_orbit, "allow a change of basis");

  std::string red_file, red_out;
  CLI::App* c_red =
      app.add_subcommand("reduce", "split off the radical directions");
  c_red->add_option("file", red_file, "problem file")->required();
  c_red->add_option("--out", red_out, "write the reduced problem here");

  unsigned ov_l = 3;
  int ov_n = 3, ov_samples = 25;
  CLI::App* c_ov = app.add_subcommand(
      "oracle-verify", "criterion vs group arithmetic sweep");
  c_ov->add_option("--l", ov_l, "prime");
  c_ov->add_option("--n", ov_n, "rank");
  c_ov->add_option("--samples", ov_samples, "number of random forms");

  std::string pc_file;
  unsigned pc_q = 0;
  CLI::App* c_pc =
      app.add_subcommand("projcheck", "verify the projective action claims");
  c_pc->add_option("file", pc_file, "problem file")->required();
  c_pc->add_option("--q", pc_q, "field size override (prime, 1 mod l)");

  unsigned sc_l = 3;
  int sc_n = 2, sc_r = 1;
  std::string sc_out;
  bool sc_resume = false;
  CLI::App* c_sc = app.add_subcommand("scan", "orbit census to a JSONL file");
  c_sc->add_option("--l", sc_l, "prime");
  c_sc->add_option("--n", sc_n, "rank");
  c_sc->add_option("--r", sc_r, "center rank");
  c_sc->add_option("--out", sc_out, "results file")->required();
  c_sc->add_flag("--resume", sc_resume, "continue an interrupted scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_fan->parsed()) return cmd_fan(g, fan_file, fan_complete);
    if (c_dp->parsed()) return cmd_delta_pairs(g, dp_file, dp_trivial);
    if (c_un->parsed()) return cmd_unramified(g, un_file);
    if (c_iso->parsed()) return cmd_isoclinic(g, iso_a, iso_b, iso_orbit);
    if (c_red->parsed()) return cmd_reduce(g, red_file, red_out);
    if (c_ov->parsed()) return cmd_oracle_verify(g, ov_l, ov_n, ov_samples);
    if (c_pc->parsed()) return cmd_projcheck(g, pc_file, pc_q);
    if (c_sc->parsed()) return cmd_scan(g, sc_l, sc_n, sc_r, sc_out, sc_resume);
    std::cout << app.help();
    return 2;
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace liftfan
