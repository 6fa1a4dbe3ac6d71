// Acceptance sweep: eight end-to-end checks, one [PASS]/[FAIL] line each.
// Every comparison is exact integer arithmetic. The two heavyweight checks
// also fail when they exceed their wall-clock budgets (120 s for the
// criterion/oracle sweep, 60 s for the projective action). The process
// exits with the number of failed checks.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liftfan/cohomology.hpp"
#include "liftfan/extension.hpp"
#include "liftfan/fflinalg.hpp"
#include "liftfan/oracle.hpp"
#include "liftfan/projmodel.hpp"
#include "liftfan/scan.hpp"

namespace fs = std::filesystem;
using namespace liftfan;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

MatF mat_from_u8(unsigned p, int cols, const std::vector<std::vector<u8>>& rows) {
  std::vector<std::vector<int>> ir;
  ir.reserve(rows.size());
  for (const auto& r : rows) ir.emplace_back(r.begin(), r.end());
  return MatF::from_rows(p, cols, ir);
}

Subspace rows_span(unsigned p, int ambient,
                   const std::vector<std::vector<int>>& rows) {
  return Subspace::span(MatF::from_rows(p, ambient, rows));
}

std::vector<u8> unit(int n, int i) {
  std::vector<u8> v(static_cast<size_t>(n), 0);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

std::vector<u8> random_vec(std::mt19937_64& g, unsigned p, int n) {
  std::vector<u8> v(static_cast<size_t>(n));
  for (auto& x : v) x = static_cast<u8>(g() % p);
  return v;
}

MatF random_full_rank(std::mt19937_64& g, unsigned p, int rows, int cols) {
  for (;;) {
    std::vector<std::vector<u8>> rs;
    for (int i = 0; i < rows; ++i) rs.push_back(random_vec(g, p, cols));
    MatF m = mat_from_u8(p, cols, rs);
    if (rank(m) == rows) return m;
  }
}

CommutatorForm random_form(std::mt19937_64& g, Modulus l, int n, int r) {
  WedgeIndex w{n};
  return CommutatorForm(l, n, random_full_rank(g, l.ell(), r, w.dim()));
}

// A nonzero class of the given degree with random coordinates.
ExtClass random_class(std::mt19937_64& g, Modulus l, int n, int degree) {
  auto count = binomial(n, degree);
  for (;;) {
    std::vector<u8> c(static_cast<size_t>(count));
    bool any = false;
    for (auto& x : c) {
      x = static_cast<u8>(g() % l.ell());
      any = any || x;
    }
    if (any) return ExtClass::from_coords(l, n, degree, std::move(c));
  }
}

std::vector<u8> random_member(std::mt19937_64& g, const Subspace& s) {
  std::vector<u8> v(static_cast<size_t>(s.ambient()), 0);
  for (int b = 0; b < s.dim(); ++b) {
    unsigned c = static_cast<unsigned>(g() % s.p());
    if (!c) continue;
    auto row = s.basis().row(b);
    for (int j = 0; j < s.ambient(); ++j)
      v[static_cast<size_t>(j)] =
          static_cast<u8>((v[static_cast<size_t>(j)] + c * row[j]) % s.p());
  }
  return v;
}

// Random subspace of s with dim >= min_dim (retries until it hits).
Subspace random_inside(std::mt19937_64& g, const Subspace& s, int min_dim) {
  if (s.dim() == 0) return s;
  for (;;) {
    int take = min_dim + static_cast<int>(g() % static_cast<unsigned>(
                                              s.dim() - min_dim + 1));
    std::vector<std::vector<u8>> rows;
    for (int i = 0; i < take; ++i) rows.push_back(random_member(g, s));
    Subspace r = rows.empty() ? Subspace(s.p(), s.ambient())
                              : Subspace::span(mat_from_u8(s.p(), s.ambient(), rows));
    if (r.dim() >= min_dim) return r;
  }
}

// Completes gamma's rows to a basis and keeps the matching block of the
// inverse: gamma * right_inverse(gamma) is the identity downstairs.
MatF right_inverse(const MatF& gamma) {
  const int nu = gamma.cols(), nd = gamma.rows();
  std::vector<std::vector<u8>> rows;
  for (int i = 0; i < nd; ++i) {
    auto r = gamma.row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  for (int j = 0; j < nu && static_cast<int>(rows.size()) < nu; ++j) {
    auto cand = rows;
    cand.push_back(unit(nu, j));
    MatF m = mat_from_u8(gamma.p(), nu, cand);
    if (rank(m) == static_cast<int>(cand.size())) rows = std::move(cand);
  }
  MatF minv = inverse(mat_from_u8(gamma.p(), nu, rows));
  MatF r(gamma.p(), nu, nd);
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nd; ++j) r.set(i, j, minv.at(i, j));
  return r;
}

// Census files shared by checks 4 and 8, computed once.
struct Scans {
  fs::path dir;
  std::map<std::pair<int, int>, std::vector<ScanRecord>> recs;  // (n, r)
};

const Scans& shared_scans() {
  static const Scans s = [] {
    Scans out;
    out.dir = fs::temp_directory_path() / "liftfan-acceptance";
    fs::remove_all(out.dir);
    fs::create_directories(out.dir);
    auto run = [&](int n, int r) {
      fs::path p = out.dir / ("scan-" + std::to_string(n) + "-" +
                              std::to_string(r) + ".jsonl");
      run_scan(Modulus(3), n, r, p, false);
      out.recs[{n, r}] = read_scan_records(p);
    };
    run(2, 1);
    run(3, 1);
    run(4, 1);
    run(4, 2);
    run(4, 3);
    return out;
  }();
  return s;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. The subgroup criterion and the pair criterion agree with honest group
//    arithmetic in the extension, exhaustively at n <= 3 and on random
//    forms at n = 4.
bool check1(std::string& note) {
  auto t0 = Clock::now();
  std::mt19937_64 g(101);
  Modulus l(3);
  long forms = 0, sigma_checks = 0, pair_checks = 0, bad = 0;

  auto sweep = [&](const CommutatorForm& f, const std::vector<Subspace>& subs,
                   const std::vector<std::pair<int, int>>& nested) {
    Cocycle c(f);
    for (const auto& s : subs) {
      if (is_liftable(s, f) != c.preimage_abelian(s)) ++bad;
      ++sigma_checks;
    }
    for (auto [i, d] : nested) {
      if (is_delta_pair(subs[static_cast<size_t>(i)],
                        subs[static_cast<size_t>(d)], f) !=
          c.pairs_commute(subs[static_cast<size_t>(i)],
                          subs[static_cast<size_t>(d)]))
        ++bad;
      ++pair_checks;
    }
    ++forms;
  };

  for (int n : {2, 3, 4}) {
    auto subs = enumerate_subspaces(3, n);
    std::vector<std::pair<int, int>> nested;  // I inside D, D noncyclic
    for (size_t d = 0; d < subs.size(); ++d) {
      if (subs[d].dim() < 2) continue;
      for (size_t i = 0; i < subs.size(); ++i)
        if (subs[d].contains(subs[i]))
          nested.emplace_back(static_cast<int>(i), static_cast<int>(d));
    }
    WedgeIndex w{n};
    if (n <= 3) {
      // every form of rank one, via its kernel
      for (const auto& k : enumerate_subspaces(3, w.dim(), w.dim() - 1))
        sweep(CommutatorForm::from_kernel(l, n, k), subs, nested);
    } else {
      for (int t = 0; t < 50; ++t)
        sweep(random_form(g, l, n, 1 + t % 3), subs, nested);
    }
  }

  double el = seconds_since(t0);
  std::ostringstream ss;
  ss << forms << " forms, " << sigma_checks << " subgroup checks, "
     << pair_checks << " pair checks, " << bad << " disagreements ("
     << static_cast<int>(el * 1000) << " ms, budget 120 s)";
  note = ss.str();
  return bad == 0 && el < 120.0;
}

// 2. Fan, maximal pairs and the unramified quotient only see the
//    commutator form: symmetric cocycle perturbations change the group
//    law but none of the invariants.
bool check2(std::string& note) {
  std::mt19937_64 g(202);
  Modulus l(3);
  const int n = 3;
  WedgeIndex w{n};
  auto subs = enumerate_subspaces(3, n);
  int variants = 0, moved = 0, bad = 0;

  for (int t = 0; t < 20; ++t) {
    CommutatorForm f = random_form(g, l, n, 1 + t % 3);
    Fan base = fan(f);
    auto base_pairs = delta_pairs(f, true);
    UnramifiedReport base_u = unramified_quotient(f);
    Cocycle plain(f);

    for (int v = 0; v < 10; ++v) {
      std::vector<MatF> sym;
      bool any = false;
      for (int k = 0; k < f.r(); ++k) {
        MatF s(3, n, n);
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) {
            int x = static_cast<int>(g() % 3);
            s.set(i, j, x);
            s.set(j, i, x);
            any = any || x;
          }
        sym.push_back(std::move(s));
      }
      if (!any) sym[0].set(0, 0, 1);
      Cocycle var = isoclinic_variant(plain, sym);
      ++variants;

      // the perturbation is visible in the cocycle itself
      bool differs = false;
      for (int i = 0; i < n && !differs; ++i)
        for (int j = 0; j < n && !differs; ++j)
          if (var.beta(unit(n, i), unit(n, j)) !=
              plain.beta(unit(n, i), unit(n, j)))
            differs = true;
      if (differs) ++moved;

      // commutators are central and recover the original form
      MatF lam2(3, f.r(), w.dim());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          GroupElt c = var.commutator(var.lift(unit(n, i)), var.lift(unit(n, j)));
          for (u8 x : c.a)
            if (x) ++bad;
          for (int k = 0; k < f.r(); ++k)
            lam2.set(k, w.index(i, j), c.z[static_cast<size_t>(k)]);
        }
      CommutatorForm f2(l, n, lam2);
      if (fan(f2).sigmas != base.sigmas) ++bad;
      if (delta_pairs(f2, true) != base_pairs) ++bad;
      UnramifiedReport u2 = unramified_quotient(f2);
      if (u2.r2_sigma != base_u.r2_sigma || u2.r2_min != base_u.r2_min ||
          u2.quotient_dim != base_u.quotient_dim)
        ++bad;

      // the perturbed group computes the same fan
      std::vector<Subspace> oracle_fan;
      for (const auto& s : subs)
        if (s.dim() >= 2 && var.preimage_abelian(s)) oracle_fan.push_back(s);
      if (oracle_fan != base.sigmas) ++bad;
    }
  }

  std::ostringstream ss;
  ss << variants << " perturbed cocycles, " << moved
     << " visibly different, " << bad << " invariant mismatches";
  note = ss.str();
  return bad == 0 && moved == variants;
}

// 3. The ten quadratic-field lines in F_3^4 pin down a single form orbit,
//    and its relation ideal truncates the cohomology at degree 2.
bool check3(std::string& note) {
  Modulus l(3);
  MatF j = MatF::from_rows(
      3, 4, {{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
  std::set<Subspace> lineset;
  for (int code = 1; code < 81; ++code) {
    std::vector<std::vector<u8>> rows(1);
    int c = code;
    for (int i = 0; i < 4; ++i) {
      rows[0].push_back(static_cast<u8>(c % 3));
      c /= 3;
    }
    rows.push_back(j.apply(rows[0]));
    lineset.insert(Subspace::span(mat_from_u8(3, 4, rows)));
  }
  if (lineset.size() != 10) {
    note = "expected 10 invariant planes, got " + std::to_string(lineset.size());
    return false;
  }

  std::vector<Subspace> lines(lineset.begin(), lineset.end());
  FanDetermination fd = fan_determines(lines, l, 4);
  Subspace want = rows_span(3, 6,
                            {{1, 0, 0, 0, 0, 0},
                             {0, 1, 0, 1, 2, 0},
                             {0, 0, 1, 2, 0, 0},
                             {0, 0, 0, 0, 0, 1}});
  bool has_want =
      std::count(fd.kernels.begin(), fd.kernels.end(), want) == 1;

  CommutatorForm f = CommutatorForm::from_kernel(l, 4, want);
  auto fs2 = fan(f).sigmas;
  bool fan_ok = std::set<Subspace>(fs2.begin(), fs2.end()) == lineset;

  Subspace rs = fan_relations(f);
  Subspace want_rs =
      rows_span(3, 6, {{0, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 1, 0}});

  std::vector<ExtClass> gens;
  for (int i = 0; i < rs.dim(); ++i) {
    auto row = rs.basis().row(i);
    gens.push_back(ExtClass::from_coords(
        l, 4, 2, std::vector<u8>(row.begin(), row.end())));
  }
  auto dims = ideal_quotient_dims(gens, l, 4);
  const std::vector<int> want_dims{1, 4, 4, 0, 0};

  std::ostringstream ss;
  ss << "10 lines, " << fd.kernels.size() << " compatible kernels"
     << (fd.single_orbit ? " (single orbit)" : " (NOT a single orbit)")
     << ", quotient dims";
  for (int d : dims) ss << ' ' << d;
  note = ss.str();
  return fd.single_orbit && has_want && fan_ok && rs == want_rs &&
         dims == want_dims;
}

// 4. Every degree-2 relation class of every census orbit is unramified on
//    every maximal pair of its form.
bool check4(std::string& note) {
  const Scans& sc = shared_scans();
  long records = 0, classes = 0, pair_checks = 0, bad = 0;
  for (const auto& [key, recs] : sc.recs)
    for (const ScanRecord& rec : recs) {
      WedgeIndex w{rec.n};
      CommutatorForm f = CommutatorForm::from_kernel(
          Modulus(3), rec.n, rows_span(3, w.dim(), rec.kernel));
      Subspace rs = fan_relations(f);
      auto pairs = delta_pairs(f, true);
      for (int i = 0; i < rs.dim(); ++i) {
        auto row = rs.basis().row(i);
        ExtClass a = ExtClass::from_coords(
            Modulus(3), rec.n, 2, std::vector<u8>(row.begin(), row.end()));
        ++classes;
        for (const auto& pr : pairs) {
          if (!is_unramified_on_pair(a, pr)) ++bad;
          ++pair_checks;
        }
      }
      ++records;
    }
  std::ostringstream ss;
  ss << records << " orbits, " << classes << " relation classes, "
     << pair_checks << " pair checks, " << bad << " ramified";
  note = ss.str();
  return bad == 0 && records > 0;
}

// 5. Pullback preserves unramifiedness in the three situations that cover
//    it: the inner subgroup dies downstairs, the outer subgroup maps to a
//    cyclic image (degree >= 2 there), or the pair surjects onto a pair
//    the class is already unramified on.
bool check5(std::string& note) {
  std::mt19937_64 g(505);
  Modulus l(3);
  int done[3] = {0, 0, 0};
  long bad = 0;

  for (int t = 0; t < 200; ++t) {
    const int branch = t % 3;
    const int nu = 3 + (t / 3) % 2;
    const int nd = (nu == 3) ? 2 : 2 + static_cast<int>(g() % 2);
    MatF gamma = random_full_rank(g, 3, nd, nu);
    Subspace ker = kernel(gamma);

    if (branch == 0) {
      // inner subgroup inside ker gamma, any degree
      Subspace itil = random_inside(g, ker, 1);
      Subspace dtil = itil;
      while (dtil.dim() < 2) {
        std::vector<std::vector<u8>> rows{random_vec(g, 3, nu)};
        dtil = dtil.sum(Subspace::span(mat_from_u8(3, nu, rows)));
      }
      ExtClass a = random_class(g, l, nd, 1 + static_cast<int>(g() % nd));
      if (!is_unramified_on_pair(pullback_class(gamma, a), DeltaPair{itil, dtil}))
        ++bad;
      ++done[0];
    } else if (branch == 1) {
      // outer image cyclic; degrees 1 would fail, start at 2
      std::vector<u8> v;
      do v = random_vec(g, 3, nu);
      while (ker.contains_vector(v));
      Subspace dtil = Subspace::span(mat_from_u8(3, nu, {v}))
                          .sum(random_inside(g, ker, 1));
      Subspace itil = random_inside(g, dtil, 0);
      int deg = 2 + (nd > 2 ? static_cast<int>(g() % (nd - 1)) : 0);
      ExtClass a = random_class(g, l, nd, deg);
      if (!is_unramified_on_pair(pullback_class(gamma, a), DeltaPair{itil, dtil}))
        ++bad;
      ++done[1];
    } else {
      // surjects onto a pair where the class is unramified by design
      Subspace down_d = random_inside(g, Subspace::full(3, nd), 2);
      Subspace down_i(3, nd);
      do down_i = random_inside(g, down_d, 0);
      while (down_i.dim() >= nd);
      const int mq = nd - down_i.dim();
      MatF q(3, mq, nd);
      {
        Subspace ann = down_i.annihilator();
        for (int i = 0; i < mq; ++i)
          for (int c = 0; c < nd; ++c) q.set(i, c, ann.basis().at(i, c));
      }
      ExtClass b = random_class(g, l, mq, 1 + static_cast<int>(g() % mq));
      ExtClass a = pullback_class(q, b);
      if (!is_unramified_on_pair(a, DeltaPair{down_i, down_d})) ++bad;

      MatF rinv = right_inverse(gamma);
      std::vector<std::vector<u8>> irows, drows;
      for (int i = 0; i < down_i.dim(); ++i)
        irows.push_back(rinv.apply(down_i.basis().row(i)));
      if (ker.dim() > 0 && g() % 2) irows.push_back(random_member(g, ker));
      drows = irows;
      for (int i = 0; i < down_d.dim(); ++i)
        drows.push_back(rinv.apply(down_d.basis().row(i)));
      if (ker.dim() > 0 && g() % 2) drows.push_back(random_member(g, ker));
      Subspace itil = irows.empty() ? Subspace(3, nu)
                                    : Subspace::span(mat_from_u8(3, nu, irows));
      Subspace dtil = Subspace::span(mat_from_u8(3, nu, drows));
      if (!delta_pair_surjects(gamma, DeltaPair{itil, dtil},
                               DeltaPair{down_i, down_d}))
        ++bad;
      if (!is_unramified_on_pair(pullback_class(gamma, a), DeltaPair{itil, dtil}))
        ++bad;
      ++done[2];
    }
  }

  std::ostringstream ss;
  ss << done[0] << "+" << done[1] << "+" << done[2] << " instances, " << bad
     << " ramified pullbacks";
  note = ss.str();
  return bad == 0 && done[0] + done[1] + done[2] == 200;
}

// 6. The monomial projective model satisfies all five action claims on
//    the two reference extensions.
bool check6(std::string& note) {
  auto t0 = Clock::now();
  WedgeIndex w2{2}, w3{3};
  MatF lam2(3, 1, w2.dim());
  lam2.set(0, w2.index(0, 1), 1);
  CommutatorForm heis(Modulus(3), 2, lam2);
  MatF lam3(3, 1, w3.dim());
  lam3.set(0, w3.index(0, 1), 1);
  CommutatorForm big(Modulus(3), 3, lam3);

  ActionReport r1 = check_projective_action(heis);
  ActionReport r2 = check_projective_action(big);
  double el = seconds_since(t0);

  std::ostringstream ss;
  ss << "dim 9: " << r1.subspaces_checked << " subgroups, "
     << r1.components_checked << " components; dim 27: "
     << r2.subspaces_checked << " subgroups, " << r2.components_checked
     << " components (" << static_cast<int>(el * 1000)
     << " ms, budget 60 s)";
  note = ss.str();
  return r1.all_hold() && r1.subspaces_checked == 6 && r2.all_hold() &&
         r2.subspaces_checked == 28 && el < 60.0;
}

// 7. Reducing by the radical preserves and reflects liftability through
//    the witness coordinates, and the projection hits the whole reduced
//    fan.
bool check7(std::string& note) {
  std::mt19937_64 g(707);
  Modulus l(3);
  auto subs4 = enumerate_subspaces(3, 4);
  int forms = 0;
  long checks = 0, bad = 0;

  for (int t = 0; t < 20; ++t) {
    const int m = 2 + t % 2;
    WedgeIndex wm{m};
    int r = 1 + static_cast<int>(g() % static_cast<unsigned>(
                                     std::min(3, wm.dim())));
    CommutatorForm small = random_form(g, l, m, r);
    MatF gamma = random_full_rank(g, 3, m, 4);
    CommutatorForm f = pullback_form(gamma, small);

    RadicalReduction red = reduce_radical(f);
    if (red.rad.dim() == 0) {
      ++bad;  // the radical always contains ker gamma here
      continue;
    }
    const int mq = red.reduced.n();
    MatF head(3, mq, 4);
    for (int i = 0; i < mq; ++i)
      for (int c = 0; c < 4; ++c) head.set(i, c, red.witness.at(i, c));

    std::set<Subspace> projected;
    for (const auto& u : subs4) {
      Subspace pu = image_subspace(head, u);
      bool above = is_liftable(u, f);
      if (above != is_liftable(pu, red.reduced)) ++bad;
      if (above) projected.insert(pu);
      ++checks;
    }
    std::set<Subspace> below;
    for (const auto& s : enumerate_subspaces(3, mq))
      if (is_liftable(s, red.reduced)) below.insert(s);
    if (projected != below) ++bad;
    ++forms;
  }

  std::ostringstream ss;
  ss << forms << " degenerate forms, " << checks << " subgroup checks, "
     << bad << " mismatches";
  note = ss.str();
  return bad == 0 && forms == 20;
}

// 8. The census is deterministic byte for byte, the smallest cases have
//    the expected orbit counts, and every positive quotient record
//    survives an independent recomputation by stacked restrictions.
bool check8(std::string& note) {
  const Scans& sc = shared_scans();
  Modulus l(3);
  bool counts_ok = sc.recs.at({2, 1}).size() == 1 &&
                   sc.recs.at({3, 1}).size() == 1;

  fs::path pa = sc.dir / "det-a.jsonl", pb = sc.dir / "det-b.jsonl";
  fs::remove(pa);
  fs::remove(pb);
  run_scan(l, 3, 1, pa, false);
  run_scan(l, 3, 1, pb, false);
  std::string ba = read_file(pa), bb = read_file(pb);
  bool det_ok = !ba.empty() && ba == bb;

  int positives = 0, bad = 0;
  long records = 0;
  WedgeIndex w{4};
  for (int r = 1; r <= 3; ++r)
    for (const ScanRecord& rec : sc.recs.at({4, r})) {
      ++records;
      if (rec.quotient_dim == 0) continue;
      ++positives;
      CommutatorForm f = CommutatorForm::from_kernel(
          l, 4, rows_span(3, w.dim(), rec.kernel));
      auto sigmas = fan(f).sigmas;

      // relations via stacked restrictions of the monomial basis
      std::vector<std::vector<int>> rows;
      for (const auto& s : sigmas) {
        WedgeIndex ws{s.dim()};
        for (int c = 0; c < ws.dim(); ++c) {
          std::vector<int> row(static_cast<size_t>(w.dim()));
          for (int tmon = 0; tmon < w.dim(); ++tmon) {
            auto [i, jx] = w.pair(tmon);
            ExtClass mono = ExtClass::monomial(l, 4, {i, jx});
            row[static_cast<size_t>(tmon)] =
                restrict_class(mono, s).coords()[static_cast<size_t>(c)];
          }
          rows.push_back(std::move(row));
        }
      }
      Subspace r2s = rows.empty()
                         ? Subspace::full(3, w.dim())
                         : kernel(MatF::from_rows(3, w.dim(), rows));
      Subspace r2min = Subspace::span(f.lambda());
      if (!r2s.contains(r2min)) ++bad;
      if (r2s.dim() - r2min.dim() != rec.quotient_dim) ++bad;
      UnramifiedReport u = unramified_quotient(f);
      if (u.r2_sigma != r2s || u.r2_min != r2min ||
          u.quotient_dim != rec.quotient_dim)
        ++bad;
      if (static_cast<int>(sigmas.size()) != rec.fan_size) ++bad;
    }

  std::ostringstream ss;
  ss << "1+1 small orbits, identical reruns: " << (det_ok ? "yes" : "NO")
     << ", " << records << " census orbits, " << positives
     << " positive quotients rechecked, " << bad << " mismatches";
  note = ss.str();
  return counts_ok && det_ok && bad == 0 && positives >= 1;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    bool (*fn)(std::string&);
  };
  const Entry entries[] = {
      {"liftability and pair criteria match group arithmetic", check1},
      {"invariants stable under cocycle perturbation", check2},
      {"quadratic-field fan inverts to a unique orbit", check3},
      {"relation classes unramified on every maximal pair", check4},
      {"pullback preserves unramifiedness", check5},
      {"projective action claims", check6},
      {"radical reduction correspondence", check7},
      {"census determinism and independent recheck", check8},
  };

  int failed = 0;
  int idx = 0;
  for (const Entry& e : entries) {
    ++idx;
    bool ok = false;
    std::string detail;
    try {
      ok = e.fn(detail);
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    if (!ok) ++failed;
    std::printf("[%s] %d. %s: %s\n", ok ? "PASS" : "FAIL", idx, e.label,
                detail.c_str());
    std::fflush(stdout);
  }
  if (failed) std::printf("%d of 8 checks failed\n", failed);
  return failed;
}
