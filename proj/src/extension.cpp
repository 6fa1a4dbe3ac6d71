#include "liftfan/extension.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace liftfan {

namespace {

constexpr int kHardAmbientCap = 6;
constexpr int kOrbitCap = 4;

unsigned smallest_primitive_root(unsigned p) {
  for (unsigned g = 2; g < p; ++g) {
    unsigned x = 1;
    bool primitive = true;
    for (unsigned e = 1; e < p - 1; ++e) {
      x = x * g % p;
      if (x == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive && x * g % p == 1) return g;
  }
  throw std::logic_error("no primitive root");
}

}  // namespace

CommutatorForm::CommutatorForm(Modulus l, int n, MatF lambda)
    : l_(l), n_(n), lambda_(std::move(lambda)), kernel_(l.ell(), 0) {
  if (n < 0 || n > kHardAmbientCap)
    throw CapError("rank of G^a must be between 0 and 6, got " +
                   std::to_string(n));
  if (lambda_.p() != l.ell())
    throw InputError("form entries must live mod " + std::to_string(l.ell()));
  const int w = n * (n - 1) / 2;
  if (lambda_.cols() != w)
    throw InputError("form has " + std::to_string(lambda_.cols()) +
                     " columns, expected " + std::to_string(w) +
                     " wedge coordinates");
  if (rank(lambda_) != lambda_.rows())
    throw InputError("form rows are dependent: the center would be smaller "
                     "than F_l^r");
  kernel_ = liftfan::kernel(lambda_);
}

CommutatorForm CommutatorForm::from_kernel(Modulus l, int n,
                                           const Subspace& ker) {
  const int w = n * (n - 1) / 2;
  if (ker.ambient() != w || ker.p() != l.ell())
    throw InputError("kernel must live in the wedge square of G^a");
  return CommutatorForm(l, n, ker.annihilator().basis());
}

MatF CommutatorForm::bilinear_matrix(int k) const {
  WedgeIndex w{n_};
  MatF b(ell(), n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      u8 v = lambda_.at(k, w.index(i, j));
      b.set(i, j, v);
      b.set(j, i, static_cast<int>(neg_mod(v, ell())));
    }
  return b;
}

std::vector<u8> CommutatorForm::pair_value(std::span<const u8> a,
                                           std::span<const u8> b) const {
  if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_)
    throw InputError("pair_value: vector length mismatch");
  const unsigned p = ell();
  WedgeIndex w{n_};
  std::vector<u8> out(static_cast<size_t>(r()), 0);
  for (int k = 0; k < r(); ++k) {
    unsigned acc = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        unsigned wedge =
            (unsigned(a[static_cast<size_t>(i)]) * b[static_cast<size_t>(j)] +
             unsigned(p - 1) * a[static_cast<size_t>(j)] % p *
                 b[static_cast<size_t>(i)]) %
            p;
        acc += unsigned(lambda_.at(k, w.index(i, j))) * wedge;
      }
    out[static_cast<size_t>(k)] = static_cast<u8>(acc % p);
  }
  return out;
}

bool is_liftable(const Subspace& sigma, const CommutatorForm& f) {
  if (sigma.ambient() != f.n() || sigma.p() != f.ell())
    throw InputError("is_liftable: subgroup lives in the wrong ambient group");
  if (sigma.dim() <= 1) return true;
  return f.kernel().contains(wedge_image(sigma));
}

Fan fan(const CommutatorForm& f, bool complete, int cap) {
  Fan out;
  out.complete = complete;
  for (const auto& s : enumerate_subspaces(f.ell(), f.n(), {}, cap)) {
    if (!complete && s.dim() < 2) continue;
    if (is_liftable(s, f)) out.sigmas.push_back(s);
  }
  return out;
}

Subspace radical(const CommutatorForm& f) {
  if (f.r() == 0) return Subspace::full(f.ell(), f.n());
  MatF stacked(f.ell(), 0, f.n());
  for (int k = 0; k < f.r(); ++k)
    stacked = MatF::stack(stacked, f.bilinear_matrix(k));
  return kernel(stacked);
}

RadicalReduction reduce_radical(const CommutatorForm& f) {
  Subspace rad = radical(f);
  const int n = f.n(), s = rad.dim(), m = n - s;
  const unsigned p = f.ell();

  // Complement: standard vectors at the radical's non-pivot columns.
  std::vector<char> is_piv(static_cast<size_t>(n), 0);
  for (int c : rad.pivots()) is_piv[static_cast<size_t>(c)] = 1;
  MatF comp(p, m, n);
  {
    int row = 0;
    for (int j = 0; j < n; ++j)
      if (!is_piv[static_cast<size_t>(j)]) comp.set(row++, j, 1);
  }

  MatF basis_rows = MatF::stack(comp, rad.basis());
  MatF witness = inverse(basis_rows.transposed());

  WedgeIndex wm{m};
  MatF lam(p, f.r(), wm.dim());
  for (int k = 0; k < f.r(); ++k) {
    MatF b = f.bilinear_matrix(k);
    for (int i = 0; i < m; ++i) {
      auto bi = b.apply(comp.row(i));  // b * c_i^T
      for (int j = i + 1; j < m; ++j) {
        unsigned acc = 0;
        for (int t = 0; t < n; ++t)
          acc += unsigned(comp.at(j, t)) * bi[static_cast<size_t>(t)];
        // lambda(c_i ^ c_j) = c_i B c_j^T = -(c_j B c_i^T)
        lam.set(k, wm.index(i, j), static_cast<int>(neg_mod(acc % p, p)));
      }
    }
  }
  CommutatorForm reduced(f.modulus(), m, std::move(lam));
  return {std::move(reduced), std::move(witness), std::move(rad)};
}

Subspace d_max(const Subspace& I, const CommutatorForm& f) {
  if (!is_liftable(I, f))
    throw InputError("d_max: the inner subgroup must be liftable");
  if (f.r() == 0 || I.dim() == 0) return Subspace::full(f.ell(), f.n());
  MatF rows(f.ell(), I.dim() * f.r(), f.n());
  int rr = 0;
  for (int k = 0; k < f.r(); ++k) {
    MatF b = f.bilinear_matrix(k);
    for (int i = 0; i < I.dim(); ++i) {
      // row = x B (so that row . d = lambda_k(x ^ d))
      for (int j = 0; j < f.n(); ++j) {
        unsigned acc = 0;
        for (int t = 0; t < f.n(); ++t)
          acc += unsigned(I.basis().at(i, t)) * b.at(t, j);
        rows.set(rr, j, static_cast<int>(acc % f.ell()));
      }
      ++rr;
    }
  }
  return kernel(rows);
}

bool is_delta_pair(const Subspace& I, const Subspace& D,
                   const CommutatorForm& f) {
  if (I.ambient() != f.n() || D.ambient() != f.n() || I.p() != f.ell() ||
      D.p() != f.ell())
    throw InputError("is_delta_pair: ambient mismatch");
  if (!D.contains(I)) return false;
  if (D.dim() < 2) return false;
  for (int i = 0; i < I.dim(); ++i)
    for (int j = 0; j < D.dim(); ++j) {
      auto v = f.pair_value(I.basis().row(i), D.basis().row(j));
      if (!std::all_of(v.begin(), v.end(), [](u8 x) { return x == 0; }))
        return false;
    }
  return true;
}

std::vector<DeltaPair> delta_pairs(const CommutatorForm& f,
                                   bool include_trivial_I, int cap) {
  std::vector<DeltaPair> out;
  for (const auto& I : enumerate_subspaces(f.ell(), f.n(), {}, cap)) {
    if (!include_trivial_I && I.dim() == 0) continue;
    if (!is_liftable(I, f)) continue;
    Subspace D = d_max(I, f);
    if (D.dim() < 2) continue;
    out.push_back({I, D});
  }
  std::sort(out.begin(), out.end());
  return out;
}

FormProfile form_profile(const CommutatorForm& f) {
  FormProfile pr;
  pr.radical_dim = radical(f).dim();
  pr.fan_by_dim.assign(static_cast<size_t>(std::max(f.n() - 1, 0)), 0);
  for (const auto& s : fan(f).sigmas)
    ++pr.fan_by_dim[static_cast<size_t>(s.dim() - 2)];
  pr.delta_pair_count = static_cast<int>(delta_pairs(f).size());
  return pr;
}

IsoResult isoclinic_eq(const CommutatorForm& a, const CommutatorForm& b,
                       IsoMode mode) {
  if (a.ell() != b.ell() || a.n() != b.n())
    throw InputError("isoclinic_eq: forms live on different groups");
  if (mode == IsoMode::Fixed) return {a.kernel() == b.kernel(), std::nullopt};

  if (a.n() > kOrbitCap)
    throw CapError("orbit search capped at rank 4, got rank " +
                   std::to_string(a.n()));
  if (a.r() != b.r()) return {false, std::nullopt};
  if (a.kernel() == b.kernel())
    return {true, MatF::identity(a.ell(), a.n())};
  if (!(form_profile(a) == form_profile(b))) return {false, std::nullopt};

  IsoResult res{false, std::nullopt};
  for_each_gl(a.modulus(), a.n(), [&](const MatF& g) {
    if (image_subspace(compound_matrix(g, 2), a.kernel()) == b.kernel()) {
      res = {true, g};
      return true;
    }
    return false;
  });
  return res;
}

CommutatorForm pullback_form(const MatF& gamma, const CommutatorForm& f) {
  if (gamma.p() != f.ell() || gamma.rows() != f.n())
    throw InputError("pullback_form: gamma must map onto the form's group");
  if (rank(gamma) != f.n())
    throw InputError("pullback_form: gamma is not surjective");
  const int n_up = gamma.cols();
  if (n_up > kHardAmbientCap)
    throw CapError("pullback source rank exceeds 6");
  MatF lam = f.lambda().mul(compound_matrix(gamma, 2));
  auto rr = rref_with_pivots(lam);
  MatF norm(f.ell(), static_cast<int>(rr.pivots.size()), lam.cols());
  for (int i = 0; i < norm.rows(); ++i)
    for (int j = 0; j < norm.cols(); ++j) norm.set(i, j, rr.mat.at(i, j));
  return CommutatorForm(f.modulus(), n_up, std::move(norm));
}

bool delta_pair_surjects(const MatF& gamma, const DeltaPair& up,
                         const DeltaPair& down) {
  return image_subspace(gamma, up.I) == down.I &&
         image_subspace(gamma, up.D) == down.D;
}

std::vector<MatF> gl_generators(Modulus l, int n) {
  std::vector<MatF> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      MatF t = MatF::identity(l.ell(), n);
      t.set(i, j, 1);
      gens.push_back(std::move(t));
    }
  if (n > 0 && l.ell() > 2) {
    MatF d = MatF::identity(l.ell(), n);
    d.set(0, 0, static_cast<int>(smallest_primitive_root(l.ell())));
    gens.push_back(std::move(d));
  }
  return gens;
}

std::vector<Subspace> wedge_orbit(const Subspace& k, Modulus l, int n) {
  WedgeIndex w{n};
  if (k.ambient() != w.dim() || k.p() != l.ell())
    throw InputError("wedge_orbit: subspace not in wedge coordinates");
  std::vector<MatF> gens;
  for (const auto& g : gl_generators(l, n))
    gens.push_back(compound_matrix(g, 2));
  std::set<Subspace> seen{k};
  std::deque<Subspace> queue{k};
  while (!queue.empty()) {
    Subspace cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& cg : gens) {
      Subspace nxt = image_subspace(cg, cur);
      if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
    }
  }
  return {seen.begin(), seen.end()};
}

Subspace canonical_orbit_rep(const Subspace& k, Modulus l, int n) {
  return wedge_orbit(k, l, n).front();
}

namespace {

bool gl_rec(const Modulus& l, int n, MatF& rows, std::vector<MatF>& partial,
            int depth, const std::function<bool(const MatF&)>& fn) {
  if (depth == n) return fn(rows);
  const unsigned p = l.ell();
  Subspace so_far = Subspace::span(partial[static_cast<size_t>(depth)]);
  std::vector<u8> v(static_cast<size_t>(n), 0);
  // odometer over nonzero vectors, lex ascending with v[0] most significant
  for (;;) {
    int k = n;
    while (k > 0) {
      --k;
      if (++v[static_cast<size_t>(k)] < p) break;
      v[static_cast<size_t>(k)] = 0;
      if (k == 0) return false;
    }
    if (so_far.contains_vector(v)) continue;
    for (int j = 0; j < n; ++j) rows.set(depth, j, v[static_cast<size_t>(j)]);
    MatF vrow(p, 1, n);
    for (int j = 0; j < n; ++j) vrow.set(0, j, v[static_cast<size_t>(j)]);
    partial[static_cast<size_t>(depth + 1)] =
        MatF::stack(partial[static_cast<size_t>(depth)], vrow);
    if (gl_rec(l, n, rows, partial, depth + 1, fn)) return true;
  }
}

}  // namespace

void for_each_gl(Modulus l, int n,
                 const std::function<bool(const MatF&)>& fn) {
  if (n == 0) {
    fn(MatF(l.ell(), 0, 0));
    return;
  }
  MatF rows(l.ell(), n, n);
  std::vector<MatF> partial(static_cast<size_t>(n) + 1, MatF(l.ell(), 0, n));
  gl_rec(l, n, rows, partial, 0, fn);
}

FanDetermination fan_determines(const std::vector<Subspace>& sigmas, Modulus l,
                                int n) {
  if (n > kOrbitCap)
    throw CapError("fan inversion capped at rank 4, got rank " +
                   std::to_string(n));
  WedgeIndex w{n};
  std::set<Subspace> sigma_set;
  for (const auto& s : sigmas) {
    if (s.ambient() != n || s.p() != l.ell())
      throw InputError("fan_determines: subgroup in the wrong ambient group");
    if (s.dim() < 2)
      throw InputError("fan_determines: fan members must be noncyclic");
    sigma_set.insert(s);
  }

  // Wedge images of the target fan and of every other noncyclic subgroup.
  std::vector<Subspace> target_images;
  for (const auto& s : sigma_set) target_images.push_back(wedge_image(s));
  std::vector<Subspace> forbidden_images;
  for (const auto& t : enumerate_subspaces(l.ell(), n)) {
    if (t.dim() < 2 || sigma_set.count(t)) continue;
    forbidden_images.push_back(wedge_image(t));
  }

  FanDetermination out;
  for_each_subspace(l.ell(), w.dim(), {}, w.dim(), [&](const Subspace& k) {
    for (const auto& img : target_images)
      if (!k.contains(img)) return;
    for (const auto& img : forbidden_images)
      if (k.contains(img)) return;
    out.kernels.push_back(k);
  });
  std::sort(out.kernels.begin(), out.kernels.end());

  if (out.kernels.empty()) {
    out.single_orbit = false;
    return out;
  }
  auto orbit = wedge_orbit(out.kernels.front(), l, n);
  out.single_orbit =
      std::all_of(out.kernels.begin(), out.kernels.end(), [&](const Subspace& k) {
        return std::binary_search(orbit.begin(), orbit.end(), k);
      });
  return out;
}

}  // namespace liftfan
