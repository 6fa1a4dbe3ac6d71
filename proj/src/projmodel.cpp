#include "liftfan/projmodel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace liftfan {

namespace {

u8 pow_mod(unsigned base, unsigned e, unsigned q) {
  unsigned acc = 1 % q;
  base %= q;
  for (unsigned i = 0; i < e; ++i) acc = acc * base % q;
  return static_cast<u8>(acc);
}

std::uint64_t ipow(unsigned b, int e) {
  std::uint64_t acc = 1;
  for (int i = 0; i < e; ++i) acc *= b;
  return acc;
}

}  // namespace

unsigned default_q(unsigned ell) {
  Modulus check(ell);  // validates the prime
  for (unsigned q = ell + 1;; q += ell)
    if (is_prime(q)) return q;
}

u8 primitive_ell_root(unsigned ell, unsigned q) {
  if (!is_prime(q) || q % ell != 1)
    throw InputError("field size must be a prime equal to 1 mod " +
                     std::to_string(ell));
  for (unsigned x = 2; x < q; ++x)
    if (pow_mod(x, ell, q) == 1) return static_cast<u8>(x);
  throw std::logic_error("no root of unity in a field that must have one");
}

MonomialMat MonomialMat::identity(int dim) {
  MonomialMat m;
  m.perm.resize(static_cast<size_t>(dim));
  m.scale.assign(static_cast<size_t>(dim), 1);
  for (int i = 0; i < dim; ++i) m.perm[static_cast<size_t>(i)] = i;
  return m;
}

MonomialMat MonomialMat::mul(const MonomialMat& rhs, unsigned q) const {
  // (this ∘ rhs) e_i = rhs.scale[i] * this(e_{rhs.perm[i]}).
  MonomialMat out;
  const int d = dim();
  out.perm.resize(static_cast<size_t>(d));
  out.scale.resize(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    int mid = rhs.perm[static_cast<size_t>(i)];
    out.perm[static_cast<size_t>(i)] = perm[static_cast<size_t>(mid)];
    out.scale[static_cast<size_t>(i)] = static_cast<u8>(
        unsigned(rhs.scale[static_cast<size_t>(i)]) *
        scale[static_cast<size_t>(mid)] % q);
  }
  return out;
}

MonomialMat MonomialMat::pow(unsigned e, unsigned q) const {
  MonomialMat acc = identity(dim());
  for (unsigned i = 0; i < e; ++i) acc = acc.mul(*this, q);
  return acc;
}

MatF MonomialMat::dense(unsigned q) const {
  const int d = dim();
  MatF m(q, d, d);
  // Column i holds the image of e_i; rows index output coordinates.
  for (int i = 0; i < d; ++i)
    m.set(perm[static_cast<size_t>(i)], i, scale[static_cast<size_t>(i)]);
  return m;
}

bool MonomialMat::is_scalar() const {
  for (int i = 0; i < dim(); ++i)
    if (perm[static_cast<size_t>(i)] != i) return false;
  for (int i = 1; i < dim(); ++i)
    if (scale[static_cast<size_t>(i)] != scale[0]) return false;
  return true;
}

MonomialRep::MonomialRep(Cocycle c, unsigned q, int character_index)
    : cocycle_(std::move(c)), q_(q), j_(character_index) {
  const unsigned ell = cocycle_.ell();
  if (cocycle_.r() == 0)
    throw InputError("no characters to induce: the center is trivial");
  if (j_ < 0 || j_ >= cocycle_.r())
    throw InputError("character index out of range");
  if (q_ > 251) throw InputError("field size must be a prime below 252");
  zeta_ = primitive_ell_root(ell, q_);  // also validates q

  std::uint64_t d = ipow(ell, cocycle_.n());
  if (d > kProjDimCap)
    throw CapError("induced factor dimension " + std::to_string(d) +
                   " exceeds " + std::to_string(kProjDimCap));
  dim_ = static_cast<int>(d);

  for (int i = 0; i < cocycle_.n(); ++i) {
    std::vector<u8> e(static_cast<size_t>(cocycle_.n()), 0);
    e[static_cast<size_t>(i)] = 1;
    gens_.push_back(matrix_of(cocycle_.lift(e)));
  }
  for (int k = 0; k < cocycle_.r(); ++k) {
    std::vector<u8> z(static_cast<size_t>(cocycle_.r()), 0);
    z[static_cast<size_t>(k)] = 1;
    gens_.push_back(matrix_of(cocycle_.central(z)));
  }
}

std::vector<u8> MonomialRep::coset_vector(int index) const {
  std::vector<u8> v(static_cast<size_t>(n()));
  unsigned rem = static_cast<unsigned>(index);
  for (int i = 0; i < n(); ++i) {
    v[static_cast<size_t>(i)] = static_cast<u8>(rem % ell());
    rem /= ell();
  }
  return v;
}

int MonomialRep::coset_index(std::span<const u8> v) const {
  int idx = 0;
  for (int i = n() - 1; i >= 0; --i)
    idx = idx * static_cast<int>(ell()) + v[static_cast<size_t>(i)];
  return idx;
}

MonomialMat MonomialRep::matrix_of(const GroupElt& g) const {
  MonomialMat m;
  m.perm.resize(static_cast<size_t>(dim_));
  m.scale.resize(static_cast<size_t>(dim_));
  const unsigned ell = cocycle_.ell();
  for (int idx = 0; idx < dim_; ++idx) {
    std::vector<u8> a = coset_vector(idx);
    std::vector<u8> target(a.size());
    for (size_t i = 0; i < a.size(); ++i)
      target[i] = static_cast<u8>((a[i] + g.a[i]) % ell);
    std::vector<u8> shift = cocycle_.beta(g.a, a);
    unsigned expo =
        (unsigned(g.z[static_cast<size_t>(j_)]) +
         shift[static_cast<size_t>(j_)]) %
        ell;
    m.perm[static_cast<size_t>(idx)] = coset_index(target);
    m.scale[static_cast<size_t>(idx)] = pow_mod(zeta_, expo, q_);
  }
  return m;
}

MonomialRep induced_rep(const CommutatorForm& form, int j, unsigned q) {
  MonomialRep rep(Cocycle(form), q, j);
  const Cocycle& c = rep.cocycle();
  const unsigned ell = form.ell();

  // The construction must satisfy the group's defining relations.
  auto gen_elt = [&](int i) {
    if (i < form.n()) {
      std::vector<u8> e(static_cast<size_t>(form.n()), 0);
      e[static_cast<size_t>(i)] = 1;
      return c.lift(e);
    }
    std::vector<u8> z(static_cast<size_t>(form.r()), 0);
    z[static_cast<size_t>(i - form.n())] = 1;
    return c.central(z);
  };
  const int total = form.n() + form.r();
  for (int i = 0; i < total; ++i) {
    GroupElt gi = gen_elt(i);
    MonomialMat mi = rep.matrix_of(gi);
    if (!(mi.pow(ell, q) == MonomialMat::identity(rep.dim())))
      throw std::logic_error("generator image violates the exponent");
    for (int k = 0; k < total; ++k) {
      GroupElt gk = gen_elt(k);
      MonomialMat prod = mi.mul(rep.matrix_of(gk), q);
      if (!(prod == rep.matrix_of(c.mul(gi, gk))))
        throw std::logic_error("generator images violate the cocycle rule");
    }
  }
  for (int k = 0; k < form.r(); ++k) {
    const MonomialMat& zmat = rep.generator_matrices()[
        static_cast<size_t>(form.n() + k)];
    if (!zmat.is_scalar())
      throw std::logic_error("center image is not scalar");
    u8 expect = (k == j) ? rep.zeta() : u8{1};
    if (zmat.scale[0] != expect)
      throw std::logic_error("center acts by the wrong character");
  }
  return rep;
}

std::vector<MonomialRep> induced_factors(const CommutatorForm& form,
                                         unsigned q) {
  if (form.r() == 0)
    throw InputError("no characters to induce: the center is trivial");
  std::vector<MonomialRep> out;
  out.reserve(static_cast<size_t>(form.r()));
  for (int j = 0; j < form.r(); ++j) out.push_back(induced_rep(form, j, q));
  return out;
}

FixedLocus fixed_locus(const Subspace& sigma,
                       const std::vector<MonomialRep>& reps) {
  if (reps.empty()) throw InputError("fixed_locus needs at least one factor");
  const MonomialRep& first = reps.front();
  const unsigned q = first.q(), ell = first.ell();
  if (sigma.p() != ell || sigma.ambient() != first.n())
    throw InputError("fixed_locus: subgroup in the wrong ambient group");
  for (const auto& r : reps)
    if (r.q() != q || r.n() != first.n())
      throw InputError("fixed_locus: factors disagree on the model");

  // Joint eigenspaces per factor, refined one lifted basis vector at a time.
  struct Piece {
    std::vector<u8> expo;
    Subspace space;
  };
  std::vector<std::vector<Piece>> per_factor;
  for (const auto& rep : reps) {
    std::vector<Piece> pieces{
        {{}, Subspace::full(q, rep.dim())}};
    for (int i = 0; i < sigma.dim(); ++i) {
      auto row = sigma.basis().row(i);
      MonomialMat lift_mat =
          rep.matrix_of(rep.cocycle().lift(row));
      MatF dense = lift_mat.dense(q);
      std::vector<Piece> next;
      for (unsigned t = 0; t < ell; ++t) {
        u8 mu = pow_mod(rep.zeta(), t, q);
        MatF shifted = dense;
        for (int d = 0; d < shifted.rows(); ++d)
          shifted.set(d, d,
                      (shifted.at(d, d) + q - mu) % q);
        Subspace eig = kernel(shifted);
        if (eig.dim() == 0) continue;
        for (const auto& piece : pieces) {
          Subspace cut = piece.space.intersect(eig);
          if (cut.dim() == 0) continue;
          Piece p2{piece.expo, cut};
          p2.expo.push_back(static_cast<u8>(t));
          next.push_back(std::move(p2));
        }
      }
      pieces = std::move(next);
    }
    per_factor.push_back(std::move(pieces));
  }

  // Assemble the product of the per-factor component lists.
  std::uint64_t count = 1;
  for (const auto& pf : per_factor) {
    count *= pf.size();
    if (count > 10000)
      throw CapError("fixed locus has too many components to list");
  }
  FixedLocus out;
  if (count == 0) return out;
  std::vector<size_t> pick(per_factor.size(), 0);
  for (;;) {
    FixedComponent comp;
    for (size_t f = 0; f < per_factor.size(); ++f) {
      comp.factors.push_back(per_factor[f][pick[f]].space);
      comp.exponents.push_back(per_factor[f][pick[f]].expo);
    }
    out.components.push_back(std::move(comp));
    size_t k = per_factor.size();
    while (k > 0) {
      --k;
      if (++pick[k] < per_factor[k].size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
  }
}

FixedComponent map_component(const FixedComponent& c, std::span<const u8> a,
                             const std::vector<MonomialRep>& reps) {
  if (c.factors.size() != reps.size())
    throw InputError("map_component: factor count mismatch");
  FixedComponent out;
  out.exponents = c.exponents;  // exponents shift; callers compare spaces
  for (size_t f = 0; f < reps.size(); ++f) {
    MonomialMat m = reps[f].matrix_of(reps[f].cocycle().lift(a));
    out.factors.push_back(
        image_subspace(m.dense(reps[f].q()), c.factors[f]));
  }
  return out;
}

StabilizerSubgroup h_sigma(const Subspace& sigma, const CommutatorForm& f) {
  Subspace d = d_max(sigma, f);  // throws unless sigma is liftable
  StabilizerSubgroup out{d, ipow(f.ell(), d.dim() + f.r())};
  return out;
}

ActionReport check_projective_action(const CommutatorForm& f, unsigned q) {
  if (q == 0) q = default_q(f.ell());
  std::vector<MonomialRep> reps = induced_factors(f, q);
  const unsigned ell = f.ell();
  const int n = f.n();
  Cocycle c(f);

  ActionReport rep{true, true, true, true, true, 0, 0};

  // Every nonzero coset vector, via the first factor's indexing.
  std::vector<std::vector<u8>> nonzero;
  for (int idx = 1; idx < reps.front().dim(); ++idx)
    nonzero.push_back(reps.front().coset_vector(idx));

  // (1) Faithful: some factor sees every nonzero element non-scalarly.
  for (const auto& a : nonzero) {
    bool moved = false;
    for (const auto& r : reps)
      if (!r.matrix_of(c.lift(a)).is_scalar()) moved = true;
    if (!moved) rep.faithful = false;
  }

  // (2) Nonempty fixed locus exactly for liftable subgroups.
  auto subs = enumerate_subspaces(ell, n);
  for (const auto& s : subs) {
    FixedLocus loc = fixed_locus(s, reps);
    if (loc.empty() == is_liftable(s, f)) rep.fixed_iff_liftable = false;
    ++rep.subspaces_checked;
  }

  // (3) and (4) sweep the liftable subgroups with their loci.
  for (const auto& s : subs) {
    if (!is_liftable(s, f)) continue;
    FixedLocus loc = fixed_locus(s, reps);
    rep.components_checked += static_cast<int>(loc.components.size());

    for (size_t i = 0; i < loc.components.size(); ++i)
      for (size_t k = i + 1; k < loc.components.size(); ++k) {
        bool disjoint = false;
        for (size_t fac = 0; fac < reps.size(); ++fac)
          if (loc.components[i].factors[fac]
                  .intersect(loc.components[k].factors[fac])
                  .dim() == 0)
            disjoint = true;
        if (!disjoint) rep.components_disjoint = false;
      }

    Subspace stab = h_sigma(s, f).ga_part;
    auto same_spaces = [](const FixedComponent& a, const FixedComponent& b) {
      return a.factors == b.factors;
    };
    for (const auto& a : nonzero) {
      bool inside = stab.contains_vector(a);
      for (const auto& comp : loc.components) {
        FixedComponent image = map_component(comp, a, reps);
        if (same_spaces(image, comp) != inside)
          rep.stabilizer_splits_action = false;
      }
    }

    // Freeness of the quotient on the component set, by orbit counting:
    // every orbit must have the full quotient size.
    std::uint64_t quotient_size = ipow(ell, n - stab.dim());
    std::set<std::vector<Subspace>> seen;
    std::uint64_t orbits = 0;
    for (const auto& comp : loc.components) {
      if (seen.count(comp.factors)) continue;
      std::set<std::vector<Subspace>> orbit;
      orbit.insert(comp.factors);
      for (const auto& a : nonzero)
        orbit.insert(map_component(comp, a, reps).factors);
      if (orbit.size() != quotient_size) rep.stabilizer_splits_action = false;
      seen.insert(orbit.begin(), orbit.end());
      ++orbits;
    }
    if (orbits * quotient_size != loc.components.size())
      rep.stabilizer_splits_action = false;
  }

  // (5) The fixed set of each nonzero element is its own cyclic locus,
  // which the complete fan already contains.
  Fan complete = fan(f, true);
  for (const auto& a : nonzero) {
    MatF row(ell, 1, n);
    for (int j = 0; j < n; ++j) row.set(0, j, a[static_cast<size_t>(j)]);
    Subspace line = Subspace::span(row);
    if (!std::binary_search(complete.sigmas.begin(), complete.sigmas.end(),
                            line))
      rep.free_outside_fixed_loci = false;
    FixedLocus loc = fixed_locus(line, reps);
    if (loc.empty()) rep.free_outside_fixed_loci = false;
    // Per factor, the distinct eigenspaces of the lift appear among the
    // component factors and their dimensions add up to the whole space,
    // so every eigenvector tuple lies inside some component.
    for (size_t fac = 0; fac < reps.size(); ++fac) {
      std::set<Subspace> pieces;
      for (const auto& comp : loc.components) pieces.insert(comp.factors[fac]);
      int total = 0;
      for (const auto& s : pieces) total += s.dim();
      if (total != reps[fac].dim()) rep.free_outside_fixed_loci = false;
    }
  }
  return rep;
}

}  // namespace liftfan
