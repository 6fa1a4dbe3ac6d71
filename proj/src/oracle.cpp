#include "liftfan/oracle.hpp"

#include <stdexcept>
#include <utility>

namespace liftfan {

namespace {

std::vector<u8> add_vec(std::span<const u8> a, std::span<const u8> b,
                        unsigned p) {
  std::vector<u8> out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    out[i] = static_cast<u8>((a[i] + b[i]) % p);
  return out;
}

std::vector<u8> neg_vec(std::span<const u8> a, unsigned p) {
  std::vector<u8> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<u8>(neg_mod(a[i], p));
  return out;
}

// Odometer sweep over all vectors of F_p^n.
template <typename Fn>
void for_each_vector(unsigned p, int n, Fn fn) {
  std::vector<u8> v(static_cast<size_t>(n), 0);
  for (;;) {
    fn(v);
    int k = n - 1;
    while (k >= 0 && v[static_cast<size_t>(k)] == p - 1) {
      v[static_cast<size_t>(k)] = 0;
      --k;
    }
    if (k < 0) return;
    ++v[static_cast<size_t>(k)];
  }
}

}  // namespace

Cocycle::Cocycle(CommutatorForm form) : form_(std::move(form)) {}

Cocycle::Cocycle(CommutatorForm form, std::vector<MatF> sym)
    : form_(std::move(form)), sym_(std::move(sym)) {
  if (static_cast<int>(sym_.size()) != form_.r())
    throw InputError("cocycle perturbation needs one matrix per center "
                     "coordinate");
  for (const auto& m : sym_) {
    if (m.p() != form_.ell() || m.rows() != form_.n() || m.cols() != form_.n())
      throw InputError("cocycle perturbation has the wrong shape");
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < i; ++j)
        if (m.at(i, j) != m.at(j, i))
          throw InputError("cocycle perturbation must be symmetric");
  }
}

std::vector<u8> Cocycle::beta(std::span<const u8> a,
                              std::span<const u8> b) const {
  const unsigned p = ell();
  const int nn = n();
  WedgeIndex w{nn};
  std::vector<u8> out(static_cast<size_t>(r()), 0);
  for (int k = 0; k < r(); ++k) {
    unsigned acc = 0;  // bounded by n^2 * 12^3, far below UINT_MAX
    for (int i = 0; i < nn; ++i)
      for (int j = i + 1; j < nn; ++j)
        acc += unsigned(form_.lambda().at(k, w.index(i, j))) *
               a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    if (!sym_.empty()) {
      const MatF& s = sym_[static_cast<size_t>(k)];
      for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j)
          acc += unsigned(s.at(i, j)) * a[static_cast<size_t>(i)] *
                 b[static_cast<size_t>(j)];
    }
    out[static_cast<size_t>(k)] = static_cast<u8>(acc % p);
  }
  return out;
}

GroupElt Cocycle::identity() const {
  return {std::vector<u8>(static_cast<size_t>(n()), 0),
          std::vector<u8>(static_cast<size_t>(r()), 0)};
}

GroupElt Cocycle::lift(std::span<const u8> a) const {
  if (static_cast<int>(a.size()) != n())
    throw InputError("lift: vector length mismatch");
  return {{a.begin(), a.end()}, std::vector<u8>(static_cast<size_t>(r()), 0)};
}

GroupElt Cocycle::central(std::span<const u8> z) const {
  if (static_cast<int>(z.size()) != r())
    throw InputError("central: vector length mismatch");
  return {std::vector<u8>(static_cast<size_t>(n()), 0), {z.begin(), z.end()}};
}

GroupElt Cocycle::mul(const GroupElt& x, const GroupElt& y) const {
  const unsigned p = ell();
  GroupElt out;
  out.a = add_vec(x.a, y.a, p);
  out.z = add_vec(add_vec(x.z, y.z, p), beta(x.a, y.a), p);
  return out;
}

GroupElt Cocycle::inverse(const GroupElt& x) const {
  const unsigned p = ell();
  GroupElt out;
  out.a = neg_vec(x.a, p);
  out.z = add_vec(neg_vec(x.z, p), beta(x.a, x.a), p);
  return out;
}

GroupElt Cocycle::power(const GroupElt& x, unsigned e) const {
  GroupElt acc = identity();
  for (unsigned i = 0; i < e; ++i) acc = mul(acc, x);
  return acc;
}

GroupElt Cocycle::commutator(const GroupElt& x, const GroupElt& y) const {
  return mul(mul(x, y), mul(inverse(x), inverse(y)));
}

bool Cocycle::preimage_abelian(const Subspace& sigma) const {
  if (sigma.ambient() != n() || sigma.p() != ell())
    throw InputError("preimage_abelian: ambient mismatch");
  for (int i = 0; i < sigma.dim(); ++i)
    for (int j = i + 1; j < sigma.dim(); ++j) {
      GroupElt c = commutator(lift(sigma.basis().row(i)),
                              lift(sigma.basis().row(j)));
      if (!(c == identity())) return false;
    }
  return true;
}

bool Cocycle::preimage_abelian_exhaustive(const Subspace& sigma) const {
  if (sigma.ambient() != n() || sigma.p() != ell())
    throw InputError("preimage_abelian_exhaustive: ambient mismatch");
  double size = 1;
  for (int i = 0; i < sigma.dim() + r(); ++i) size *= ell();
  if (size > 4096)
    throw CapError("exhaustive preimage sweep too large");

  // All preimage elements: sigma-vectors crossed with all central parts.
  std::vector<GroupElt> elems;
  for_each_vector(ell(), sigma.dim(), [&](const std::vector<u8>& c) {
    std::vector<u8> a(static_cast<size_t>(n()), 0);
    for (int i = 0; i < sigma.dim(); ++i)
      for (int j = 0; j < n(); ++j)
        a[static_cast<size_t>(j)] = static_cast<u8>(
            (a[static_cast<size_t>(j)] +
             c[static_cast<size_t>(i)] * sigma.basis().at(i, j)) %
            ell());
    for_each_vector(ell(), r(), [&](const std::vector<u8>& z) {
      elems.push_back(GroupElt{a, z});
    });
  });
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (!(mul(x, y) == mul(y, x))) return false;
  return true;
}

bool Cocycle::pairs_commute(const Subspace& I, const Subspace& D) const {
  if (I.ambient() != n() || D.ambient() != n())
    throw InputError("pairs_commute: ambient mismatch");
  for (int i = 0; i < I.dim(); ++i)
    for (int j = 0; j < D.dim(); ++j) {
      GroupElt c =
          commutator(lift(I.basis().row(i)), lift(D.basis().row(j)));
      if (!(c == identity())) return false;
    }
  return true;
}

Cocycle::Centralizer Cocycle::centralizer(const GroupElt& g) const {
  double size = 1;
  for (int i = 0; i < n(); ++i) size *= ell();
  if (size > 1e6) throw CapError("centralizer sweep too large");

  std::vector<std::vector<int>> commuting;
  for_each_vector(ell(), n(), [&](const std::vector<u8>& a) {
    GroupElt x = lift(a);
    if (commutator(x, g) == identity())
      commuting.emplace_back(a.begin(), a.end());
  });
  Subspace ga = Subspace::span(
      MatF::from_rows(ell(), n(), commuting));
  // The commuting set must itself be a subgroup image: |set| = ell^dim.
  double expect = 1;
  for (int i = 0; i < ga.dim(); ++i) expect *= ell();
  if (expect != static_cast<double>(commuting.size()))
    throw std::logic_error("centralizer image is not a subspace");

  Centralizer out{ga, 1, {}};
  for (int i = 0; i < ga.dim() + r(); ++i) out.order *= ell();
  for (int i = 0; i < ga.dim(); ++i)
    out.generators.push_back(lift(ga.basis().row(i)));
  for (int k = 0; k < r(); ++k) {
    std::vector<u8> z(static_cast<size_t>(r()), 0);
    z[static_cast<size_t>(k)] = 1;
    out.generators.push_back(central(z));
  }
  return out;
}

Cocycle isoclinic_variant(const Cocycle& c, std::vector<MatF> sym) {
  return Cocycle(c.form(), std::move(sym));
}

}  // namespace liftfan
