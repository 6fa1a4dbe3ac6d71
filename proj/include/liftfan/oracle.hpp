#pragma once

// Ground-truth route: the extension group built concretely from a cocycle,
// with subgroup questions answered by element-by-element multiplication.
// Nothing here consults wedge images or kernels, so results can be pitted
// against the criterion-based route.
//
// Elements are pairs (a, z) in F_l^n x F_l^r with
//   (a, z) * (a', z') = (a + a', z + z' + beta(a, a'))
// where beta(e_i, e_j) = lambda(e_i ^ e_j) for i < j and 0 otherwise,
// optionally perturbed by a symmetric bilinear s (which never changes the
// commutator map, hence yields an isoclinic group).

#include <cstdint>
#include <vector>

#include "liftfan/extension.hpp"
#include "liftfan/fflinalg.hpp"

namespace liftfan {

struct GroupElt {
  std::vector<u8> a, z;
  friend bool operator==(const GroupElt&, const GroupElt&) = default;
};

class Cocycle {
 public:
  explicit Cocycle(CommutatorForm form);
  // sym: one symmetric n x n matrix per center coordinate.
  Cocycle(CommutatorForm form, std::vector<MatF> sym);

  const CommutatorForm& form() const { return form_; }
  unsigned ell() const { return form_.ell(); }
  int n() const { return form_.n(); }
  int r() const { return form_.r(); }
  bool perturbed() const { return !sym_.empty(); }

  std::vector<u8> beta(std::span<const u8> a, std::span<const u8> b) const;

  GroupElt identity() const;
  GroupElt lift(std::span<const u8> a) const;  // the section (a, 0)
  GroupElt central(std::span<const u8> z) const;
  GroupElt mul(const GroupElt& x, const GroupElt& y) const;
  GroupElt inverse(const GroupElt& x) const;
  GroupElt power(const GroupElt& x, unsigned e) const;
  // x y x^-1 y^-1 via plain products.
  GroupElt commutator(const GroupElt& x, const GroupElt& y) const;

  // Whether the full preimage of sigma is abelian, decided by commutators
  // of the lifted basis (which generate the preimage together with the
  // central Z).
  bool preimage_abelian(const Subspace& sigma) const;
  // Same question swept over every pair of actual preimage elements.
  // Exponentially larger; used to cross-check the basis route.
  bool preimage_abelian_exhaustive(const Subspace& sigma) const;

  // Whether every preimage element of I commutes with every preimage
  // element of D, decided on lifted bases.
  bool pairs_commute(const Subspace& I, const Subspace& D) const;

  struct Centralizer {
    Subspace ga_part;  // image of the centralizer in G^a
    std::uint64_t order;
    std::vector<GroupElt> generators;
  };
  // Computed by scanning all of G^a for elements commuting with g.
  Centralizer centralizer(const GroupElt& g) const;

 private:
  CommutatorForm form_;
  std::vector<MatF> sym_;
};

// The same extension class with a perturbed cocycle.
Cocycle isoclinic_variant(const Cocycle& c, std::vector<MatF> sym);

}  // namespace liftfan
