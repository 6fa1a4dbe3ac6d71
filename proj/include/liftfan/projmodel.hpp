#pragma once

// A concrete projective model of the extension group's action: for each
// central character chi_j, the induced representation on the coset space
// of the center is an ell^n-dimensional monomial representation over a
// prime field F_q with q = 1 (mod ell), where every eigenvalue in sight is
// an ell-th root of unity. The abelian quotient acts on the product of the
// projectivized factors, and the five structural claims about that action
// (faithfulness, fixed loci detecting liftability, disjoint components,
// stabilizers acting trivially with free complements, freeness off the
// fixed loci) are verified exhaustively at desk scale.
//
// Fixed loci are held as eigenspace data (subspaces of F_q^dim per factor),
// never as point sets over F_q.

#include <cstdint>
#include <vector>

#include "liftfan/extension.hpp"
#include "liftfan/fflinalg.hpp"
#include "liftfan/oracle.hpp"

namespace liftfan {

inline constexpr int kProjDimCap = 81;  // largest ell^n factor built

// Smallest prime q with q = 1 (mod ell).
unsigned default_q(unsigned ell);

// Smallest x >= 2 in F_q with x^ell = 1; exists whenever q = 1 (mod ell).
u8 primitive_ell_root(unsigned ell, unsigned q);

// A matrix with one nonzero entry per row and column: basis vector i maps
// to scale[i] times basis vector perm[i].
struct MonomialMat {
  std::vector<int> perm;
  std::vector<u8> scale;

  int dim() const { return static_cast<int>(perm.size()); }
  static MonomialMat identity(int dim);
  MonomialMat mul(const MonomialMat& rhs, unsigned q) const;  // this ∘ rhs
  MonomialMat pow(unsigned e, unsigned q) const;
  MatF dense(unsigned q) const;
  bool is_scalar() const;  // trivial permutation, one common scale

  friend bool operator==(const MonomialMat&, const MonomialMat&) = default;
};

// One induced factor: the character with index j on the center, realized
// on the ell^n coset basis.
class MonomialRep {
 public:
  MonomialRep(Cocycle c, unsigned q, int character_index);

  unsigned q() const { return q_; }
  unsigned ell() const { return cocycle_.ell(); }
  int n() const { return cocycle_.n(); }
  int dim() const { return dim_; }
  int character_index() const { return j_; }
  u8 zeta() const { return zeta_; }  // the chosen primitive ell-th root
  const Cocycle& cocycle() const { return cocycle_; }

  // Generator images: the lifts of e_1..e_n, then the center basis.
  const std::vector<MonomialMat>& generator_matrices() const { return gens_; }
  MonomialMat matrix_of(const GroupElt& g) const;

  // Coset basis indexing: vectors of F_ell^n in odometer order.
  std::vector<u8> coset_vector(int index) const;
  int coset_index(std::span<const u8> v) const;

 private:
  Cocycle cocycle_;
  unsigned q_;
  int j_;
  int dim_;
  u8 zeta_;
  std::vector<MonomialMat> gens_;
};

// Builds the induced factor for character j in [0, r) and verifies the
// construction against the group relations (exponent ell, commutators
// matching the central pairing values, central scalars).
MonomialRep induced_rep(const CommutatorForm& form, int j, unsigned q);
std::vector<MonomialRep> induced_factors(const CommutatorForm& form,
                                         unsigned q);

// One irreducible component of a fixed locus: per factor, a joint
// eigenspace together with the eigenvalue exponents (powers of zeta) for
// each basis vector of sigma.
struct FixedComponent {
  std::vector<Subspace> factors;                 // one per representation
  std::vector<std::vector<u8>> exponents;        // [factor][sigma basis row]
};

struct FixedLocus {
  std::vector<FixedComponent> components;  // empty iff sigma is not liftable
  bool empty() const { return components.empty(); }
};

// Joint eigenspace refinement across the lifted basis of sigma, assembled
// factor by factor. Computed honestly: no liftability shortcut, so a
// subgroup with noncommuting lifts comes back empty on its own.
FixedLocus fixed_locus(const Subspace& sigma,
                       const std::vector<MonomialRep>& reps);

// Image of one component under the projective action of a (via its lift).
FixedComponent map_component(const FixedComponent& c, std::span<const u8> a,
                             const std::vector<MonomialRep>& reps);

// The subgroup of the extension acting trivially on the components of
// sigma's fixed locus: the full preimage of d_max(sigma).
struct StabilizerSubgroup {
  Subspace ga_part;
  std::uint64_t order;  // ell^(dim + r): the center always sits inside
};

StabilizerSubgroup h_sigma(const Subspace& sigma, const CommutatorForm& f);

// The five structural claims, each verified by exhaustive sweep.
struct ActionReport {
  bool faithful;                  // no nonzero a acts by scalars everywhere
  bool fixed_iff_liftable;        // nonempty fixed locus detects liftability
  bool components_disjoint;       // distinct components meet in nothing
  bool stabilizer_splits_action;  // h_sigma fixes components, rest moves all
  bool free_outside_fixed_loci;   // fixed points of a lie in its own locus
  int subspaces_checked;
  int components_checked;

  bool all_hold() const {
    return faithful && fixed_iff_liftable && components_disjoint &&
           stabilizer_splits_action && free_outside_fixed_loci;
  }
};

// q = 0 picks default_q(ell).
ActionReport check_projective_action(const CommutatorForm& f, unsigned q = 0);

}  // namespace liftfan
