#pragma once

// Central extensions of elementary abelian groups, presented up to
// isoclinism by a surjective alternating form lambda from the second
// wedge power of G^a onto the center Z = F_l^r.
//
// A subgroup sigma of G^a is liftable when its full preimage in the
// extension group is abelian; the criterion implemented here is that the
// wedge image of sigma lies in ker(lambda). The fan is the set of
// noncyclic liftable subgroups.

#include <functional>
#include <optional>
#include <vector>

#include "liftfan/fflinalg.hpp"

namespace liftfan {

class CommutatorForm {
 public:
  // lambda: r x n(n-1)/2 over F_l, rows independent (r may be 0).
  CommutatorForm(Modulus l, int n, MatF lambda);
  static CommutatorForm from_kernel(Modulus l, int n, const Subspace& ker);

  Modulus modulus() const { return l_; }
  unsigned ell() const { return l_.ell(); }
  int n() const { return n_; }
  int r() const { return lambda_.rows(); }
  int wedge_dim() const { return lambda_.cols(); }
  const MatF& lambda() const { return lambda_; }
  const Subspace& kernel() const { return kernel_; }

  // The alternating n x n matrix of row k: entry (i, j) is the value of
  // row k on e_i ^ e_j.
  MatF bilinear_matrix(int k) const;
  // lambda(a ^ b) as a vector in F_l^r.
  std::vector<u8> pair_value(std::span<const u8> a, std::span<const u8> b) const;

  friend bool operator==(const CommutatorForm& a, const CommutatorForm& b) {
    return a.ell() == b.ell() && a.n_ == b.n_ && a.lambda_ == b.lambda_;
  }

 private:
  Modulus l_;
  int n_;
  MatF lambda_;
  Subspace kernel_;
};

bool is_liftable(const Subspace& sigma, const CommutatorForm& f);

struct Fan {
  std::vector<Subspace> sigmas;  // sorted by (dim, basis lex)
  bool complete;                 // true: all liftable; false: noncyclic only
};

Fan fan(const CommutatorForm& f, bool complete = false,
        int cap = kDefaultAmbientCap);

// Largest subgroup pairing to zero with everything: common kernel of the
// bilinear matrices.
Subspace radical(const CommutatorForm& f);

struct RadicalReduction {
  CommutatorForm reduced;  // form on G^a / radical, same rank
  MatF witness;            // maps old coordinates to (quotient + radical)
  Subspace rad;
};

RadicalReduction reduce_radical(const CommutatorForm& f);

// Largest D with lambda(I ^ D) = 0; I must be liftable.
Subspace d_max(const Subspace& I, const CommutatorForm& f);

struct DeltaPair {
  Subspace I, D;
  friend bool operator==(const DeltaPair& a, const DeltaPair& b) {
    return a.I == b.I && a.D == b.D;
  }
  std::strong_ordering operator<=>(const DeltaPair& rhs) const {
    if (auto c = I <=> rhs.I; c != 0) return c;
    return D <=> rhs.D;
  }
};

// I contained in D, D noncyclic, lambda(I ^ D) = 0.
bool is_delta_pair(const Subspace& I, const Subspace& D,
                   const CommutatorForm& f);

// All maximal pairs (I, d_max(I)) with I liftable and d_max(I) noncyclic.
// I runs over nontrivial subgroups by default; the flag adds I = 0.
std::vector<DeltaPair> delta_pairs(const CommutatorForm& f,
                                   bool include_trivial_I = false,
                                   int cap = kDefaultAmbientCap);

enum class IsoMode { Fixed, GlOrbit };

struct IsoResult {
  bool equivalent;
  std::optional<MatF> witness;  // orbit mode: g with wedge(g)(ker a) = ker b
};

// Fixed mode: kernels equal as subspaces of the wedge square.
// Orbit mode: some change of basis of G^a carries one kernel to the other;
// the search is profile-filtered, then exhaustive over GL(n, F_l) (n <= 4).
IsoResult isoclinic_eq(const CommutatorForm& a, const CommutatorForm& b,
                       IsoMode mode);

// Pullback along a surjection gamma: (n x n_up matrix, n_up >= n). The
// result is re-normalized to full row rank, so its center is the image.
CommutatorForm pullback_form(const MatF& gamma, const CommutatorForm& f);

bool delta_pair_surjects(const MatF& gamma, const DeltaPair& up,
                         const DeltaPair& down);

struct FanDetermination {
  std::vector<Subspace> kernels;  // kernels whose fan is exactly the input
  bool single_orbit;              // nonempty and a single GL-orbit
};

// Inverse problem: which kernels produce exactly the given fan (n <= 4).
FanDetermination fan_determines(const std::vector<Subspace>& sigmas,
                                Modulus l, int n);

// Generators of GL(n, F_l): the transvections and one diagonal matrix
// with a primitive scalar.
std::vector<MatF> gl_generators(Modulus l, int n);

// Full GL-orbit of a subspace of wedge coordinates under changes of basis
// of G^a, as a sorted vector (front() is the lex-minimal representative).
std::vector<Subspace> wedge_orbit(const Subspace& k, Modulus l, int n);

Subspace canonical_orbit_rep(const Subspace& k, Modulus l, int n);

// Visits GL(n, F_l) row by row in lex order; stop by returning true.
void for_each_gl(Modulus l, int n, const std::function<bool(const MatF&)>& fn);

// Cheap isoclinism invariants used to filter orbit searches.
struct FormProfile {
  int radical_dim;
  std::vector<int> fan_by_dim;  // counts of liftable subspaces, dim 2..n
  int delta_pair_count;
  friend bool operator==(const FormProfile&, const FormProfile&) = default;
};

FormProfile form_profile(const CommutatorForm& f);

}  // namespace liftfan
