#pragma once

// The cohomology of the abelian quotient in exponent-l coefficients is the
// exterior algebra on the dual space. This module works with its graded
// pieces: wedge products, restriction to subgroups, the subspace of 2-forms
// vanishing on the fan, the degree-2 quotient bounding the unramified
// classes, quotients by ideals of 2-forms, and the per-pair unramified test.
//
// A degree-d class is stored as a coefficient vector over the lex monomial
// basis {x_{j1} ^ ... ^ x_{jd} : j1 < ... < jd}, matching the subset order
// of combinations(n, d). Degree-2 coordinates therefore coincide with the
// wedge coordinates used elsewhere, and a 2-form evaluates on a wedge
// vector by the plain dot product.

#include <vector>

#include "liftfan/extension.hpp"
#include "liftfan/fflinalg.hpp"

namespace liftfan {

class ExtClass {
 public:
  ExtClass(Modulus l, int n, int degree);  // the zero class
  static ExtClass from_coords(Modulus l, int n, int degree,
                              std::vector<u8> coords);
  // x_{indices[0]} ^ ... ^ x_{indices[d-1]}, indices strictly increasing.
  static ExtClass monomial(Modulus l, int n, const std::vector<int>& indices);

  Modulus modulus() const { return l_; }
  unsigned ell() const { return l_.ell(); }
  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<u8>& coords() const { return coords_; }

  bool is_zero() const;
  ExtClass add(const ExtClass& other) const;
  ExtClass scaled(unsigned c) const;
  // Value on a tuple of degree() row vectors (the minor expansion).
  u8 value(const std::vector<std::vector<u8>>& args) const;

  friend bool operator==(const ExtClass&, const ExtClass&) = default;

 private:
  Modulus l_;
  int n_;
  int degree_;
  std::vector<u8> coords_;
};

// Graded-commutative product; degrees add. Classes above degree n are zero.
ExtClass wedge(const ExtClass& a, const ExtClass& b);

// Pullback along the inclusion of sigma: a class on ambient dim(sigma),
// expressed in the coordinates dual to sigma's canonical basis. Degrees
// above dim(sigma) restrict to the zero class.
ExtClass restrict_class(const ExtClass& a, const Subspace& sigma);

// Interior product with a vector: (contract(a, v))(u2, ..., ud) reads
// a(v, u2, ..., ud). A class lies in the subalgebra on the annihilator of
// a subspace exactly when it contracts to zero with that subspace.
ExtClass contract(const ExtClass& a, std::span<const u8> v);

// Pullback along a surjection gamma (rows x cols = downstairs x upstairs):
// the dual map takes x_i to the i-th row of gamma read as a 1-form.
ExtClass pullback_class(const MatF& gamma, const ExtClass& a);

// 2-forms vanishing on every member of the fan: the annihilator of the
// span of the wedge images of the fan members.
Subspace fan_relations(const std::vector<Subspace>& sigmas, Modulus l, int n);
Subspace fan_relations(const CommutatorForm& f, int cap = kDefaultAmbientCap);

// Row space of the form read as 2-forms: the classes obtained by composing
// a central character with the commutator pairing. Always inside
// fan_relations of the same form.
Subspace form_relations(const CommutatorForm& f);

struct UnramifiedReport {
  Subspace r2_sigma;  // fan_relations
  Subspace r2_min;    // form_relations
  int quotient_dim;   // dim r2_sigma - dim r2_min
  std::vector<ExtClass> quotient_basis;  // deterministic representatives
};

UnramifiedReport unramified_quotient(const CommutatorForm& f,
                                     int cap = kDefaultAmbientCap);

// Whether the restriction of a to D lives on the annihilator of I inside
// the dual of D: coordinates are changed to a basis extending the
// annihilator basis (completed by standard duals at non-pivot slots), and
// every monomial touching the completion must carry coefficient zero.
bool is_unramified_on_pair(const ExtClass& a, const DeltaPair& pair);

// Dimensions of the graded pieces of the exterior algebra modulo the ideal
// generated by the given degree-2 classes, degrees 0..n.
std::vector<int> ideal_quotient_dims(const std::vector<ExtClass>& generators,
                                     Modulus l, int n);

}  // namespace liftfan
