#pragma once

// Exact linear algebra over small prime fields.
//
// Conventions used throughout the library:
//   * vectors of F_p^n are row vectors; a matrix M (rows x cols) acts on a
//     vector v of length cols via apply(M, v)_i = sum_j M[i][j] v[j]
//   * subspaces are stored as reduced row-echelon bases with zero rows
//     dropped, so set equality of subspaces is data equality
//   * wedge coordinates on F^n use the lex basis e_i ^ e_j, i < j:
//     (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1)

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace liftfan {

using u8 = std::uint8_t;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default cap on ambient dimensions that get enumerated exhaustively.
inline constexpr int kDefaultAmbientCap = 6;
inline constexpr unsigned kMaxEll = 13;

bool is_prime(unsigned p);

// The odd prime parameterizing the group theory. Capped to keep every
// exhaustive sweep in this library desk-scale.
class Modulus {
 public:
  explicit Modulus(unsigned ell);
  unsigned ell() const { return ell_; }
  friend bool operator==(Modulus a, Modulus b) { return a.ell_ == b.ell_; }
  friend bool operator!=(Modulus a, Modulus b) { return a.ell_ != b.ell_; }

 private:
  unsigned ell_;
};

// Dense matrix over F_p, p prime (p <= 251 so entries fit a byte).
// Unlike Modulus, p is not restricted to the group-theory range: the
// projective side of the library needs auxiliary fields F_q with q > 13.
class MatF {
 public:
  MatF(unsigned p, int rows, int cols);  // zero matrix
  static MatF identity(unsigned p, int n);
  static MatF from_rows(unsigned p, int cols,
                        const std::vector<std::vector<int>>& rows);

  unsigned p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  u8 at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, int v);
  std::span<const u8> row(int i) const;
  const std::vector<u8>& data() const { return e_; }

  MatF transposed() const;
  MatF mul(const MatF& rhs) const;
  MatF add(const MatF& rhs) const;
  MatF scaled(int c) const;
  std::vector<u8> apply(std::span<const u8> v) const;
  bool is_zero() const;

  static MatF stack(const MatF& top, const MatF& bottom);

  friend bool operator==(const MatF& a, const MatF& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.e_ == b.e_;
  }
  std::strong_ordering operator<=>(const MatF& rhs) const;

 private:
  unsigned p_;
  int rows_, cols_;
  std::vector<u8> e_;
};

// Arithmetic helpers mod p.
unsigned inv_mod(unsigned a, unsigned p);
inline unsigned neg_mod(unsigned a, unsigned p) { return a ? p - a : 0; }

struct RrefResult {
  MatF mat;
  std::vector<int> pivots;  // pivot column per nonzero row, ascending
};

RrefResult rref_with_pivots(const MatF& m);
MatF rref(const MatF& m);
int rank(const MatF& m);
u8 det(const MatF& m);  // square matrices only
MatF inverse(const MatF& m);

// A linear subspace of F_p^n in canonical form: the basis is the RREF of
// any spanning set with zero rows removed. Two Subspace values are equal
// exactly when they are the same subspace.
class Subspace {
 public:
  Subspace(unsigned p, int ambient);  // zero subspace
  static Subspace span(const MatF& rows);
  static Subspace full(unsigned p, int ambient);

  unsigned p() const { return basis_.p(); }
  int ambient() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const MatF& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains_vector(std::span<const u8> v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v with respect to basis(); throws if v is outside.
  std::vector<u8> coords_of(std::span<const u8> v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // Functionals vanishing on this subspace, in dual coordinates.
  Subspace annihilator() const;

  std::string key() const;  // compact bytes for hashing

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }
  std::strong_ordering operator<=>(const Subspace& rhs) const;

 private:
  explicit Subspace(MatF rref_basis, std::vector<int> pivots);
  MatF basis_;
  std::vector<int> pivots_;
  friend void for_each_subspace(unsigned, int, std::optional<int>, int,
                                const std::function<void(const Subspace&)>&);
};

// Null space {v : M v^T = 0} as a subspace of F_p^cols.
Subspace kernel(const MatF& m);

// Image of a subspace under the matrix map v -> apply(m, v).
Subspace image_subspace(const MatF& m, const Subspace& s);

// Visits every subspace (of the given dimension, or all dimensions) of
// F_p^n exactly once. Enumeration is by dimension, then pivot-column set,
// then an odometer over the free entries; the order is deterministic but
// not sorted. Throws CapError when n exceeds the cap.
void for_each_subspace(unsigned p, int n, std::optional<int> dim, int cap,
                       const std::function<void(const Subspace&)>& fn);

// Same subspaces, collected and sorted by (dim, basis entries lex).
std::vector<Subspace> enumerate_subspaces(unsigned p, int n,
                                          std::optional<int> dim = {},
                                          int cap = kDefaultAmbientCap);

std::uint64_t binomial(int n, int k);
std::uint64_t gaussian_binomial(int n, int k, unsigned p);
std::vector<std::vector<int>> combinations(int n, int k);

// Lex index of the wedge basis vector e_i ^ e_j (0-based, i < j).
struct WedgeIndex {
  int n;
  int dim() const { return n * (n - 1) / 2; }
  int index(int i, int j) const;
  std::pair<int, int> pair(int k) const;
};

// k-th compound matrix: entry (S, T) = det of the k x k minor of m with
// rows S and columns T, both k-subsets in lex order. The second compound
// is the action of m on wedge coordinates.
MatF compound_matrix(const MatF& m, int k);

// Span of { u ^ v : u, v in s } in wedge coordinates of the ambient space.
// Has dimension d(d-1)/2 exactly when dim s = d.
Subspace wedge_image(const Subspace& s);

}  // namespace liftfan
