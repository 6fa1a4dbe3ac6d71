#include "liftfan/fflinalg.hpp"

#include <algorithm>
#include <numeric>

namespace liftfan {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Modulus::Modulus(unsigned ell) : ell_(ell) {
  if (ell < 3 || ell > kMaxEll || !is_prime(ell))
    throw InputError("modulus must be an odd prime between 3 and 13, got " +
                     std::to_string(ell));
}

unsigned inv_mod(unsigned a, unsigned p) {
  a %= p;
  if (a == 0) throw InputError("division by zero mod " + std::to_string(p));
  // Fermat; p is tiny.
  unsigned result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

MatF::MatF(unsigned p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
  if (!is_prime(p) || p > 251)
    throw InputError("matrix modulus must be a prime <= 251, got " +
                     std::to_string(p));
  if (rows < 0 || cols < 0) throw InputError("negative matrix shape");
  e_.assign(static_cast<size_t>(rows) * cols, 0);
}

MatF MatF::identity(unsigned p, int n) {
  MatF m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatF MatF::from_rows(unsigned p, int cols,
                     const std::vector<std::vector<int>>& rows) {
  MatF m(p, static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw InputError("row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(cols));
    for (int j = 0; j < cols; ++j) m.set(static_cast<int>(i), j, rows[i][j]);
  }
  return m;
}

void MatF::set(int i, int j, int v) {
  int r = v % static_cast<int>(p_);
  if (r < 0) r += static_cast<int>(p_);
  e_[static_cast<size_t>(i) * cols_ + j] = static_cast<u8>(r);
}

std::span<const u8> MatF::row(int i) const {
  return {e_.data() + static_cast<size_t>(i) * cols_,
          static_cast<size_t>(cols_)};
}

MatF MatF::transposed() const {
  MatF t(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

MatF MatF::mul(const MatF& rhs) const {
  if (p_ != rhs.p_ || cols_ != rhs.rows_)
    throw InputError("matrix product shape/modulus mismatch");
  MatF out(p_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rhs.cols_; ++j) {
      unsigned acc = 0;
      for (int k = 0; k < cols_; ++k) acc += unsigned(at(i, k)) * rhs.at(k, j);
      out.set(i, j, static_cast<int>(acc % p_));
    }
  return out;
}

MatF MatF::add(const MatF& rhs) const {
  if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InputError("matrix sum shape/modulus mismatch");
  MatF out(p_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) + rhs.at(i, j));
  return out;
}

MatF MatF::scaled(int c) const {
  MatF out(p_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) * c);
  return out;
}

std::vector<u8> MatF::apply(std::span<const u8> v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw InputError("apply: vector length " + std::to_string(v.size()) +
                     " != cols " + std::to_string(cols_));
  std::vector<u8> out(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    unsigned acc = 0;
    for (int j = 0; j < cols_; ++j) acc += unsigned(at(i, j)) * v[j];
    out[static_cast<size_t>(i)] = static_cast<u8>(acc % p_);
  }
  return out;
}

bool MatF::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](u8 x) { return x == 0; });
}

MatF MatF::stack(const MatF& top, const MatF& bottom) {
  if (top.p_ != bottom.p_ || top.cols_ != bottom.cols_)
    throw InputError("stack: shape/modulus mismatch");
  MatF out(top.p_, top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.e_.begin(), top.e_.end(), out.e_.begin());
  std::copy(bottom.e_.begin(), bottom.e_.end(),
            out.e_.begin() + static_cast<long>(top.e_.size()));
  return out;
}

std::strong_ordering MatF::operator<=>(const MatF& rhs) const {
  if (auto c = p_ <=> rhs.p_; c != 0) return c;
  if (auto c = rows_ <=> rhs.rows_; c != 0) return c;
  if (auto c = cols_ <=> rhs.cols_; c != 0) return c;
  return std::lexicographical_compare_three_way(e_.begin(), e_.end(),
                                                rhs.e_.begin(), rhs.e_.end());
}

RrefResult rref_with_pivots(const MatF& m) {
  MatF r = m;
  const unsigned p = m.p();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < r.rows(); ++i)
      if (r.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < r.cols(); ++j) {
        int t = r.at(row, j);
        r.set(row, j, r.at(pr, j));
        r.set(pr, j, t);
      }
    unsigned inv = inv_mod(r.at(row, col), p);
    for (int j = 0; j < r.cols(); ++j)
      r.set(row, j, static_cast<int>(r.at(row, j) * inv % p));
    for (int i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      unsigned f = r.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < r.cols(); ++j)
        r.set(i, j, static_cast<int>(r.at(i, j) + (p - f) * r.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

MatF rref(const MatF& m) { return rref_with_pivots(m).mat; }

int rank(const MatF& m) {
  return static_cast<int>(rref_with_pivots(m).pivots.size());
}

u8 det(const MatF& m) {
  if (m.rows() != m.cols()) throw InputError("det: matrix not square");
  const unsigned p = m.p();
  MatF a = m;
  unsigned d = 1;
  for (int col = 0; col < a.cols(); ++col) {
    int pr = -1;
    for (int i = col; i < a.rows(); ++i)
      if (a.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) return 0;
    if (pr != col) {
      for (int j = 0; j < a.cols(); ++j) {
        int t = a.at(col, j);
        a.set(col, j, a.at(pr, j));
        a.set(pr, j, t);
      }
      d = d * (p - 1) % p;
    }
    d = d * a.at(col, col) % p;
    unsigned inv = inv_mod(a.at(col, col), p);
    for (int i = col + 1; i < a.rows(); ++i) {
      unsigned f = unsigned(a.at(i, col)) * inv % p;
      if (f == 0) continue;
      for (int j = col; j < a.cols(); ++j)
        a.set(i, j, static_cast<int>(a.at(i, j) + (p - f) * a.at(col, j)));
    }
  }
  return static_cast<u8>(d);
}

MatF inverse(const MatF& m) {
  if (m.rows() != m.cols()) throw InputError("inverse: matrix not square");
  // Row-reduce [m | I]; the right block becomes m^-1.
  MatF wide(m.p(), m.rows(), 2 * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      wide.set(i, j, m.at(i, j));
      wide.set(i, m.cols() + j, i == j ? 1 : 0);
    }
  auto rr = rref_with_pivots(wide);
  if (static_cast<int>(rr.pivots.size()) != m.rows() ||
      (m.rows() > 0 && rr.pivots.back() >= m.cols()))
    throw InputError("inverse: matrix is singular");
  MatF inv(m.p(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) inv.set(i, j, rr.mat.at(i, m.cols() + j));
  return inv;
}

Subspace::Subspace(unsigned p, int ambient)
    : basis_(p, 0, ambient), pivots_() {}

Subspace::Subspace(MatF rref_basis, std::vector<int> pivots)
    : basis_(std::move(rref_basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(const MatF& rows) {
  auto rr = rref_with_pivots(rows);
  int d = static_cast<int>(rr.pivots.size());
  MatF b(rows.p(), d, rows.cols());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < rows.cols(); ++j) b.set(i, j, rr.mat.at(i, j));
  return Subspace(std::move(b), std::move(rr.pivots));
}

Subspace Subspace::full(unsigned p, int ambient) {
  std::vector<int> piv(static_cast<size_t>(ambient));
  std::iota(piv.begin(), piv.end(), 0);
  return Subspace(MatF::identity(p, ambient), std::move(piv));
}

bool Subspace::contains_vector(std::span<const u8> v) const {
  if (static_cast<int>(v.size()) != ambient())
    throw InputError("contains_vector: ambient mismatch");
  std::vector<u8> w(v.begin(), v.end());
  const unsigned pm = p();
  for (int i = 0; i < dim(); ++i) {
    unsigned f = w[static_cast<size_t>(pivots_[i])];
    if (f == 0) continue;
    for (int j = 0; j < ambient(); ++j)
      w[static_cast<size_t>(j)] =
          static_cast<u8>((w[static_cast<size_t>(j)] + (pm - f) * basis_.at(i, j)) % pm);
  }
  return std::all_of(w.begin(), w.end(), [](u8 x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (p() != other.p() || ambient() != other.ambient())
    throw InputError("contains: ambient/modulus mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains_vector(other.basis_.row(i))) return false;
  return true;
}

std::vector<u8> Subspace::coords_of(std::span<const u8> v) const {
  if (!contains_vector(v)) throw InputError("coords_of: vector not in subspace");
  std::vector<u8> c(static_cast<size_t>(dim()));
  for (int i = 0; i < dim(); ++i)
    c[static_cast<size_t>(i)] = v[static_cast<size_t>(pivots_[i])];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  return span(MatF::stack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

std::string Subspace::key() const {
  std::string k;
  k.reserve(basis_.data().size() + 2);
  k.push_back(static_cast<char>(dim()));
  k.push_back(static_cast<char>(ambient()));
  for (u8 b : basis_.data()) k.push_back(static_cast<char>(b));
  return k;
}

std::strong_ordering Subspace::operator<=>(const Subspace& rhs) const {
  if (auto c = p() <=> rhs.p(); c != 0) return c;
  if (auto c = ambient() <=> rhs.ambient(); c != 0) return c;
  if (auto c = dim() <=> rhs.dim(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      basis_.data().begin(), basis_.data().end(), rhs.basis_.data().begin(),
      rhs.basis_.data().end());
}

Subspace kernel(const MatF& m) {
  auto rr = rref_with_pivots(m);
  std::vector<char> is_pivot(static_cast<size_t>(m.cols()), 0);
  for (int c : rr.pivots) is_pivot[static_cast<size_t>(c)] = 1;
  std::vector<std::vector<int>> rows;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    std::vector<int> v(static_cast<size_t>(m.cols()), 0);
    v[static_cast<size_t>(f)] = 1;
    for (size_t i = 0; i < rr.pivots.size(); ++i)
      v[static_cast<size_t>(rr.pivots[i])] =
          static_cast<int>(neg_mod(rr.mat.at(static_cast<int>(i), f), m.p()));
    rows.push_back(std::move(v));
  }
  return Subspace::span(MatF::from_rows(m.p(), m.cols(), rows));
}

Subspace image_subspace(const MatF& m, const Subspace& s) {
  if (m.cols() != s.ambient() || m.p() != s.p())
    throw InputError("image_subspace: shape/modulus mismatch");
  MatF rows(m.p(), s.dim(), m.rows());
  for (int i = 0; i < s.dim(); ++i) {
    auto img = m.apply(s.basis().row(i));
    for (int j = 0; j < m.rows(); ++j) rows.set(i, j, img[static_cast<size_t>(j)]);
  }
  return Subspace::span(rows);
}

void for_each_subspace(unsigned p, int n, std::optional<int> dim, int cap,
                       const std::function<void(const Subspace&)>& fn) {
  if (!is_prime(p)) throw InputError("subspace enumeration: p must be prime");
  if (n < 0) throw InputError("subspace enumeration: negative ambient");
  if (n > cap)
    throw CapError("subspace enumeration cap exceeded: ambient " +
                   std::to_string(n) + " > cap " + std::to_string(cap));
  int dlo = dim ? *dim : 0;
  int dhi = dim ? *dim : n;
  if (dlo < 0 || dhi > n) {
    if (dim) return;  // no subspaces of that dimension
  }
  for (int d = std::max(dlo, 0); d <= std::min(dhi, n); ++d) {
    if (d == 0) {
      fn(Subspace(p, n));
      continue;
    }
    for (const auto& piv : combinations(n, d)) {
      // Free entries: (i, j) with j > piv[i], j not a pivot column.
      std::vector<char> is_pivot(static_cast<size_t>(n), 0);
      for (int c : piv) is_pivot[static_cast<size_t>(c)] = 1;
      std::vector<std::pair<int, int>> free_pos;
      for (int i = 0; i < d; ++i)
        for (int j = piv[static_cast<size_t>(i)] + 1; j < n; ++j)
          if (!is_pivot[static_cast<size_t>(j)]) free_pos.emplace_back(i, j);
      std::vector<u8> vals(free_pos.size(), 0);
      for (;;) {
        MatF b(p, d, n);
        for (int i = 0; i < d; ++i) b.set(i, piv[static_cast<size_t>(i)], 1);
        for (size_t k = 0; k < free_pos.size(); ++k)
          b.set(free_pos[k].first, free_pos[k].second, vals[k]);
        std::vector<int> pv(piv.begin(), piv.end());
        fn(Subspace(std::move(b), std::move(pv)));
        // odometer, rightmost fastest
        size_t k = free_pos.size();
        while (k > 0) {
          --k;
          if (++vals[k] < p) break;
          vals[k] = 0;
          if (k == 0) goto next_pivot_set;
        }
        if (free_pos.empty()) break;
      }
    next_pivot_set:;
    }
  }
}

std::vector<Subspace> enumerate_subspaces(unsigned p, int n,
                                          std::optional<int> dim, int cap) {
  std::vector<Subspace> out;
  for_each_subspace(p, n, dim, cap,
                    [&](const Subspace& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
  return r;
}

std::uint64_t gaussian_binomial(int n, int k, unsigned p) {
  if (k < 0 || k > n) return 0;
  // Product formula; every prefix product is itself a Gaussian binomial,
  // so dividing after each step keeps the value integral.
  unsigned __int128 num = 1;
  auto powp = [&](int e) {
    unsigned __int128 r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
  };
  for (int i = 0; i < k; ++i) {
    num *= powp(n - i) - 1;
    num /= powp(i + 1) - 1;
    if (num > static_cast<unsigned __int128>(UINT64_MAX))
      throw CapError("gaussian binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(num);
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  for (;;) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == i + n - k) --i;
    if (i < 0) break;
    ++c[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

int WedgeIndex::index(int i, int j) const {
  if (i < 0 || j <= i || j >= n) throw InputError("wedge index out of range");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> WedgeIndex::pair(int k) const {
  for (int i = 0; i < n - 1; ++i) {
    int block = n - 1 - i;
    if (k < block) return {i, i + 1 + k};
    k -= block;
  }
  throw InputError("wedge index out of range");
}

MatF compound_matrix(const MatF& m, int k) {
  auto row_sets = combinations(m.rows(), k);
  auto col_sets = combinations(m.cols(), k);
  MatF out(m.p(), static_cast<int>(row_sets.size()),
           static_cast<int>(col_sets.size()));
  for (size_t a = 0; a < row_sets.size(); ++a)
    for (size_t b = 0; b < col_sets.size(); ++b) {
      MatF minor(m.p(), k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          minor.set(i, j,
                    m.at(row_sets[a][static_cast<size_t>(i)],
                         col_sets[b][static_cast<size_t>(j)]));
      out.set(static_cast<int>(a), static_cast<int>(b), det(minor));
    }
  return out;
}

Subspace wedge_image(const Subspace& s) {
  MatF c2 = compound_matrix(s.basis(), 2);
  Subspace w = Subspace::span(c2);
  if (w.dim() != s.dim() * (s.dim() - 1) / 2)
    throw std::logic_error("wedge image dimension mismatch");
  return w;
}

}  // namespace liftfan
