#include "liftfan/cohomology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace liftfan {

namespace {

// Lex rank of a strictly increasing index set among combinations(n, k).
int subset_rank(const std::vector<std::vector<int>>& combos,
                const std::vector<int>& s) {
  auto it = std::lower_bound(combos.begin(), combos.end(), s);
  if (it == combos.end() || *it != s)
    throw std::logic_error("subset missing from the monomial basis");
  return static_cast<int>(it - combos.begin());
}

void check_same_space(const ExtClass& a, const ExtClass& b,
                      const char* what) {
  if (a.ell() != b.ell() || a.n() != b.n())
    throw InputError(std::string(what) + ": classes live on different groups");
}

}  // namespace

ExtClass::ExtClass(Modulus l, int n, int degree)
    : l_(l), n_(n), degree_(degree) {
  if (n < 0 || n > kDefaultAmbientCap)
    throw CapError("class ambient rank must be between 0 and 6, got " +
                   std::to_string(n));
  if (degree < 0) throw InputError("class degree must be nonnegative");
  coords_.assign(static_cast<size_t>(binomial(n, degree)), 0);
}

ExtClass ExtClass::from_coords(Modulus l, int n, int degree,
                               std::vector<u8> coords) {
  ExtClass out(l, n, degree);
  if (coords.size() != out.coords_.size())
    throw InputError("class has " + std::to_string(coords.size()) +
                     " coefficients, expected " +
                     std::to_string(out.coords_.size()));
  for (u8 c : coords)
    if (c >= l.ell())
      throw InputError("class coefficients must live mod " +
                       std::to_string(l.ell()));
  out.coords_ = std::move(coords);
  return out;
}

ExtClass ExtClass::monomial(Modulus l, int n, const std::vector<int>& idx) {
  ExtClass out(l, n, static_cast<int>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= n)
      throw InputError("monomial index out of range");
    if (i > 0 && idx[i] <= idx[i - 1])
      throw InputError("monomial indices must be strictly increasing");
  }
  auto combos = combinations(n, static_cast<int>(idx.size()));
  out.coords_[static_cast<size_t>(subset_rank(combos, idx))] = 1;
  return out;
}

bool ExtClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](u8 c) { return c == 0; });
}

ExtClass ExtClass::add(const ExtClass& other) const {
  check_same_space(*this, other, "add");
  if (degree_ != other.degree_)
    throw InputError("add: classes have different degrees");
  ExtClass out(l_, n_, degree_);
  for (size_t i = 0; i < coords_.size(); ++i)
    out.coords_[i] = static_cast<u8>((coords_[i] + other.coords_[i]) % ell());
  return out;
}

ExtClass ExtClass::scaled(unsigned c) const {
  ExtClass out(l_, n_, degree_);
  for (size_t i = 0; i < coords_.size(); ++i)
    out.coords_[i] = static_cast<u8>(coords_[i] * (c % ell()) % ell());
  return out;
}

u8 ExtClass::value(const std::vector<std::vector<u8>>& args) const {
  if (static_cast<int>(args.size()) != degree_)
    throw InputError("value: expected one vector per degree");
  MatF stacked(ell(), degree_, n_);
  for (int i = 0; i < degree_; ++i) {
    if (static_cast<int>(args[static_cast<size_t>(i)].size()) != n_)
      throw InputError("value: vector length mismatch");
    for (int j = 0; j < n_; ++j)
      stacked.set(i, j, args[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  MatF comp = compound_matrix(stacked, degree_);
  unsigned acc = 0;
  for (size_t s = 0; s < coords_.size(); ++s)
    acc += unsigned(coords_[s]) * comp.at(0, static_cast<int>(s)) % ell();
  return static_cast<u8>(acc % ell());
}

ExtClass wedge(const ExtClass& a, const ExtClass& b) {
  check_same_space(a, b, "wedge");
  const unsigned p = a.ell();
  const int n = a.n(), da = a.degree(), db = b.degree();
  ExtClass out(a.modulus(), n, da + db);
  if (da + db > n) return out;  // everything above the top degree dies

  auto sa = combinations(n, da);
  auto sb = combinations(n, db);
  auto so = combinations(n, da + db);
  std::vector<u8> coords(out.coords().size(), 0);
  for (size_t i = 0; i < sa.size(); ++i) {
    if (a.coords()[i] == 0) continue;
    for (size_t j = 0; j < sb.size(); ++j) {
      if (b.coords()[j] == 0) continue;
      // Merge the index sets; a shared index kills the term.
      std::vector<int> merged;
      merged.reserve(static_cast<size_t>(da + db));
      std::merge(sa[i].begin(), sa[i].end(), sb[j].begin(), sb[j].end(),
                 std::back_inserter(merged));
      bool repeat = false;
      for (size_t t = 1; t < merged.size(); ++t)
        if (merged[t] == merged[t - 1]) repeat = true;
      if (repeat) continue;
      // Sign: parity of transpositions moving b's indices past a's.
      int inversions = 0;
      for (int x : sa[i])
        for (int y : sb[j])
          if (x > y) ++inversions;
      unsigned sign = (inversions % 2 == 0) ? 1 : p - 1;
      size_t k = static_cast<size_t>(subset_rank(so, merged));
      coords[k] = static_cast<u8>(
          (coords[k] + unsigned(a.coords()[i]) * b.coords()[j] % p * sign) %
          p);
    }
  }
  return ExtClass::from_coords(a.modulus(), n, da + db, std::move(coords));
}

ExtClass restrict_class(const ExtClass& a, const Subspace& sigma) {
  if (sigma.p() != a.ell() || sigma.ambient() != a.n())
    throw InputError("restrict: subgroup lives in the wrong ambient group");
  const int d = a.degree(), m = sigma.dim();
  if (d > m) return ExtClass(a.modulus(), m, d);
  MatF comp = compound_matrix(sigma.basis(), d);
  return ExtClass::from_coords(a.modulus(), m, d, comp.apply(a.coords()));
}

ExtClass contract(const ExtClass& a, std::span<const u8> v) {
  if (static_cast<int>(v.size()) != a.n())
    throw InputError("contract: vector length mismatch");
  if (a.degree() == 0)
    throw InputError("contract: class must have positive degree");
  const unsigned p = a.ell();
  const int n = a.n(), d = a.degree();
  auto sd = combinations(n, d);
  auto sdm = combinations(n, d - 1);
  std::vector<u8> coords(static_cast<size_t>(binomial(n, d - 1)), 0);
  for (size_t s = 0; s < sd.size(); ++s) {
    if (a.coords()[s] == 0) continue;
    for (int t = 0; t < d; ++t) {
      std::vector<int> rest;
      rest.reserve(static_cast<size_t>(d - 1));
      for (int u = 0; u < d; ++u)
        if (u != t) rest.push_back(sd[s][static_cast<size_t>(u)]);
      unsigned sign = (t % 2 == 0) ? 1 : p - 1;
      size_t k = static_cast<size_t>(subset_rank(sdm, rest));
      unsigned vi = v[static_cast<size_t>(sd[s][static_cast<size_t>(t)])];
      coords[k] = static_cast<u8>(
          (coords[k] + unsigned(a.coords()[s]) * vi % p * sign) % p);
    }
  }
  return ExtClass::from_coords(a.modulus(), n, d - 1, std::move(coords));
}

ExtClass pullback_class(const MatF& gamma, const ExtClass& a) {
  if (gamma.p() != a.ell() || gamma.rows() != a.n())
    throw InputError("pullback_class: gamma must map onto the class's group");
  if (rank(gamma) != gamma.rows())
    throw InputError("pullback_class: gamma is not surjective");
  const int n_up = gamma.cols(), d = a.degree();
  if (n_up > kDefaultAmbientCap)
    throw CapError("pullback source rank exceeds 6");
  if (a.coords().empty()) return ExtClass(a.modulus(), n_up, d);
  MatF comp = compound_matrix(gamma, d);
  return ExtClass::from_coords(a.modulus(), n_up, d,
                               comp.transposed().apply(a.coords()));
}

Subspace fan_relations(const std::vector<Subspace>& sigmas, Modulus l,
                       int n) {
  WedgeIndex w{n};
  Subspace span(l.ell(), w.dim());
  for (const auto& s : sigmas) {
    if (s.p() != l.ell() || s.ambient() != n)
      throw InputError("fan_relations: subgroup in the wrong ambient group");
    span = span.sum(wedge_image(s));
  }
  return span.annihilator();
}

Subspace fan_relations(const CommutatorForm& f, int cap) {
  return fan_relations(fan(f, false, cap).sigmas, f.modulus(), f.n());
}

Subspace form_relations(const CommutatorForm& f) {
  return Subspace::span(f.lambda());
}

UnramifiedReport unramified_quotient(const CommutatorForm& f, int cap) {
  UnramifiedReport rep{fan_relations(f, cap), form_relations(f), 0, {}};
  if (!rep.r2_sigma.contains(rep.r2_min))
    throw std::logic_error("form relations escape the fan relations");
  rep.quotient_dim = rep.r2_sigma.dim() - rep.r2_min.dim();
  // Representatives: rows of r2_sigma that are new modulo r2_min, taken in
  // basis order so the choice is reproducible.
  Subspace seen = rep.r2_min;
  for (int i = 0; i < rep.r2_sigma.dim(); ++i) {
    auto row = rep.r2_sigma.basis().row(i);
    if (seen.contains_vector(row)) continue;
    MatF one(f.ell(), 1, rep.r2_sigma.ambient());
    for (int j = 0; j < one.cols(); ++j)
      one.set(0, j, row[static_cast<size_t>(j)]);
    seen = seen.sum(Subspace::span(one));
    rep.quotient_basis.push_back(ExtClass::from_coords(
        f.modulus(), f.n(), 2, std::vector<u8>(row.begin(), row.end())));
  }
  if (static_cast<int>(rep.quotient_basis.size()) != rep.quotient_dim)
    throw std::logic_error("quotient representatives miscounted");
  return rep;
}

bool is_unramified_on_pair(const ExtClass& a, const DeltaPair& pair) {
  if (pair.I.ambient() != a.n() || pair.D.ambient() != a.n() ||
      pair.I.p() != a.ell() || pair.D.p() != a.ell())
    throw InputError("pair lives in the wrong ambient group");
  if (!pair.D.contains(pair.I))
    throw InputError("pair inner subgroup must sit inside the outer one");

  ExtClass rest = restrict_class(a, pair.D);
  if (rest.is_zero() || rest.degree() == 0) return true;
  const int m = pair.D.dim(), d = rest.degree();
  const unsigned p = a.ell();

  // I in the coordinates of D, then the functionals on D killing it.
  MatF icoords(p, pair.I.dim(), m);
  for (int i = 0; i < pair.I.dim(); ++i) {
    auto c = pair.D.coords_of(pair.I.basis().row(i));
    for (int j = 0; j < m; ++j) icoords.set(i, j, c[static_cast<size_t>(j)]);
  }
  Subspace ann = Subspace::span(icoords).annihilator();
  const int k = ann.dim();
  if (k == m) return true;  // I is trivial inside D

  // Dual basis extending ann: standard duals fill the non-pivot slots.
  MatF pmat(p, m, m);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) pmat.set(i, j, ann.basis().at(i, j));
  int next = k;
  for (int j = 0; j < m; ++j) {
    if (std::find(ann.pivots().begin(), ann.pivots().end(), j) !=
        ann.pivots().end())
      continue;
    pmat.set(next, j, 1);
    ++next;
  }
  MatF change = compound_matrix(inverse(pmat).transposed(), d);
  std::vector<u8> newc = change.apply(rest.coords());
  auto combos = combinations(m, d);
  for (size_t s = 0; s < combos.size(); ++s) {
    if (newc[s] == 0) continue;
    // Any monomial reaching past the annihilator block is an obstruction.
    if (combos[s].back() >= k) return false;
  }
  return true;
}

std::vector<int> ideal_quotient_dims(const std::vector<ExtClass>& generators,
                                     Modulus l, int n) {
  if (n < 0 || n > kDefaultAmbientCap)
    throw CapError("quotient ambient rank must be between 0 and 6, got " +
                   std::to_string(n));
  for (const auto& g : generators)
    if (g.ell() != l.ell() || g.n() != n || g.degree() != 2)
      throw InputError("ideal generators must be degree-2 classes on the "
                       "same group");
  std::vector<int> dims;
  for (int d = 0; d <= n; ++d) {
    const int full = static_cast<int>(binomial(n, d));
    if (d < 2 || generators.empty()) {
      dims.push_back(full);
      continue;
    }
    std::vector<std::vector<int>> rows;
    for (const auto& g : generators)
      for (const auto& mono : combinations(n, d - 2)) {
        ExtClass prod = wedge(g, ExtClass::monomial(l, n, mono));
        rows.emplace_back(prod.coords().begin(), prod.coords().end());
      }
    MatF m = MatF::from_rows(l.ell(), full, rows);
    dims.push_back(full - rank(m));
  }
  return dims;
}

}  // namespace liftfan
