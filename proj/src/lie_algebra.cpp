#include "lieshull/lie_algebra.hpp"

#include <set>

namespace lieshull {

namespace {

/// Matrix of v -> subspace.reduce(v); its kernel is the subspace.
MatrixQ reduction_matrix(const Subspace& u) {
  const Index n = u.ambient_dim();
  MatrixQ r = MatrixQ::Identity(n, n);
  for (Index k = 0; k < u.dim(); ++k) {
    const Index p = u.pivots()[static_cast<std::size_t>(k)];
    r.col(p) -= u.basis().row(k).transpose();
  }
  return r;
}

MatrixQ stack(const std::vector<MatrixQ>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  MatrixQ out(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

void check_vector(const LieAlgebra& g, const VectorQ& x) {
  if (x.size() != g.dim()) throw InputError("vector length does not match algebra dimension");
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names,
                       const std::vector<BracketEntry>& brackets)
    : name_(std::move(name)), basis_names_(std::move(basis_names)) {
  const Index n = dim();
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.i >= n || b.j >= n) {
      throw InputError("bracket index out of range");
    }
    if (b.i >= b.j) throw InputError("brackets must be given with i < j");
    VectorQ v = VectorQ::Zero(n);
    for (const auto& [k, c] : b.coeffs) {
      if (k < 0 || k >= n) throw InputError("bracket coefficient index out of range");
      v(k) = c;
    }
    if (!table_.emplace(std::make_pair(b.i, b.j), v).second) {
      throw InputError("duplicate bracket entry");
    }
  }
  for (auto it = table_.begin(); it != table_.end();) {
    it = is_zero_matrix<Rational>(it->second) ? table_.erase(it) : std::next(it);
  }
  ad_.assign(static_cast<std::size_t>(n), MatrixQ::Zero(n, n));
  for (const auto& [ij, v] : table_) {
    ad_[static_cast<std::size_t>(ij.first)].col(ij.second) = v;
    ad_[static_cast<std::size_t>(ij.second)].col(ij.first) = -v;
  }
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (const auto& [ij, v] : table_) {
    BracketEntry e{ij.first, ij.second, {}};
    for (Index k = 0; k < v.size(); ++k)
      if (!v(k).is_zero()) e.coeffs[k] = v(k);
    out.push_back(std::move(e));
  }
  return out;
}

VectorQ LieAlgebra::structure(Index i, Index j) const {
  if (i == j) return VectorQ::Zero(dim());
  const bool swapped = i > j;
  const auto it = table_.find(swapped ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == table_.end()) return VectorQ::Zero(dim());
  return swapped ? VectorQ(-it->second) : it->second;
}

VectorQ LieAlgebra::basis_vector(Index i) const {
  VectorQ v = VectorQ::Zero(dim());
  v(i) = 1;
  return v;
}

LieAlgebra abelian_algebra(Index n, std::string name) {
  std::vector<std::string> names;
  for (Index i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(name.empty() ? "abelian" + std::to_string(n) : std::move(name),
                    std::move(names), {});
}

ValidationReport validate_structure(const LieAlgebra& g) {
  ValidationReport report;
  const Index n = g.dim();
  // The Jacobiator is alternating once the bracket is antisymmetric, so i<j<k suffices.
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        const VectorQ r = g.ad_basis(i) * g.structure(j, k) +
                          g.ad_basis(j) * g.structure(k, i) +
                          g.ad_basis(k) * g.structure(i, j);
        if (!is_zero_matrix<Rational>(r)) report.violations.push_back({i, j, k, r});
      }
  return report;
}

VectorQ bracket(const LieAlgebra& g, const VectorQ& x, const VectorQ& y) {
  check_vector(g, y);
  return ad(g, x) * y;
}

MatrixQ ad(const LieAlgebra& g, const VectorQ& x) {
  check_vector(g, x);
  const Index n = g.dim();
  MatrixQ m = MatrixQ::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    if (!x(i).is_zero()) m += x(i) * g.ad_basis(i);
  return m;
}

Subspace span_closure(const std::vector<VectorQ>& seeds, Index ambient_dim, const BracketFn& br) {
  Subspace current = Subspace::from_vectors(seeds, ambient_dim);
  for (;;) {
    const auto basis = current.vectors();
    std::vector<VectorQ> next = basis;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b) next.push_back(br(basis[a], basis[b]));
    Subspace grown = Subspace::from_vectors(next, ambient_dim);
    if (grown.dim() == current.dim()) return current;
    current = std::move(grown);
  }
}

Subspace lie_closure(const LieAlgebra& g, const std::vector<VectorQ>& seeds) {
  for (const auto& s : seeds) check_vector(g, s);
  return span_closure(seeds, g.dim(),
                      [&g](const VectorQ& x, const VectorQ& y) { return bracket(g, x, y); });
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  std::vector<VectorQ> out;
  for (Index a = 0; a < u.dim(); ++a) {
    const MatrixQ ada = ad(g, u.vector(a));
    for (Index b = 0; b < v.dim(); ++b) out.push_back(ada * v.vector(b));
  }
  return Subspace::from_vectors(out, g.dim());
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& u) {
  return u.contains(bracket_span(g, u, u));
}

Subspace normalizer_subalg(const LieAlgebra& g, const Subspace& u) {
  // [Y, u_j] = -ad(u_j) Y must lie in u.
  const MatrixQ r = reduction_matrix(u);
  std::vector<MatrixQ> rows;
  for (Index j = 0; j < u.dim(); ++j) rows.push_back(r * ad(g, u.vector(j)));
  return Subspace::from_columns(nullspace(stack(rows, g.dim())));
}

Subspace centralizer_subalg(const LieAlgebra& g, const Subspace& u) {
  std::vector<MatrixQ> rows;
  for (Index j = 0; j < u.dim(); ++j) rows.push_back(ad(g, u.vector(j)));
  return Subspace::from_columns(nullspace(stack(rows, g.dim())));
}

Subspace center(const LieAlgebra& g) { return centralizer_subalg(g, Subspace::whole(g.dim())); }

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::whole(g.dim())};
  while (!series.back().is_zero()) {
    Subspace next = bracket_span(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace whole = Subspace::whole(g.dim());
  std::vector<Subspace> series{whole};
  while (!series.back().is_zero()) {
    Subspace next = bracket_span(g, whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().is_zero(); }

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().is_zero(); }

bool is_ideal(const LieAlgebra& g, const Subspace& h) {
  if (h.ambient_dim() != g.dim()) throw InputError("is_ideal: ambient dimension mismatch");
  for (Index i = 0; i < g.dim(); ++i)
    for (Index j = 0; j < h.dim(); ++j)
      if (!h.contains(VectorQ(g.ad_basis(i) * h.vector(j)))) return false;
  return true;
}

Quotient quotient_algebra(const LieAlgebra& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) throw InputError("quotient_algebra: subspace is not an ideal");
  const Index n = g.dim();
  std::set<Index> pivots(ideal.pivots().begin(), ideal.pivots().end());
  std::vector<Index> complement;
  for (Index c = 0; c < n; ++c)
    if (!pivots.count(c)) complement.push_back(c);
  const Index m = static_cast<Index>(complement.size());

  // projection(v) = coordinates of reduce(v) on the complement columns.
  const MatrixQ r = reduction_matrix(ideal);
  MatrixQ projection(m, n);
  MatrixQ lift = MatrixQ::Zero(n, m);
  for (Index a = 0; a < m; ++a) {
    projection.row(a) = r.row(complement[static_cast<std::size_t>(a)]);
    lift(complement[static_cast<std::size_t>(a)], a) = 1;
  }

  std::vector<std::string> names;
  for (Index c : complement) names.push_back(g.basis_names()[static_cast<std::size_t>(c)]);
  std::vector<BracketEntry> entries;
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b) {
      const VectorQ v = projection * g.structure(complement[static_cast<std::size_t>(a)],
                                                 complement[static_cast<std::size_t>(b)]);
      BracketEntry e{a, b, {}};
      for (Index k = 0; k < m; ++k)
        if (!v(k).is_zero()) e.coeffs[k] = v(k);
      if (!e.coeffs.empty()) entries.push_back(std::move(e));
    }
  return {LieAlgebra(g.name() + "/ideal", std::move(names), entries), projection, lift,
          complement};
}

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& h, std::string name) {
  const Index r = h.dim();
  std::vector<std::string> names;
  for (Index a = 0; a < r; ++a) names.push_back("h" + std::to_string(a + 1));
  std::vector<BracketEntry> entries;
  for (Index a = 0; a < r; ++a)
    for (Index b = a + 1; b < r; ++b) {
      const VectorQ v = bracket(g, h.vector(a), h.vector(b));
      if (!h.contains(v)) throw InputError("subalgebra: subspace is not bracket-closed");
      const VectorQ c = h.coordinates(v);
      BracketEntry e{a, b, {}};
      for (Index k = 0; k < r; ++k)
        if (!c(k).is_zero()) e.coeffs[k] = c(k);
      if (!e.coeffs.empty()) entries.push_back(std::move(e));
    }
  return LieAlgebra(name.empty() ? g.name() + "|sub" : std::move(name), std::move(names), entries);
}

LieAlgebra semidirect_abelian(const MatrixQ& d, std::string name) {
  if (d.rows() != d.cols()) throw InputError("semidirect_abelian: D must be square");
  const Index n = d.rows();
  std::vector<std::string> names;
  for (Index i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  names.push_back("T");
  std::vector<BracketEntry> entries;
  // [e_i, T] = -D e_i, stored with i < n.
  for (Index i = 0; i < n; ++i) {
    BracketEntry e{i, n, {}};
    for (Index k = 0; k < n; ++k)
      if (!d(k, i).is_zero()) e.coeffs[k] = -d(k, i);
    if (!e.coeffs.empty()) entries.push_back(std::move(e));
  }
  return LieAlgebra(name.empty() ? "semidirect" : std::move(name), std::move(names), entries);
}

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  const Index n1 = g1.dim();
  std::vector<std::string> names;
  for (const auto& s : g1.basis_names()) names.push_back(s + "_1");
  for (const auto& s : g2.basis_names()) names.push_back(s + "_2");
  std::vector<BracketEntry> entries = g1.brackets();
  for (auto e : g2.brackets()) {
    BracketEntry shifted{e.i + n1, e.j + n1, {}};
    for (const auto& [k, c] : e.coeffs) shifted.coeffs[k + n1] = c;
    entries.push_back(std::move(shifted));
  }
  return LieAlgebra(g1.name() + "+" + g2.name(), std::move(names), entries);
}

Subspace stabilizer_subalg(const std::vector<MatrixQ>& rho, const VectorQ& v) {
  const Index n = static_cast<Index>(rho.size());
  MatrixQ cols(v.size(), n);
  for (Index i = 0; i < n; ++i) {
    const auto& m = rho[static_cast<std::size_t>(i)];
    if (m.rows() != v.size() || m.cols() != v.size()) {
      throw InputError("stabilizer_subalg: representation shape mismatch");
    }
    cols.col(i) = m * v;
  }
  return Subspace::from_columns(nullspace(cols));
}

bool is_lie_homomorphism(const LieAlgebra& from, const LieAlgebra& to, const MatrixQ& phi) {
  if (phi.rows() != to.dim() || phi.cols() != from.dim()) {
    throw InputError("is_lie_homomorphism: shape mismatch");
  }
  for (Index i = 0; i < from.dim(); ++i)
    for (Index j = i + 1; j < from.dim(); ++j) {
      const VectorQ lhs = phi * from.structure(i, j);
      const VectorQ rhs = bracket(to, VectorQ(phi.col(i)), VectorQ(phi.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace lieshull
