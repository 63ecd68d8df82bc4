#pragma once

// Random generators and brute-force oracles shared by the unit tests and the
// acceptance binary. Oracles here avoid the library's own algorithms.

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

#include "lieshull/lie_algebra.hpp"
#include "lieshull/linalg.hpp"

namespace lieshull::testing {

inline Rational random_rational(std::mt19937_64& rng, int range = 4, int max_den = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  return Rational(num(rng)) / Rational(den(rng));
}

inline VectorQ random_vector(std::mt19937_64& rng, Index n, int range = 4, int max_den = 3) {
  VectorQ v(n);
  for (Index i = 0; i < n; ++i) v(i) = random_rational(rng, range, max_den);
  return v;
}

inline MatrixQ random_matrix(std::mt19937_64& rng, Index rows, Index cols, int range = 4) {
  MatrixQ m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_rational(rng, range, 3);
  return m;
}

inline MatrixQ random_strict_upper(std::mt19937_64& rng, Index n, int range = 4) {
  MatrixQ m = MatrixQ::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) m(i, j) = random_rational(rng, range, 3);
  return m;
}

inline MatrixQ random_unipotent(std::mt19937_64& rng, Index n, int range = 4) {
  return MatrixQ(MatrixQ::Identity(n, n) + random_strict_upper(rng, n, range));
}

/// Permutation-expansion determinant.
inline Rational leibniz_determinant(const MatrixQ& m) {
  const Index n = m.rows();
  std::vector<Index> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Rational total(0);
  do {
    int inversions = 0;
    for (Index a = 0; a < n; ++a)
      for (Index b = a + 1; b < n; ++b)
        if (p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)]) ++inversions;
    Rational term(inversions % 2 ? -1 : 1);
    for (Index a = 0; a < n; ++a) term *= m(a, p[static_cast<std::size_t>(a)]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// [x, y] straight from the bracket table: sum_ij x_i y_j [b_i, b_j].
inline VectorQ table_bracket(const LieAlgebra& g, const VectorQ& x, const VectorQ& y) {
  VectorQ out = VectorQ::Zero(g.dim());
  for (Index i = 0; i < g.dim(); ++i)
    for (Index j = 0; j < g.dim(); ++j)
      if (!x(i).is_zero() && !y(j).is_zero()) out += x(i) * y(j) * g.structure(i, j);
  return out;
}

/// All ordered basis triples violating Jacobi.
inline std::vector<std::array<Index, 3>> brute_force_jacobi(const LieAlgebra& g) {
  std::vector<std::array<Index, 3>> bad;
  const Index n = g.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const VectorQ bi = g.basis_vector(i), bj = g.basis_vector(j), bk = g.basis_vector(k);
        const VectorQ r = table_bracket(g, bi, table_bracket(g, bj, bk)) +
                          table_bracket(g, bj, table_bracket(g, bk, bi)) +
                          table_bracket(g, bk, table_bracket(g, bi, bj));
        if (!is_zero_matrix<Rational>(r)) bad.push_back({i, j, k});
      }
  return bad;
}

/// Matrix Lie algebra generated by a few sparse strictly upper triangular
/// matrices, with structure constants read off in an echelon basis. Always
/// nilpotent and always satisfies Jacobi.
inline LieAlgebra random_nilpotent_algebra(std::mt19937_64& rng, Index max_dim) {
  std::uniform_int_distribution<int> size_dist(3, 5), seeds_dist(1, 3), coin(0, 2);
  while (true) {
    const Index m = size_dist(rng);
    const int seeds = seeds_dist(rng);
    std::vector<VectorQ> vs;
    for (int s = 0; s < seeds; ++s) {
      MatrixQ a = MatrixQ::Zero(m, m);
      for (Index i = 0; i < m; ++i)
        for (Index j = i + 1; j < m; ++j)
          if (coin(rng) == 0) a(i, j) = random_rational(rng, 3, 2);
      vs.push_back(vectorize(a));
    }
    const BracketFn br = [m](const VectorQ& x, const VectorQ& y) {
      return vectorize(commutator(unvectorize(x, m, m), unvectorize(y, m, m)));
    };
    const Subspace span = span_closure(vs, m * m, br);
    const Index n = span.dim();
    if (n == 0 || n > max_dim) continue;
    std::vector<BracketEntry> brackets;
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        const VectorQ c = span.coordinates(br(span.vector(i), span.vector(j)));
        BracketEntry e{i, j, {}};
        for (Index k = 0; k < n; ++k)
          if (!c(k).is_zero()) e.coeffs[k] = c(k);
        if (!e.coeffs.empty()) brackets.push_back(std::move(e));
      }
    }
    std::vector<std::string> names;
    for (Index i = 0; i < n; ++i) names.push_back("b" + std::to_string(i));
    return LieAlgebra("random", names, brackets);
  }
}

/// Free nilpotent algebra of rank 2 and step 3 with basis A, B, [A,B],
/// [A,[A,B]], [B,[A,B]], realized by strictly upper triangular 5x5 matrices.
struct FreeNilpotent {
  LieAlgebra algebra;
  std::vector<MatrixQ> basis;
};

inline FreeNilpotent free_nilpotent_rank2_step3() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> coin(0, 2), entry(-1, 1);
  while (true) {
    MatrixQ a = MatrixQ::Zero(5, 5), b = MatrixQ::Zero(5, 5);
    for (Index i = 0; i < 5; ++i)
      for (Index j = i + 1; j < 5; ++j) {
        if (coin(rng) == 0) a(i, j) = entry(rng);
        if (coin(rng) == 0) b(i, j) = entry(rng);
      }
    const MatrixQ c = commutator(a, b);
    const std::vector<MatrixQ> basis{a, b, c, commutator(a, c), commutator(b, c)};
    MatrixQ cols(25, 5);
    for (Index k = 0; k < 5; ++k) cols.col(k) = vectorize(basis[static_cast<std::size_t>(k)]);
    if (rank(cols) < 5) continue;
    bool closed = true;
    std::vector<BracketEntry> brackets;
    for (Index i = 0; i < 5 && closed; ++i) {
      for (Index j = i + 1; j < 5; ++j) {
        const auto x = solve<Rational>(cols, vectorize(commutator(basis[static_cast<std::size_t>(i)],
                                                                  basis[static_cast<std::size_t>(j)])));
        if (!x) {
          closed = false;
          break;
        }
        BracketEntry e{i, j, {}};
        for (Index k = 0; k < 5; ++k)
          if (!(*x)(k).is_zero()) e.coeffs[k] = (*x)(k);
        if (!e.coeffs.empty()) brackets.push_back(std::move(e));
      }
    }
    if (!closed) continue;
    LieAlgebra g("free_nilpotent_2_3", {"A", "B", "C", "D", "E"}, brackets);
    if (lower_central_series(g).size() != 4) continue;
    return {g, basis};
  }
}

inline LieAlgebra h3() {
  return LieAlgebra("h3", {"X", "Y", "Z"}, {{0, 1, {{2, Rational(1)}}}});
}

inline LieAlgebra aff1() { return LieAlgebra("aff1", {"T", "X"}, {{0, 1, {{1, Rational(1)}}}}); }

inline MatrixQ mat2(int a, int b, int c, int d) {
  MatrixQ m(2, 2);
  m << Rational(a), Rational(b), Rational(c), Rational(d);
  return m;
}

inline VectorQ vec(std::initializer_list<int> xs) {
  VectorQ v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v(i++) = Rational(x);
  return v;
}

}  // namespace lieshull::testing
