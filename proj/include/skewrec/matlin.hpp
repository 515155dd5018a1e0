#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "skewrec/poly.hpp"

namespace skewrec {

/// Row-major matrix over an algebra. Matrices act on column vectors, and
/// products keep the left-to-right order of entries (right-module
/// convention).
template <class E>
class DMatrix {
 public:
  DMatrix() = default;
  DMatrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  E& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const E& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool operator==(const DMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  std::vector<E> column(std::size_t c) const {
    std::vector<E> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

template <class E>
using DVector = std::vector<E>;

/// Jordan data for a companion matrix: A = U J U^{-1}.
template <class E>
struct JordanData {
  std::vector<std::pair<E, std::size_t>> blocks;  // (eigenvalue, size)
  DMatrix<E> U;
  DMatrix<E> Uinv;
  DMatrix<E> J;
};

template <Algebra A>
DMatrix<typename A::Element> identity_matrix(const A& alg, std::size_t n) {
  DMatrix<typename A::Element> m(n, n, alg.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = alg.one();
  return m;
}

template <Algebra A>
DMatrix<typename A::Element> mat_product(const A& alg, const DMatrix<typename A::Element>& x,
                                         const DMatrix<typename A::Element>& y) {
  if (x.cols() != y.rows()) fail(ErrorCode::DimensionMismatch, "matrix product shapes differ");
  DMatrix<typename A::Element> out(x.rows(), y.cols(), alg.zero());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < y.cols(); ++j) {
      auto acc = alg.zero();
      for (std::size_t k = 0; k < x.cols(); ++k) acc = acc + alg.mul(x(i, k), y(k, j));
      out(i, j) = acc;
    }
  }
  return out;
}

template <Algebra A>
DMatrix<typename A::Element> mat_sum(const A&, const DMatrix<typename A::Element>& x,
                                     const DMatrix<typename A::Element>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) fail(ErrorCode::DimensionMismatch, "matrix sum shapes differ");
  DMatrix<typename A::Element> out = x;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) + y(i, j);
  }
  return out;
}

/// M v.
template <Algebra A>
DVector<typename A::Element> mat_apply(const A& alg, const DMatrix<typename A::Element>& m,
                                       const DVector<typename A::Element>& v) {
  if (m.cols() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shapes differ");
  DVector<typename A::Element> out(m.rows(), alg.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) out[i] = out[i] + alg.mul(m(i, k), v[k]);
  }
  return out;
}

/// Every entry multiplied on the left (or right) by s.
template <Algebra A>
DVector<typename A::Element> scale_left(const A& alg, const typename A::Element& s,
                                        const DVector<typename A::Element>& v) {
  DVector<typename A::Element> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(alg.mul(s, x));
  return out;
}

template <Algebra A>
DVector<typename A::Element> scale_right(const A& alg, const DVector<typename A::Element>& v,
                                         const typename A::Element& s) {
  DVector<typename A::Element> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(alg.mul(x, s));
  return out;
}

/// Scalar embedding: s I.
template <Algebra A>
DMatrix<typename A::Element> scalar_matrix(const A& alg, const typename A::Element& s, std::size_t n) {
  DMatrix<typename A::Element> m(n, n, alg.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

/// Shifted identity with last row (-c_0, ..., -c_{n-1}) for monic p.
template <Algebra A>
DMatrix<typename A::Element> companion_matrix(const A& alg, const LeftPoly<typename A::Element>& p) {
  if (p.degree() < 1 || !(p.coeffs.back() == alg.one())) {
    fail(ErrorCode::PreconditionViolation, "companion matrix needs a monic polynomial of degree >= 1");
  }
  const std::size_t n = static_cast<std::size_t>(p.degree());
  DMatrix<typename A::Element> m(n, n, alg.zero());
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = alg.one();
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = -p.coeffs[j];
  return m;
}

/// Row i holds lambda_j^i.
template <Algebra A>
DMatrix<typename A::Element> vandermonde(const A& alg, const std::vector<typename A::Element>& nodes) {
  const std::size_t n = nodes.size();
  if (n == 0) fail(ErrorCode::PreconditionViolation, "vandermonde of no nodes");
  DMatrix<typename A::Element> m(n, n, alg.one());
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = alg.mul(m(i - 1, j), nodes[j]);
  }
  return m;
}

/// (1, lambda, ..., lambda^{n-1}).
template <Algebra A>
DVector<typename A::Element> power_vector(const A& alg, const typename A::Element& lambda, std::size_t n) {
  DVector<typename A::Element> v(n, alg.one());
  for (std::size_t i = 1; i < n; ++i) v[i] = alg.mul(v[i - 1], lambda);
  return v;
}

/// Gauss-Jordan inversion with left row operations. The first row whose pivot
/// is nonzero is chosen; a zero column raises Singular.
template <DivisionAlgebra A>
DMatrix<typename A::Element> mat_inverse(const A& alg, const DMatrix<typename A::Element>& m) {
  using E = typename A::Element;
  const std::size_t n = m.rows();
  if (n != m.cols()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  DMatrix<E> work = m;
  DMatrix<E> inv = identity_matrix(alg, n);
  auto swap_rows = [n](DMatrix<E>& x, std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < n; ++j) std::swap(x(r1, j), x(r2, j));
  };
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && work(p, c).is_zero()) ++p;
    if (p == n) fail(ErrorCode::Singular, "column " + std::to_string(c) + " has no pivot");
    if (p != c) {
      swap_rows(work, p, c);
      swap_rows(inv, p, c);
    }
    const E pivot_inv = alg.inv(work(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      work(c, j) = alg.mul(pivot_inv, work(c, j));
      inv(c, j) = alg.mul(pivot_inv, inv(c, j));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || work(r, c).is_zero()) continue;
      const E factor = work(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) = work(r, j) - alg.mul(factor, work(c, j));
        inv(r, j) = inv(r, j) - alg.mul(factor, inv(c, j));
      }
    }
  }
  return inv;
}

enum class EigenSide { left, right };

/// left: A v = lambda v; right: A v = v lambda.
template <Algebra A>
bool eig_check(const A& alg, const DMatrix<typename A::Element>& m, const typename A::Element& lambda,
               const DVector<typename A::Element>& v, EigenSide side) {
  if (m.rows() != m.cols() || m.cols() != v.size()) fail(ErrorCode::DimensionMismatch, "eigen check shapes differ");
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || !x.is_zero();
  if (!nonzero) return false;
  auto lhs = mat_apply(alg, m, v);
  auto rhs = side == EigenSide::left ? scale_left(alg, lambda, v) : scale_right(alg, v, lambda);
  return lhs == rhs;
}

/// Solves A w - w lambda = v. The map is Q-linear, so each unknown entry is
/// flattened to its rational coordinates and solved over Q. Solutions form a
/// coset of the kernel; the one returned has its first entry orthogonal (in
/// coordinates) to the first entries of the kernel, which makes the choice
/// independent of column order. Throws NoSolution when inconsistent.
template <DivisionAlgebra A>
DVector<typename A::Element> sylvester_chain_solve(const A& alg, const DMatrix<typename A::Element>& m,
                                                   const typename A::Element& lambda,
                                                   const DVector<typename A::Element>& v) {
  using E = typename A::Element;
  const std::size_t n = m.rows();
  if (n != m.cols() || v.size() != n) fail(ErrorCode::DimensionMismatch, "chain solve shapes differ");
  const std::size_t dim = alg.dim();
  const std::size_t unknowns = n * dim;
  std::vector<std::vector<Rational>> system(unknowns, std::vector<Rational>(unknowns, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < dim; ++c) {
      std::vector<Rational> unit(dim, Rational(0));
      unit[c] = 1;
      DVector<E> w(n, alg.zero());
      w[i] = alg.from_coords(unit);
      auto image = mat_apply(alg, m, w);
      for (std::size_t r = 0; r < n; ++r) {
        auto coords = alg.coords(image[r] - alg.mul(w[r], lambda));
        for (std::size_t k = 0; k < dim; ++k) system[r * dim + k][i * dim + c] = coords[k];
      }
    }
  }
  std::vector<Rational> rhs;
  rhs.reserve(unknowns);
  for (const auto& x : v) {
    auto coords = alg.coords(x);
    rhs.insert(rhs.end(), coords.begin(), coords.end());
  }
  auto kernel = rational_nullspace(system, unknowns);
  auto sol = solve_rational_system(std::move(system), std::move(rhs));
  if (!sol) fail(ErrorCode::NoSolution, "A w - w lambda = v is inconsistent; the Jordan chain cannot be extended");
  if (!kernel.empty()) {
    auto head_dot = [dim](const std::vector<Rational>& x, const std::vector<Rational>& y) {
      Rational acc = 0;
      for (std::size_t k = 0; k < dim; ++k) acc += x[k] * y[k];
      return acc;
    };
    std::vector<std::vector<Rational>> gram(kernel.size(), std::vector<Rational>(kernel.size()));
    std::vector<Rational> proj(kernel.size());
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      for (std::size_t j = 0; j < kernel.size(); ++j) gram[i][j] = head_dot(kernel[i], kernel[j]);
      proj[i] = head_dot(kernel[i], *sol);
    }
    auto shift = solve_rational_system(std::move(gram), std::move(proj));
    if (!shift) fail(ErrorCode::InternalError, "Gram system is inconsistent");
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      if (sgn((*shift)[i]) == 0) continue;
      for (std::size_t k = 0; k < unknowns; ++k) (*sol)[k] -= (*shift)[i] * kernel[i][k];
    }
  }
  DVector<E> w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    w.push_back(alg.from_coords(std::span<const Rational>(sol->data() + i * dim, dim)));
  }
  return w;
}

/// Binomial coefficient C(k, s) as an exact rational; 0 for s > k.
inline Rational binomial(unsigned long long k, std::size_t s) {
  if (s > k) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), k, s);
  return Rational(out);
}

/// J_m(lambda)^k: entry (i, j) is C(k, j - i) lambda^{k - (j - i)}.
template <Algebra A>
DMatrix<typename A::Element> jordan_block_power(const A& alg, const typename A::Element& lambda, std::size_t m,
                                                unsigned long long k) {
  if (m == 0) fail(ErrorCode::PreconditionViolation, "Jordan block of size 0");
  DMatrix<typename A::Element> out(m, m, alg.zero());
  std::vector<typename A::Element> powers;
  for (std::size_t s = 0; s < m && s <= k; ++s) powers.push_back(power(alg, lambda, k - s));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      std::size_t s = j - i;
      if (s > k) continue;
      out(i, j) = binomial(k, s) * powers[s];
    }
  }
  return out;
}

/// Block-diagonal Jordan matrix with superdiagonal ones inside each block.
template <Algebra A>
DMatrix<typename A::Element> assemble_jordan(const A& alg,
                                             const std::vector<std::pair<typename A::Element, std::size_t>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.second;
  DMatrix<typename A::Element> j(n, n, alg.zero());
  std::size_t offset = 0;
  for (const auto& [lambda, size] : blocks) {
    for (std::size_t i = 0; i < size; ++i) {
      j(offset + i, offset + i) = lambda;
      if (i + 1 < size) j(offset + i, offset + i + 1) = alg.one();
    }
    offset += size;
  }
  return j;
}

/// Builds a Jordan chain per (lambda, multiplicity) starting from the
/// eigenvector (1, lambda, ..., lambda^{n-1}) and checks A = U J U^{-1}.
template <DivisionAlgebra A>
JordanData<typename A::Element> jordan_from_roots(
    const A& alg, const DMatrix<typename A::Element>& m,
    const std::vector<std::pair<typename A::Element, std::size_t>>& rootdata) {
  using E = typename A::Element;
  const std::size_t n = m.rows();
  std::size_t total = 0;
  for (const auto& rd : rootdata) {
    if (rd.second == 0) fail(ErrorCode::PreconditionViolation, "zero multiplicity");
    total += rd.second;
  }
  if (total != n) {
    fail(ErrorCode::PreconditionViolation,
         "multiplicities sum to " + std::to_string(total) + ", expected " + std::to_string(n));
  }
  JordanData<E> data;
  data.blocks = rootdata;
  data.U = DMatrix<E>(n, n, alg.zero());
  std::size_t col = 0;
  for (const auto& [lambda, mult] : rootdata) {
    DVector<E> chain = power_vector(alg, lambda, n);
    for (std::size_t j = 0; j < mult; ++j) {
      if (j > 0) chain = sylvester_chain_solve(alg, m, lambda, chain);
      for (std::size_t r = 0; r < n; ++r) data.U(r, col) = chain[r];
      ++col;
    }
  }
  try {
    data.Uinv = mat_inverse(alg, data.U);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    fail(ErrorCode::SingularU, "Jordan chains are linearly dependent");
  }
  data.J = assemble_jordan(alg, rootdata);
  if (!(mat_product(alg, m, data.U) == mat_product(alg, data.U, data.J))) {
    fail(ErrorCode::InternalError, "A U != U J for the constructed chains");
  }
  return data;
}

}  // namespace skewrec
