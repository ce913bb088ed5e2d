#include "tropjac/linalg.hpp"

#include <algorithm>

#include "tropjac/error.hpp"

namespace tropjac {

std::size_t rank(Matrix<Rational> m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

BigInt determinant(Matrix<BigInt> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Matrix<BigInt> multiply(const Matrix<BigInt>& a, const Matrix<BigInt>& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix<BigInt> out(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

namespace {

Matrix<BigInt> identity(std::size_t n) {
  Matrix<BigInt> id(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// row_i += f * row_j on D and U
void add_row(Matrix<BigInt>& d, Matrix<BigInt>& u, std::size_t i, std::size_t j, const BigInt& f) {
  for (std::size_t c = 0; c < d[i].size(); ++c) d[i][c] += f * d[j][c];
  for (std::size_t c = 0; c < u[i].size(); ++c) u[i][c] += f * u[j][c];
}

// col_i += f * col_j on D and V
void add_col(Matrix<BigInt>& d, Matrix<BigInt>& v, std::size_t i, std::size_t j, const BigInt& f) {
  for (auto& row : d) row[i] += f * row[j];
  for (auto& row : v) row[i] += f * row[j];
}

void swap_cols(Matrix<BigInt>& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(const Matrix<BigInt>& a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  SmithForm s{identity(rows), identity(cols), a, {}};
  auto& d = s.D;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d[i][j] != 0 && (pi == rows || abs(d[i][j]) < abs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      std::swap(d[t], d[pi]);
      std::swap(s.U[t], s.U[pi]);
      swap_cols(d, t, pj);
      swap_cols(s.V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        BigInt q = d[i][t] / d[t][t];
        add_row(d, s.U, i, t, -q);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        BigInt q = d[t][j] / d[t][t];
        add_col(d, s.V, j, t, -q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the whole trailing block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(d, s.U, t, bad, BigInt(1));
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : s.U[t]) x = -x;
    }
  }
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) s.diagonal.push_back(d[t][t]);
  return s;
}

// ---------------------------------------------------------------------------
// Scalar systems

namespace {

std::vector<Scalar> solve_rational(const Matrix<Scalar>& a, const std::vector<Scalar>& b) {
  std::size_t n = a.size();
  Matrix<Rational> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = *a[i][j].constant_value();
    m[i][n] = *b[i].constant_value();
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) throw Error(ErrorCode::Internal, "singular linear system");
    std::swap(m[p], m[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  std::vector<Scalar> x;
  for (std::size_t i = 0; i < n; ++i) x.emplace_back(m[i][n] / m[i][i]);
  return x;
}

Poly exact(const Poly& num, const Poly& den) {
  auto q = num.divide_exact(den);
  if (!q) throw Error(ErrorCode::Internal, "inexact division in fraction-free elimination");
  return *q;
}

}  // namespace

std::vector<Scalar> solve(const Matrix<Scalar>& a, const std::vector<Scalar>& b) {
  std::size_t n = a.size();
  if (n == 0) return {};
  bool constant = std::all_of(b.begin(), b.end(), [](const Scalar& s) { return s.is_constant(); });
  for (const auto& row : a)
    constant = constant && std::all_of(row.begin(), row.end(), [](const Scalar& s) { return s.is_constant(); });
  if (constant) return solve_rational(a, b);

  // clear each row to polynomials; column n holds the right-hand side
  Matrix<Poly> m(n, std::vector<Poly>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<const Scalar*> entries;
    for (const auto& s : a[i]) entries.push_back(&s);
    entries.push_back(&b[i]);
    std::vector<const Poly*> dens;
    for (const Scalar* s : entries)
      if (!s->is_zero() && !s->den().constant_value()) dens.push_back(&s->den());
    std::stable_sort(dens.begin(), dens.end(), [](const Poly* x, const Poly* y) {
      return x->degree() != y->degree() ? x->degree() > y->degree() : x->size() > y->size();
    });
    Poly mult(1);
    for (const Poly* d : dens)
      if (!mult.divide_exact(*d)) mult = mult * *d;
    for (std::size_t j = 0; j <= n; ++j) {
      const Scalar& s = *entries[j];
      if (s.is_zero()) continue;
      m[i][j] = s.num() * exact(mult, s.den());
    }
  }

  Poly prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m[i][k].is_zero() && (p == n || m[i][k].size() < m[p][k].size())) p = i;
    if (p == n) throw Error(ErrorCode::Internal, "singular linear system");
    std::swap(m[p], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) m[i][j] = exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }

  // y = delta * x is polynomial; back-substitute on y
  const Poly& delta = m[n - 1][n - 1];
  std::vector<Poly> y(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Poly acc = m[ii][n] * delta;
    for (std::size_t j = ii + 1; j < n; ++j) acc -= m[ii][j] * y[j];
    y[ii] = exact(acc, m[ii][ii]);
  }
  std::vector<Scalar> x;
  for (std::size_t i = 0; i < n; ++i) x.emplace_back(y[i], delta);
  return x;
}

}  // namespace tropjac
