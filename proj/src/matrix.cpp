#include "padic/matrix.hpp"

namespace padic {

ExactMatrix ExactMatrix::identity(long prime, long n) {
  ExactMatrix m(prime, n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = PadicScalar::one(prime);
  return m;
}

ExactMatrix ExactMatrix::from_longs(
    long prime, const std::vector<std::vector<long>>& rows) {
  ExactMatrix m(prime, static_cast<long>(rows.size()),
                rows.empty() ? 0 : static_cast<long>(rows[0].size()));
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      m.at(i, j) = PadicScalar(prime, rows[i][j]);
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
  ExactMatrix r(p_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch();
  ExactMatrix r(p_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch();
  ExactMatrix r(merge_prime(p_, o.p_), rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (long j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

ExactMatrix ExactMatrix::scaled(const PadicScalar& c) const {
  ExactMatrix r(p_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(p_, cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<PadicScalar> ExactMatrix::apply(
    const std::vector<PadicScalar>& v) const {
  if (static_cast<long>(v.size()) != cols_) throw DimensionMismatch();
  std::vector<PadicScalar> r(rows_, PadicScalar::zero(p_));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

PadicScalar ExactMatrix::trace() const {
  PadicScalar t = PadicScalar::zero(p_);
  for (long i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

PadicScalar ExactMatrix::det() const {
  if (rows_ != cols_) throw DimensionMismatch();
  ExactMatrix w = *this;
  PadicScalar d = PadicScalar::one(p_);
  for (long c = 0; c < cols_; ++c) {
    long piv = -1;
    for (long r = c; r < rows_; ++r)
      if (!w.at(r, c).is_zero() &&
          (piv < 0 || w.at(r, c).val() < w.at(piv, c).val()))
        piv = r;
    if (piv < 0) return PadicScalar::zero(p_);
    if (piv != c) {
      for (long j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(c, j));
      d = -d;
    }
    d *= w.at(c, c);
    for (long r = c + 1; r < rows_; ++r) {
      if (w.at(r, c).is_zero()) continue;
      PadicScalar f = w.at(r, c) / w.at(c, c);
      for (long j = c; j < cols_; ++j) w.at(r, j) -= f * w.at(c, j);
    }
  }
  return d;
}

long ExactMatrix::rank() const {
  ExactMatrix w = *this;
  long rk = 0;
  for (long c = 0; c < cols_ && rk < rows_; ++c) {
    long piv = -1;
    for (long r = rk; r < rows_; ++r)
      if (!w.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rk)
      for (long j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(rk, j));
    for (long r = rk + 1; r < rows_; ++r) {
      if (w.at(r, c).is_zero()) continue;
      PadicScalar f = w.at(r, c) / w.at(rk, c);
      for (long j = c; j < cols_; ++j) w.at(r, j) -= f * w.at(rk, j);
    }
    ++rk;
  }
  return rk;
}

ExactMatrix ExactMatrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch();
  ExactMatrix w = *this;
  ExactMatrix inv = identity(p_, rows_);
  for (long c = 0; c < cols_; ++c) {
    long piv = -1;
    for (long r = c; r < rows_; ++r)
      if (!w.at(r, c).is_zero() &&
          (piv < 0 || w.at(r, c).val() < w.at(piv, c).val()))
        piv = r;
    if (piv < 0) throw Error("matrix is singular");
    if (piv != c)
      for (long j = 0; j < cols_; ++j) {
        std::swap(w.at(piv, j), w.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    PadicScalar scale = w.at(c, c).inverse();
    for (long j = 0; j < cols_; ++j) {
      w.at(c, j) *= scale;
      inv.at(c, j) *= scale;
    }
    for (long r = 0; r < rows_; ++r) {
      if (r == c || w.at(r, c).is_zero()) continue;
      PadicScalar f = w.at(r, c);
      for (long j = 0; j < cols_; ++j) {
        w.at(r, j) -= f * w.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

ExactMatrix ExactMatrix::adjugate() const {
  if (rows_ != cols_) throw DimensionMismatch();
  long n = rows_;
  if (n == 1) {
    ExactMatrix r(p_, 1, 1);
    r.at(0, 0) = PadicScalar::one(p_);
    return r;
  }
  PadicScalar d = det();
  if (!d.is_zero()) return inverse().scaled(d);
  // Singular case: cofactors from scratch.
  ExactMatrix r(p_, n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      ExactMatrix minor(p_, n - 1, n - 1);
      for (long a = 0, ai = 0; a < n; ++a) {
        if (a == i) continue;
        for (long b = 0, bj = 0; b < n; ++b) {
          if (b == j) continue;
          minor.at(ai, bj) = at(a, b);
          ++bj;
        }
        ++ai;
      }
      PadicScalar c = minor.det();
      if ((i + j) % 2 == 1) c = -c;
      r.at(j, i) = c;  // adjugate is the transposed cofactor matrix
    }
  return r;
}

std::pair<ExactMatrix, ExactMatrix> ExactMatrix::lu() const {
  if (rows_ != cols_) throw DimensionMismatch();
  long n = rows_;
  ExactMatrix l = identity(p_, n);
  ExactMatrix u = *this;
  for (long k = 0; k < n; ++k) {
    if (u.at(k, k).is_zero()) throw SingularMinor();
    for (long r = k + 1; r < n; ++r) {
      if (u.at(r, k).is_zero()) continue;
      PadicScalar f = u.at(r, k) / u.at(k, k);
      l.at(r, k) = f;
      for (long j = k; j < n; ++j) u.at(r, j) -= f * u.at(k, j);
    }
  }
  return {l, u};
}

std::pair<ExactMatrix, ExactMatrix> ExactMatrix::qr() const {
  if (rows_ != cols_) throw DimensionMismatch();
  long n = rows_;
  ExactMatrix q(p_, n, n);
  ExactMatrix r = identity(p_, n);
  std::vector<PadicScalar> norms;  // t(q_i) q_i
  for (long j = 0; j < n; ++j) {
    std::vector<PadicScalar> col(n, PadicScalar::zero(p_));
    for (long i = 0; i < n; ++i) col[i] = at(i, j);
    for (long i = 0; i < j; ++i) {
      PadicScalar dot = PadicScalar::zero(p_);
      for (long k = 0; k < n; ++k) dot += q.at(k, i) * at(k, j);
      PadicScalar coef = dot / norms[i];
      r.at(i, j) = coef;
      for (long k = 0; k < n; ++k) col[k] -= coef * q.at(k, i);
    }
    PadicScalar nn = PadicScalar::zero(p_);
    for (long k = 0; k < n; ++k) nn += col[k] * col[k];
    if (nn.is_zero()) throw DegenerateGramSchmidt();
    norms.push_back(nn);
    for (long k = 0; k < n; ++k) q.at(k, j) = col[k];
  }
  return {q, r};
}

std::vector<ExactMatrix> ExactMatrix::charmatrix_adjugate() const {
  if (rows_ != cols_) throw DimensionMismatch();
  long n = rows_;
  // B_0 = I, c_k = -tr(M B_{k-1}) / k, B_k = M B_{k-1} + c_k I;
  // adj(X I - M) = sum_{k=0}^{n-1} B_k X^{n-1-k}.
  std::vector<ExactMatrix> adj_coeffs(static_cast<size_t>(n),
                                      ExactMatrix(p_, n, n));
  ExactMatrix b = identity(p_, n);
  adj_coeffs[static_cast<size_t>(n - 1)] = b;
  for (long k = 1; k < n; ++k) {
    ExactMatrix mb = *this * b;
    PadicScalar c = -(mb.trace() / PadicScalar(p_, k));
    b = mb;
    for (long i = 0; i < n; ++i) b.at(i, i) += c;
    adj_coeffs[static_cast<size_t>(n - 1 - k)] = b;
  }
  return adj_coeffs;
}

std::vector<PadicScalar> ExactMatrix::charpoly() const {
  if (rows_ != cols_) throw DimensionMismatch();
  long n = rows_;
  std::vector<PadicScalar> coeffs(static_cast<size_t>(n + 1),
                                  PadicScalar::zero(p_));
  coeffs[static_cast<size_t>(n)] = PadicScalar::one(p_);
  ExactMatrix b = identity(p_, n);
  for (long k = 1; k <= n; ++k) {
    ExactMatrix mb = *this * b;
    PadicScalar c = -(mb.trace() / PadicScalar(p_, k));
    coeffs[static_cast<size_t>(n - k)] = c;
    if (k < n) {
      b = mb;
      for (long i = 0; i < n; ++i) b.at(i, i) += c;
    }
  }
  return coeffs;
}

std::vector<long> ExactMatrix::smith_valuations() const {
  ExactMatrix w = *this;
  long m = rows_, n = cols_;
  std::vector<long> divs;
  long top = 0;
  while (top < std::min(m, n)) {
    long bi = -1, bj = -1, bv = 0;
    for (long i = top; i < m; ++i)
      for (long j = top; j < n; ++j)
        if (!w.at(i, j).is_zero() && (bi < 0 || w.at(i, j).val() < bv)) {
          bi = i;
          bj = j;
          bv = w.at(i, j).val();
        }
    if (bi < 0) break;
    for (long j = 0; j < n; ++j) std::swap(w.at(bi, j), w.at(top, j));
    for (long i = 0; i < m; ++i) std::swap(w.at(i, bj), w.at(i, top));
    for (long i = top + 1; i < m; ++i) {
      if (w.at(i, top).is_zero()) continue;
      PadicScalar f = w.at(i, top) / w.at(top, top);
      for (long j = top; j < n; ++j) w.at(i, j) -= f * w.at(top, j);
    }
    for (long j = top + 1; j < n; ++j) {
      if (w.at(top, j).is_zero()) continue;
      PadicScalar f = w.at(top, j) / w.at(top, top);
      for (long i = top; i < m; ++i) w.at(i, j) -= f * w.at(i, top);
    }
    divs.push_back(bv);
    ++top;
  }
  return divs;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

}  // namespace padic
