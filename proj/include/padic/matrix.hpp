#pragma once

#include <utility>
#include <vector>

#include "padic/scalar.hpp"

namespace padic {

struct SingularMinor : Error {
  SingularMinor() : Error("principal minor vanishes") {}
};
struct DegenerateGramSchmidt : Error {
  DegenerateGramSchmidt() : Error("Gram-Schmidt hit an isotropic column") {}
};
struct DimensionMismatch : Error {
  DimensionMismatch() : Error("matrix dimensions do not match") {}
};

// Dense matrix of exact p-adic scalars.  Row-major.
class ExactMatrix {
 public:
  ExactMatrix(long prime, long rows, long cols)
      : p_(prime), rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows * cols), PadicScalar::zero(prime)) {}

  static ExactMatrix identity(long prime, long n);
  static ExactMatrix from_longs(long prime,
                                const std::vector<std::vector<long>>& rows);

  long prime() const { return p_; }
  long rows() const { return rows_; }
  long cols() const { return cols_; }

  const PadicScalar& at(long i, long j) const {
    return e_[static_cast<size_t>(i * cols_ + j)];
  }
  PadicScalar& at(long i, long j) {
    return e_[static_cast<size_t>(i * cols_ + j)];
  }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix scaled(const PadicScalar& c) const;
  ExactMatrix transpose() const;

  std::vector<PadicScalar> apply(const std::vector<PadicScalar>& v) const;

  PadicScalar trace() const;
  PadicScalar det() const;
  long rank() const;
  ExactMatrix inverse() const;   // Error when singular
  ExactMatrix adjugate() const;  // com(M): com(M) * M = det(M) * I

  // M = L U with L unipotent lower triangular and U upper triangular;
  // exists iff no principal minor vanishes (SingularMinor otherwise).
  std::pair<ExactMatrix, ExactMatrix> lu() const;

  // M = Q R with R unipotent upper triangular and tQ * Q diagonal
  // invertible (Gram-Schmidt without normalization).  Returns (Q, R).
  std::pair<ExactMatrix, ExactMatrix> qr() const;

  // Coefficients of det(X I - M), ascending degree, leading 1 included.
  std::vector<PadicScalar> charpoly() const;

  // Adjugate of the polynomial matrix X I - M as polynomial coefficients:
  // adj(X I - M) = sum_k coeff[k] X^k, via the Faddeev-LeVerrier
  // recurrence (exact rational bookkeeping).
  std::vector<ExactMatrix> charmatrix_adjugate() const;

  // Valuations of the elementary divisors over Z_p, nondecreasing; one per
  // rank.  Smith normal form restricted to what the value group sees.
  std::vector<long> smith_valuations() const;

  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

 private:
  long p_;
  long rows_, cols_;
  std::vector<PadicScalar> e_;
};

}  // namespace padic
