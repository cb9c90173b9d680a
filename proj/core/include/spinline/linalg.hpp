#pragma once

#include <optional>
#include <vector>

#include "spinline/poly.hpp"
#include "spinline/rational.hpp"

namespace spinline {

// Dense row-major matrix over Q(i).
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<GaussianRational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {
    if (r < 0 || c < 0) bad_arg("Matrix: negative dimensions");
  }

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  GaussianRational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const GaussianRational& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  bool is_square() const { return rows == cols; }
  bool is_zero() const;
  bool is_real() const;

  Matrix transpose() const;
  Matrix conj_transpose() const;
  GaussianRational trace() const;
  Vec row(int i) const;
  Vec col(int j) const;

  // Kronecker product; the left factor is the most significant index block.
  Matrix kron(const Matrix& b) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const GaussianRational& c, Matrix m);
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

Matrix bracket(const Matrix& x, const Matrix& y);  // xy - yx
Vec act(const Matrix& m, const Vec& v);          // m v
bool is_zero_vec(const Vec& v);

struct RrefResult {
  Matrix mat;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per nonzero row, strictly increasing
};

// Unique reduced row-echelon form; pure function of the input.
RrefResult rref(Matrix m);

// A linear subspace of Q(i)^ambient in canonical form: the basis is stored as
// the rows of an RREF matrix, so equal subspaces have identical data.
struct Subspace {
  int ambient = 0;
  Matrix basis;  // dim x ambient, canonical RREF rows

  static Subspace zero(int ambient) { return {ambient, Matrix(0, ambient)}; }
  static Subspace full(int ambient) { return {ambient, Matrix::identity(ambient)}; }
  static Subspace row_span(Matrix rows);  // canonicalizes

  int dim() const { return basis.rows; }
  bool is_zero() const { return basis.rows == 0; }
  std::vector<int> pivots() const;

  // coordinates of v in the RREF basis, or nullopt if v is outside
  std::optional<Vec> coordinates(const Vec& v) const;
  bool contains(const Vec& v) const { return coordinates(v).has_value(); }
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient == y.ambient && x.basis == y.basis;
  }
};

// Deterministic order for report output: by ambient, dimension, then entries.
bool subspace_less(const Subspace& x, const Subspace& y);

Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& x, const Subspace& y);
Subspace subspace_sum(const Subspace& x, const Subspace& y);

// image of a subspace under m, canonicalized
Subspace image(const Matrix& m, const Subspace& s);

// Any particular solution of A x = b (free variables set to zero), or
// nullopt when inconsistent.
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b);

// Monic characteristic polynomial det(xI - M), Faddeev-LeVerrier, exact.
Poly char_poly(const Matrix& m);

// Substitute the matrix into p (Horner); Cayley-Hamilton checks.
Matrix poly_at_matrix(const Poly& p, const Matrix& m);

// Incremental span of row vectors, used for closure checks and commutator
// spans: reduce() returns false (and keeps the residual) when v was already
// in the span.
struct SpanBuilder {
  int ambient = 0;
  std::vector<Vec> echelon;      // reduced rows, pivot columns increasing
  std::vector<int> pivot_cols;

  explicit SpanBuilder(int ambient_dim) : ambient(ambient_dim) {}
  int dim() const { return static_cast<int>(echelon.size()); }
  // Reduces v against the span; if a nonzero residual remains it is added.
  // Returns true when v enlarged the span.
  bool add(Vec v);
  // true iff v lies in the current span; *residual receives the reduced vector
  bool contains(Vec v, Vec* residual = nullptr) const;
};

}  // namespace spinline
