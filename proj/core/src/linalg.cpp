#include "spinline/linalg.hpp"

#include <algorithm>

namespace spinline {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols) bad_arg("from_rows: ragged rows");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const GaussianRational& v) { return v.is_zero(); });
}

bool Matrix::is_real() const {
  return std::all_of(a.begin(), a.end(), [](const GaussianRational& v) { return v.is_real(); });
}

Matrix Matrix::transpose() const {
  Matrix m(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::conj_transpose() const {
  Matrix m(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

GaussianRational Matrix::trace() const {
  if (!is_square()) bad_arg("trace: non-square matrix");
  GaussianRational t;
  for (int i = 0; i < rows; ++i) t += at(i, i);
  return t;
}

Vec Matrix::row(int i) const {
  Vec v(cols);
  for (int j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::kron(const Matrix& b) const {
  Matrix m(rows * b.rows, cols * b.cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows; ++k)
        for (int l = 0; l < b.cols; ++l) {
          if (b.at(k, l).is_zero()) continue;
          m.at(i * b.rows + k, j * b.cols + l) = at(i, j) * b.at(k, l);
        }
    }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows != o.rows || cols != o.cols) bad_arg("matrix +: shape mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows != o.rows || cols != o.cols) bad_arg("matrix -: shape mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
  return *this;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) bad_arg("matrix *: shape mismatch");
  Matrix m(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const GaussianRational& v = x.at(i, k);
      if (v.is_zero()) continue;  // generators are sparse; skipping zeros matters
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j).is_zero()) continue;
        m.at(i, j) += v * y.at(k, j);
      }
    }
  return m;
}

Matrix operator*(const GaussianRational& c, Matrix m) {
  for (auto& v : m.a) v *= c;
  return m;
}

Matrix bracket(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Vec act(const Matrix& m, const Vec& v) {
  if (m.cols != static_cast<int>(v.size())) bad_arg("apply: shape mismatch");
  Vec out(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += m.at(i, j) * v[j];
    }
  return out;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

RrefResult rref(Matrix m) {
  RrefResult res;
  int lead_row = 0;
  for (int col = 0; col < m.cols && lead_row < m.rows; ++col) {
    int piv = -1;
    for (int i = lead_row; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead_row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(lead_row, j));
    GaussianRational inv = GaussianRational(1) / m.at(lead_row, col);
    for (int j = col; j < m.cols; ++j) m.at(lead_row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == lead_row || m.at(i, col).is_zero()) continue;
      GaussianRational f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(lead_row, j);
    }
    res.pivots.push_back(col);
    ++lead_row;
  }
  res.rank = lead_row;
  res.mat = std::move(m);
  return res;
}

Subspace Subspace::row_span(Matrix rows) {
  int ambient = rows.cols;
  RrefResult r = rref(std::move(rows));
  Matrix basis(r.rank, ambient);
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < ambient; ++j) basis.at(i, j) = r.mat.at(i, j);
  return {ambient, std::move(basis)};
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> p;
  for (int i = 0; i < basis.rows; ++i)
    for (int j = 0; j < basis.cols; ++j)
      if (!basis.at(i, j).is_zero()) {
        p.push_back(j);
        break;
      }
  return p;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient) bad_arg("coordinates: ambient mismatch");
  std::vector<int> piv = pivots();
  Vec coord(basis.rows);
  Vec rem = v;
  for (int i = 0; i < basis.rows; ++i) {
    coord[i] = rem[piv[i]];
    if (coord[i].is_zero()) continue;
    for (int j = 0; j < ambient; ++j) rem[j] -= coord[i] * basis.at(i, j);
  }
  if (!is_zero_vec(rem)) return std::nullopt;
  return coord;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient != ambient) bad_arg("contains: ambient mismatch");
  for (int i = 0; i < other.basis.rows; ++i)
    if (!contains(other.basis.row(i))) return false;
  return true;
}

bool subspace_less(const Subspace& x, const Subspace& y) {
  if (x.ambient != y.ambient) return x.ambient < y.ambient;
  if (x.dim() != y.dim()) return x.dim() < y.dim();
  for (std::size_t k = 0; k < x.basis.a.size(); ++k) {
    int c = cmp(x.basis.a[k], y.basis.a[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols);
    v[f] = GaussianRational(1);
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.mat.at(i, f);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Subspace::zero(m.cols);
  return Subspace::row_span(Matrix::from_rows(rows));
}

Subspace intersect(const Subspace& x, const Subspace& y) {
  if (x.ambient != y.ambient) bad_arg("intersect: ambient mismatch");
  if (x.is_zero() || y.is_zero()) return Subspace::zero(x.ambient);
  // columns are the basis vectors of x followed by the negated basis of y;
  // kernel elements (u, v) satisfy sum u_i x_i = sum v_j y_j
  Matrix m(x.ambient, x.dim() + y.dim());
  for (int i = 0; i < x.dim(); ++i)
    for (int k = 0; k < x.ambient; ++k) m.at(k, i) = x.basis.at(i, k);
  for (int j = 0; j < y.dim(); ++j)
    for (int k = 0; k < x.ambient; ++k) m.at(k, x.dim() + j) = -y.basis.at(j, k);
  Subspace ker = kernel(m);
  if (ker.is_zero()) return Subspace::zero(x.ambient);
  std::vector<Vec> rows;
  for (int t = 0; t < ker.dim(); ++t) {
    Vec w(x.ambient);
    for (int i = 0; i < x.dim(); ++i) {
      const GaussianRational& u = ker.basis.at(t, i);
      if (u.is_zero()) continue;
      for (int k = 0; k < x.ambient; ++k) w[k] += u * x.basis.at(i, k);
    }
    rows.push_back(std::move(w));
  }
  return Subspace::row_span(Matrix::from_rows(rows));
}

Subspace subspace_sum(const Subspace& x, const Subspace& y) {
  if (x.ambient != y.ambient) bad_arg("sum: ambient mismatch");
  std::vector<Vec> rows;
  for (int i = 0; i < x.dim(); ++i) rows.push_back(x.basis.row(i));
  for (int i = 0; i < y.dim(); ++i) rows.push_back(y.basis.row(i));
  if (rows.empty()) return Subspace::zero(x.ambient);
  return Subspace::row_span(Matrix::from_rows(rows));
}

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols != s.ambient) bad_arg("image: ambient mismatch");
  if (s.is_zero()) return Subspace::zero(m.rows);
  std::vector<Vec> rows;
  for (int i = 0; i < s.dim(); ++i) rows.push_back(act(m, s.basis.row(i)));
  return Subspace::row_span(Matrix::from_rows(rows));
}

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
  if (a.rows != static_cast<int>(b.size())) bad_arg("solve_linear: shape mismatch");
  Matrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  RrefResult r = rref(std::move(aug));
  Vec x(a.cols);
  for (int i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == a.cols) return std::nullopt;  // row (0 .. 0 | 1)
    x[r.pivots[i]] = r.mat.at(i, a.cols);
  }
  return x;
}

Poly char_poly(const Matrix& m) {
  if (!m.is_square()) bad_arg("char_poly: non-square matrix");
  int n = m.rows;
  std::vector<GaussianRational> c(n + 1);
  c[n] = GaussianRational(1);
  Matrix aux = m;
  if (n >= 1) c[n - 1] = -aux.trace();
  for (int k = 2; k <= n; ++k) {
    Matrix shifted = aux;
    for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
    aux = m * shifted;
    c[n - k] = -(aux.trace() / GaussianRational(k));
  }
  return Poly::from_coeffs(std::move(c));
}

Matrix poly_at_matrix(const Poly& p, const Matrix& m) {
  if (!m.is_square()) bad_arg("poly_at_matrix: non-square matrix");
  Matrix acc(m.rows, m.rows);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    for (int i = 0; i < m.rows; ++i) acc.at(i, i) += p.c[k];
  }
  return acc;
}

bool SpanBuilder::add(Vec v) {
  if (static_cast<int>(v.size()) != ambient) bad_arg("SpanBuilder: ambient mismatch");
  Vec residual;
  if (contains(std::move(v), &residual)) return false;
  // normalize the new row on its pivot and insert keeping pivot order
  int piv = -1;
  for (int j = 0; j < ambient; ++j)
    if (!residual[j].is_zero()) {
      piv = j;
      break;
    }
  GaussianRational inv = GaussianRational(1) / residual[piv];
  for (auto& x : residual) x *= inv;
  // back-substitute into existing rows
  for (std::size_t i = 0; i < echelon.size(); ++i) {
    GaussianRational f = echelon[i][piv];
    if (f.is_zero()) continue;
    for (int j = 0; j < ambient; ++j) echelon[i][j] -= f * residual[j];
  }
  auto pos = std::lower_bound(pivot_cols.begin(), pivot_cols.end(), piv);
  auto idx = pos - pivot_cols.begin();
  pivot_cols.insert(pos, piv);
  echelon.insert(echelon.begin() + idx, std::move(residual));
  return true;
}

bool SpanBuilder::contains(Vec v, Vec* residual) const {
  for (std::size_t i = 0; i < echelon.size(); ++i) {
    GaussianRational f = v[pivot_cols[i]];
    if (f.is_zero()) continue;
    for (int j = 0; j < ambient; ++j) v[j] -= f * echelon[i][j];
  }
  bool inside = is_zero_vec(v);
  if (residual) *residual = std::move(v);
  return inside;
}

}  // namespace spinline
