#include "filiso/linalg.hpp"

#include <algorithm>

namespace filiso {

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<long>(rows.size());
  cols_ = rows_ ? static_cast<long>(rows.begin()->size()) : 0;
  e_.reserve(static_cast<size_t>(rows_ * cols_));
  for (const auto& r : rows) {
    if (static_cast<long>(r.size()) != cols_)
      throw DimensionError("ragged initializer");
    for (long v : r) e_.emplace_back(v);
  }
}

Mat Mat::identity(long n) {
  Mat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  long r = static_cast<long>(rows.size());
  long c = r ? static_cast<long>(rows.front().size()) : 0;
  Mat m(r, c);
  for (long i = 0; i < r; ++i) {
    if (static_cast<long>(rows[static_cast<size_t>(i)].size()) != c)
      throw DimensionError("ragged rows");
    for (long j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

std::vector<Rat> Mat::row(long i) const {
  std::vector<Rat> v(static_cast<size_t>(cols_));
  for (long j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(i, j);
  return v;
}

void Mat::set_row(long i, const std::vector<Rat>& v) {
  if (static_cast<long>(v.size()) != cols_) throw DimensionError("row size mismatch");
  for (long j = 0; j < cols_; ++j) at(i, j) = v[static_cast<size_t>(j)];
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (long j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += a * o.at(k, j);
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("shape mismatch");
  Mat r(rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("shape mismatch");
  Mat r(rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Mat Mat::scaled(const Rat& c) const {
  Mat r(rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * c;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::vstack(const Mat& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.rows_ == 0 && below.cols_ == 0) return *this;
  if (cols_ != below.cols_) throw DimensionError("vstack width mismatch");
  Mat r(rows_ + below.rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (long i = 0; i < below.rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
  return r;
}

Rat Mat::det() const {
  if (rows_ != cols_) throw DimensionError("determinant of non-square matrix");
  Mat a = *this;
  const long n = rows_;
  Rat d(1);
  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long i = col; i < n; ++i)
      if (a.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (long j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    Rat inv = 1 / a.at(col, col);
    for (long i = col + 1; i < n; ++i) {
      if (a.at(i, col) == 0) continue;
      Rat f = a.at(i, col) * inv;
      for (long j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return d;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw DimensionError("inverse of non-square matrix");
  const long n = rows_;
  Mat a = *this;
  Mat inv = identity(n);
  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long i = col; i < n; ++i)
      if (a.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) throw MathError("singular matrix");
    if (piv != col)
      for (long j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat f = 1 / a.at(col, col);
    for (long j = 0; j < n; ++j) {
      a.at(col, j) *= f;
      inv.at(col, j) *= f;
    }
    for (long i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      Rat g = a.at(i, col);
      for (long j = 0; j < n; ++j) {
        a.at(i, j) -= g * a.at(col, j);
        inv.at(i, j) -= g * inv.at(col, j);
      }
    }
  }
  return inv;
}

Mat Mat::rref(std::vector<long>* pivots) const {
  Mat a = *this;
  long r = 0;
  std::vector<long> piv;
  for (long col = 0; col < cols_ && r < rows_; ++col) {
    long sel = -1;
    for (long i = r; i < rows_; ++i)
      if (a.at(i, col) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (long j = 0; j < cols_; ++j) std::swap(a.at(sel, j), a.at(r, j));
    Rat f = 1 / a.at(r, col);
    for (long j = col; j < cols_; ++j) a.at(r, j) *= f;
    for (long i = 0; i < rows_; ++i) {
      if (i == r || a.at(i, col) == 0) continue;
      Rat g = a.at(i, col);
      for (long j = col; j < cols_; ++j) a.at(i, j) -= g * a.at(r, j);
    }
    piv.push_back(col);
    ++r;
  }
  Mat out(r, cols_);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < cols_; ++j) out.at(i, j) = a.at(i, j);
  if (pivots) *pivots = piv;
  return out;
}

long Mat::rank() const { return rref().rows(); }

Rat Mat::trace() const {
  if (rows_ != cols_) throw DimensionError("trace of non-square matrix");
  Rat t(0);
  for (long i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::vector<Rat> Mat::char_poly() const {
  if (rows_ != cols_) throw DimensionError("char poly of non-square matrix");
  const long n = rows_;
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  c[0] = 1;
  Mat mk = *this;  // M_1 = M
  for (long k = 1; k <= n; ++k) {
    if (k > 1) mk = (*this) * mk;
    c[static_cast<size_t>(k)] = -mk.trace() / Rat(k);
    if (k < n) {
      for (long i = 0; i < n; ++i) mk.at(i, i) += c[static_cast<size_t>(k)];
    }
  }
  return c;
}

Mat Mat::kronecker(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (long k = 0; k < b.rows(); ++k)
        for (long l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

std::vector<Rat> apply_operator(const Mat& op, const std::vector<Rat>& v) {
  if (op.cols() != static_cast<long>(v.size()))
    throw DimensionError("operator/vector size mismatch");
  std::vector<Rat> out(static_cast<size_t>(op.rows()), Rat(0));
  for (long i = 0; i < op.rows(); ++i)
    for (long j = 0; j < op.cols(); ++j) {
      if (op.at(i, j) == 0 || v[static_cast<size_t>(j)] == 0) continue;
      out[static_cast<size_t>(i)] += op.at(i, j) * v[static_cast<size_t>(j)];
    }
  return out;
}

std::vector<Rat> kron_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out;
  out.reserve(a.size() * b.size());
  for (const Rat& x : a)
    for (const Rat& y : b) out.push_back(x * y);
  return out;
}

Subspace Subspace::zero(long ambient) {
  return Subspace(ambient, Mat(0, ambient), {});
}

Subspace Subspace::full(long ambient) {
  std::vector<long> piv(static_cast<size_t>(ambient));
  for (long i = 0; i < ambient; ++i) piv[static_cast<size_t>(i)] = i;
  return Subspace(ambient, Mat::identity(ambient), piv);
}

Subspace Subspace::span(long ambient, const Mat& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient)
    throw DimensionError("span ambient mismatch");
  if (rows.rows() == 0) return zero(ambient);
  std::vector<long> piv;
  Mat b = rows.rref(&piv);
  return Subspace(ambient, std::move(b), std::move(piv));
}

Subspace Subspace::span_rows(long ambient, const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return zero(ambient);
  return span(ambient, Mat::from_rows(rows));
}

bool Subspace::contains(const std::vector<Rat>& v) const {
  if (static_cast<long>(v.size()) != ambient_) throw DimensionError("vector size mismatch");
  std::vector<Rat> w = v;
  for (long i = 0; i < basis_.rows(); ++i) {
    long pcol = pivots_[static_cast<size_t>(i)];
    if (w[static_cast<size_t>(pcol)] == 0) continue;
    Rat f = w[static_cast<size_t>(pcol)];
    for (long j = 0; j < ambient_; ++j) w[static_cast<size_t>(j)] -= f * basis_.at(i, j);
  }
  for (const Rat& x : w)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionError("ambient mismatch");
  for (long i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::vector<Rat> Subspace::coordinates(const std::vector<Rat>& v) const {
  if (static_cast<long>(v.size()) != ambient_) throw DimensionError("vector size mismatch");
  std::vector<Rat> w = v;
  std::vector<Rat> coords(static_cast<size_t>(basis_.rows()), Rat(0));
  for (long i = 0; i < basis_.rows(); ++i) {
    long pcol = pivots_[static_cast<size_t>(i)];
    if (w[static_cast<size_t>(pcol)] == 0) continue;
    Rat f = w[static_cast<size_t>(pcol)];
    coords[static_cast<size_t>(i)] = f;
    for (long j = 0; j < ambient_; ++j) w[static_cast<size_t>(j)] -= f * basis_.at(i, j);
  }
  for (const Rat& x : w)
    if (x != 0) throw MathError("vector outside subspace");
  return coords;
}

Subspace Subspace::coordinates_of(const Subspace& inner) const {
  if (inner.ambient() != ambient_) throw DimensionError("ambient mismatch");
  std::vector<std::vector<Rat>> rows;
  rows.reserve(static_cast<size_t>(inner.dim()));
  for (long i = 0; i < inner.dim(); ++i)
    rows.push_back(coordinates(inner.basis().row(i)));
  return Subspace::span_rows(dim(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("ambient mismatch");
  const long n = a.ambient();
  // Zassenhaus: rows [A|A] and [B|0]; rows of the echelon form whose left
  // half vanishes carry a basis of the intersection in the right half.
  Mat big(a.dim() + b.dim(), 2 * n);
  for (long i = 0; i < a.dim(); ++i)
    for (long j = 0; j < n; ++j) {
      big.at(i, j) = a.basis().at(i, j);
      big.at(i, n + j) = a.basis().at(i, j);
    }
  for (long i = 0; i < b.dim(); ++i)
    for (long j = 0; j < n; ++j) big.at(a.dim() + i, j) = b.basis().at(i, j);
  Mat ech = big.rref();
  std::vector<std::vector<Rat>> rows;
  for (long i = 0; i < ech.rows(); ++i) {
    bool left_zero = true;
    for (long j = 0; j < n && left_zero; ++j)
      if (ech.at(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    std::vector<Rat> r(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) r[static_cast<size_t>(j)] = ech.at(i, n + j);
    rows.push_back(std::move(r));
  }
  return Subspace::span_rows(n, rows);
}

Subspace sum_subspaces(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("ambient mismatch");
  return Subspace::span(a.ambient(), a.basis().vstack(b.basis()));
}

Subspace tensor_subspace(const Subspace& a, const Subspace& b) {
  const long n = a.ambient() * b.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  return Subspace::span(n, Mat::kronecker(a.basis(), b.basis()));
}

bool is_invariant(const Mat& op, const Subspace& w) {
  for (long i = 0; i < w.dim(); ++i)
    if (!w.contains(apply_operator(op, w.basis().row(i)))) return false;
  return true;
}

Mat restrict_operator(const Mat& op, const Subspace& w) {
  if (op.rows() != op.cols() || op.cols() != w.ambient())
    throw DimensionError("operator/subspace mismatch");
  const long d = w.dim();
  Mat r(d, d);
  for (long i = 0; i < d; ++i) {
    std::vector<Rat> img = apply_operator(op, w.basis().row(i));
    std::vector<Rat> coords;
    try {
      coords = w.coordinates(img);
    } catch (const MathError&) {
      throw MathError("subspace not stable");
    }
    // column convention: op(w_i) = sum_j r(j,i) w_j
    for (long j = 0; j < d; ++j) r.at(j, i) = coords[static_cast<size_t>(j)];
  }
  return r;
}

QuotientModel::QuotientModel(const Subspace& w)
    : ambient_(w.ambient()), wbasis_(w.basis()), wpivots_(w.pivots()) {
  std::vector<char> is_piv(static_cast<size_t>(ambient_), 0);
  for (long p : wpivots_) is_piv[static_cast<size_t>(p)] = 1;
  for (long j = 0; j < ambient_; ++j)
    if (!is_piv[static_cast<size_t>(j)]) keep_.push_back(j);
}

std::vector<Rat> QuotientModel::project(const std::vector<Rat>& v) const {
  if (static_cast<long>(v.size()) != ambient_) throw DimensionError("vector size mismatch");
  std::vector<Rat> w = v;
  for (long i = 0; i < wbasis_.rows(); ++i) {
    long pcol = wpivots_[static_cast<size_t>(i)];
    if (w[static_cast<size_t>(pcol)] == 0) continue;
    Rat f = w[static_cast<size_t>(pcol)];
    for (long j = 0; j < ambient_; ++j) w[static_cast<size_t>(j)] -= f * wbasis_.at(i, j);
  }
  std::vector<Rat> out(keep_.size());
  for (size_t k = 0; k < keep_.size(); ++k) out[k] = w[static_cast<size_t>(keep_[k])];
  return out;
}

Mat QuotientModel::project_rows(const Mat& rows) const {
  Mat out(rows.rows(), dim());
  for (long i = 0; i < rows.rows(); ++i) {
    std::vector<Rat> p = project(rows.row(i));
    out.set_row(i, p);
  }
  return out;
}

Subspace QuotientModel::project_subspace(const Subspace& s) const {
  if (s.ambient() != ambient_) throw DimensionError("ambient mismatch");
  if (s.dim() == 0) return Subspace::zero(dim());
  return Subspace::span(dim(), project_rows(s.basis()));
}

std::vector<Rat> QuotientModel::section(const std::vector<Rat>& q) const {
  if (static_cast<long>(q.size()) != dim()) throw DimensionError("quotient vector size mismatch");
  std::vector<Rat> out(static_cast<size_t>(ambient_), Rat(0));
  for (size_t k = 0; k < keep_.size(); ++k) out[static_cast<size_t>(keep_[k])] = q[k];
  return out;
}

Mat QuotientModel::section_rows_matrix() const {
  Mat s(dim(), ambient_);
  for (long k = 0; k < dim(); ++k) s.at(k, keep_[static_cast<size_t>(k)]) = 1;
  return s;
}

Mat QuotientModel::push_operator(const Mat& op) const {
  if (op.rows() != ambient_ || op.cols() != ambient_)
    throw DimensionError("operator size mismatch");
  const long q = dim();
  Mat r(q, q);
  for (long k = 0; k < q; ++k) {
    std::vector<Rat> e(static_cast<size_t>(ambient_), Rat(0));
    e[static_cast<size_t>(keep_[static_cast<size_t>(k)])] = 1;
    std::vector<Rat> img = project(apply_operator(op, e));
    for (long j = 0; j < q; ++j) r.at(j, k) = img[static_cast<size_t>(j)];
  }
  return r;
}

}  // namespace filiso
