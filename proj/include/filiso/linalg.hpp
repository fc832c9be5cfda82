#pragma once

#include <initializer_list>
#include <vector>

#include "filiso/scalars.hpp"

namespace filiso {

// Dense exact rational matrix, row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative dimension");
    e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rat(0));
  }
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat identity(long n);
  static Mat from_rows(const std::vector<std::vector<Rat>>& rows);

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Rat& at(long i, long j) { return e_[static_cast<size_t>(i * cols_ + j)]; }
  const Rat& at(long i, long j) const {
    return e_[static_cast<size_t>(i * cols_ + j)];
  }

  std::vector<Rat> row(long i) const;
  void set_row(long i, const std::vector<Rat>& v);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const;
  Mat scaled(const Rat& c) const;
  Mat transpose() const;
  Mat vstack(const Mat& below) const;

  Rat det() const;
  Mat inverse() const;  // MathError("singular matrix") if not invertible
  long rank() const;

  // Reduced row echelon form; pivot columns appended to *pivots if given.
  Mat rref(std::vector<long>* pivots = nullptr) const;

  // Characteristic polynomial of a square matrix, coefficients in
  // descending degree with leading 1 (Faddeev-LeVerrier).
  std::vector<Rat> char_poly() const;

  Rat trace() const;

  static Mat kronecker(const Mat& a, const Mat& b);

 private:
  long rows_, cols_;
  std::vector<Rat> e_;
};

// Image of a row vector under an operator acting on column vectors.
std::vector<Rat> apply_operator(const Mat& op, const std::vector<Rat>& v);

std::vector<Rat> kron_vec(const std::vector<Rat>& a, const std::vector<Rat>& b);

// A subspace of Q^n in canonical form: basis rows in reduced row echelon
// form, so equality of subspaces is structural equality.
class Subspace {
 public:
  static Subspace zero(long ambient);
  static Subspace full(long ambient);
  static Subspace span(long ambient, const Mat& rows);
  static Subspace span_rows(long ambient, const std::vector<std::vector<Rat>>& rows);

  long ambient() const { return ambient_; }
  long dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  std::vector<long> pivots() const { return pivots_; }

  bool contains(const std::vector<Rat>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  // Coordinates of v in the canonical basis; MathError if v is outside.
  std::vector<Rat> coordinates(const std::vector<Rat>& v) const;

  // Rewrites a subspace of the ambient contained in *this in coordinates
  // relative to the canonical basis of *this.
  Subspace coordinates_of(const Subspace& inner) const;

 private:
  Subspace(long ambient, Mat rref_basis, std::vector<long> pivots)
      : ambient_(ambient), basis_(std::move(rref_basis)), pivots_(std::move(pivots)) {}
  long ambient_;
  Mat basis_;
  std::vector<long> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum_subspaces(const Subspace& a, const Subspace& b);
Subspace tensor_subspace(const Subspace& a, const Subspace& b);

// Matrix of op on the invariant subspace w, in w's canonical basis,
// acting on column coordinate vectors.
// Throws MathError("subspace not stable") when op does not preserve w.
Mat restrict_operator(const Mat& op, const Subspace& w);

bool is_invariant(const Mat& op, const Subspace& w);

// Coordinate model of V/W on the non-pivot coordinates of W: the projection
// reduces a vector modulo W (clearing the pivot coordinates) and keeps the
// rest.  Deterministic, so quotient constructions are canonical.
class QuotientModel {
 public:
  explicit QuotientModel(const Subspace& w);

  long ambient() const { return ambient_; }
  long dim() const { return static_cast<long>(keep_.size()); }

  std::vector<Rat> project(const std::vector<Rat>& v) const;
  Mat project_rows(const Mat& rows) const;
  Subspace project_subspace(const Subspace& s) const;

  // Canonical section: quotient coordinates back into V with zeros at the
  // pivot columns of W.
  std::vector<Rat> section(const std::vector<Rat>& q) const;
  Mat section_rows_matrix() const;  // dim x ambient

  // The induced operator on the quotient (column action); op must leave W
  // invariant.
  Mat push_operator(const Mat& op) const;

 private:
  long ambient_;
  Mat wbasis_;                // RREF basis of W
  std::vector<long> wpivots_;
  std::vector<long> keep_;    // non-pivot columns
};

}  // namespace filiso
