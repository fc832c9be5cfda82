#include "filiso/isocrystal.hpp"

#include <algorithm>
#include <map>

namespace filiso {

Isocrystal::Isocrystal(Int p, Mat phi, std::optional<SplitData> split)
    : p_(std::move(p)), phi_(std::move(phi)), split_(std::move(split)) {
  require_prime(p_);
  if (phi_.rows() != phi_.cols()) throw DimensionError("phi must be square");
  if (phi_.rows() < 1) throw DimensionError("dim 0 isocrystal excluded");
  if (phi_.det() == 0) throw MathError("singular phi");
  if (split_) {
    const long n = dim();
    if (static_cast<long>(split_->eigvals.size()) != n ||
        split_->eigbasis.rows() != n || split_->eigbasis.cols() != n)
      throw DimensionError("split data size mismatch");
    for (long i = 0; i < n; ++i) {
      if (split_->eigvals[static_cast<size_t>(i)] == 0)
        throw MathError("zero eigenvalue");
      for (long j = i + 1; j < n; ++j)
        if (split_->eigvals[static_cast<size_t>(i)] == split_->eigvals[static_cast<size_t>(j)])
          throw MathError("repeated eigenvalues");
    }
    if (split_->eigbasis.det() == 0) throw MathError("eigenbasis is singular");
    for (long i = 0; i < n; ++i) {
      std::vector<Rat> v = split_->eigbasis.row(i);
      std::vector<Rat> img = apply_operator(phi_, v);
      for (long j = 0; j < n; ++j)
        if (img[static_cast<size_t>(j)] != split_->eigvals[static_cast<size_t>(i)] * v[static_cast<size_t>(j)])
          throw MathError("eigenvector equation fails");
    }
  }
}

const SplitData& Isocrystal::split() const {
  if (!split_) throw ModelError("slope decomposition requires split model");
  return *split_;
}

std::optional<Rat> Isocrystal::scalar_value() const {
  const Rat& c = phi_.at(0, 0);
  for (long i = 0; i < dim(); ++i)
    for (long j = 0; j < dim(); ++j) {
      if (i == j && phi_.at(i, j) != c) return std::nullopt;
      if (i != j && phi_.at(i, j) != 0) return std::nullopt;
    }
  return c;
}

std::vector<Rat> Isocrystal::line_slopes() const {
  const SplitData& sd = split();
  std::vector<Rat> out;
  out.reserve(sd.eigvals.size());
  for (const Rat& ev : sd.eigvals) out.emplace_back(vp(ev, p_));
  return out;
}

const Graduation& NewtonData::graduation() const {
  if (!grad) throw ModelError("slope decomposition requires split model");
  return *grad;
}
const Filtration& NewtonData::filtration() const {
  if (!fil) throw ModelError("slope decomposition requires split model");
  return *fil;
}
const Filtration& NewtonData::filtration_opposed() const {
  if (!fil_opposed) throw ModelError("slope decomposition requires split model");
  return *fil_opposed;
}

NewtonData newton(const Isocrystal& iso) {
  NewtonData nd;
  std::vector<Rat> asc = newton_slopes(iso.phi().char_poly(), iso.p());
  nd.slopes = TypeVector(asc);
  if (!iso.is_split()) return nd;

  const long n = iso.dim();
  std::vector<Rat> lams = iso.line_slopes();
  std::map<Rat, std::vector<std::vector<Rat>>> by_slope;
  for (long i = 0; i < n; ++i)
    by_slope[lams[static_cast<size_t>(i)]].push_back(iso.split().eigbasis.row(i));
  std::vector<std::pair<Rat, Subspace>> pieces;
  for (const auto& [w, rows] : by_slope)
    pieces.emplace_back(w, Subspace::span_rows(n, rows));
  nd.grad = Graduation::from_pieces(n, pieces);
  nd.fil = fil_of_grad(*nd.grad);
  nd.fil_opposed = fil_of_grad(iota(*nd.grad));
  return nd;
}

std::vector<Subspace> invariant_subspaces(const Isocrystal& iso, long bound) {
  const SplitData& sd = iso.split();
  const long n = iso.dim();
  if (n > bound) throw ModelError("enumeration bound exceeded");
  std::vector<Subspace> out;
  out.reserve(static_cast<size_t>(1) << n);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<std::vector<Rat>> rows;
    for (long i = 0; i < n; ++i)
      if (mask & (1ul << i)) rows.push_back(sd.eigbasis.row(i));
    out.push_back(Subspace::span_rows(n, rows));
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (long i = 0; i < a.dim(); ++i)
      for (long j = 0; j < a.ambient(); ++j)
        if (a.basis().at(i, j) != b.basis().at(i, j))
          return a.basis().at(i, j) < b.basis().at(i, j);
    return false;
  });
  return out;
}

Rat deg_newton_on(const Isocrystal& iso, const Subspace& w) {
  if (w.dim() == 0) return Rat(0);
  Mat r = restrict_operator(iso.phi(), w);
  return Rat(vp(r.det(), iso.p()));
}

TensorIso tensor_isocrystal(const Isocrystal& a, const Isocrystal& b) {
  if (a.p() != b.p()) throw MathError("prime mismatch");
  Mat phi = Mat::kronecker(a.phi(), b.phi());
  if (!a.is_split() || !b.is_split())
    return {Isocrystal(a.p(), std::move(phi)), false};

  std::vector<Rat> vals;
  vals.reserve(static_cast<size_t>(a.dim() * b.dim()));
  for (long i = 0; i < a.dim(); ++i)
    for (long j = 0; j < b.dim(); ++j)
      vals.push_back(a.split().eigvals[static_cast<size_t>(i)] *
                     b.split().eigvals[static_cast<size_t>(j)]);
  std::vector<Rat> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1])
      return {Isocrystal(a.p(), std::move(phi)), true};

  SplitData sd{std::move(vals), Mat::kronecker(a.split().eigbasis, b.split().eigbasis)};
  return {Isocrystal(a.p(), std::move(phi), std::move(sd)), false};
}

}  // namespace filiso
