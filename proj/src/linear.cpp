#include "homcsa/linear.hpp"

#include <string>

#include "homcsa/errors.hpp"

namespace homcsa {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// ---- LinearMap -------------------------------------------------------------

LinearMap::LinearMap(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

LinearMap::LinearMap(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(data_.size() == rows * cols, "matrix entry count does not match its shape");
}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vector LinearMap::apply(const Vector& v) const {
  require(v.size() == cols_, "matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !at(i, j).is_zero()) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Vector LinearMap::column(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

bool LinearMap::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch in sum");
  LinearMap out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch in difference");
  LinearMap out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

LinearMap operator*(const Scalar& s, const LinearMap& a) {
  LinearMap out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = s * a.data_[i];
  return out;
}

LinearMap mat_compose(const LinearMap& f, const LinearMap& g) {
  require(f.cols() == g.rows(), "cannot compose " + std::to_string(f.rows()) + "x" +
                                    std::to_string(f.cols()) + " with " +
                                    std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
  LinearMap out(f.rows(), g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t k = 0; k < f.cols(); ++k) {
      const Scalar& fik = f.at(i, k);
      if (fik.is_zero()) continue;
      for (std::size_t j = 0; j < g.cols(); ++j)
        if (!g.at(k, j).is_zero()) out.at(i, j) += fik * g.at(k, j);
    }
  return out;
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
  const std::size_t gr = g.rows(), gc = g.cols();
  LinearMap out(f.rows() * gr, f.cols() * gc);
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Scalar& fij = f.at(i, j);
      if (fij.is_zero()) continue;
      for (std::size_t p = 0; p < gr; ++p)
        for (std::size_t q = 0; q < gc; ++q) out.at(i * gr + p, j * gc + q) = fij * g.at(p, q);
    }
  return out;
}

LinearMap tensor_swap(std::size_t n) {
  LinearMap out(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(j * n + i, i * n + j) = 1;
  return out;
}

LinearMap dual_map(const LinearMap& f) {
  LinearMap out(f.cols(), f.rows());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) out.at(j, i) = f.at(i, j);
  return out;
}

LinearMap block_diagonal(const LinearMap& a, const LinearMap& b) {
  LinearMap out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

// ---- BilinearTensor ----------------------------------------------------------

BilinearTensor::BilinearTensor(std::size_t dimLeft, std::size_t dimRight, std::size_t dimOut)
    : dl_(dimLeft), dr_(dimRight), do_(dimOut), data_(dimLeft * dimRight * dimOut) {}

BilinearTensor::BilinearTensor(std::size_t dimLeft, std::size_t dimRight, std::size_t dimOut,
                               std::vector<Scalar> entries)
    : dl_(dimLeft), dr_(dimRight), do_(dimOut), data_(std::move(entries)) {
  require(data_.size() == dl_ * dr_ * do_, "tensor entry count does not match its shape");
}

Vector bilinear_apply(const BilinearTensor& t, const Vector& x, const Vector& y) {
  require(x.size() == t.dim_left() && y.size() == t.dim_right(),
          "bilinear_apply: argument length mismatch");
  Vector out(t.dim_out());
  for (std::size_t i = 0; i < t.dim_left(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < t.dim_right(); ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < t.dim_out(); ++k)
        if (!t.at(i, j, k).is_zero()) out[k] += xy * t.at(i, j, k);
    }
  }
  return out;
}

// ---- ActionTensor ------------------------------------------------------------

ActionTensor::ActionTensor(std::size_t algDim, std::size_t modDim)
    : mod_(modDim), mats_(algDim, LinearMap(modDim, modDim)) {}

ActionTensor::ActionTensor(std::size_t modDim, std::vector<LinearMap> mats)
    : mod_(modDim), mats_(std::move(mats)) {
  for (const auto& m : mats_)
    require(m.rows() == mod_ && m.cols() == mod_, "action matrix is not modDim x modDim");
}

LinearMap ActionTensor::of(const Vector& x) const {
  require(x.size() == mats_.size(), "action argument length mismatch");
  LinearMap out(mod_, mod_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out = out + x[i] * mats_[i];
  return out;
}

ActionTensor operator+(const ActionTensor& a, const ActionTensor& b) {
  require(a.alg_dim() == b.alg_dim() && a.mod_ == b.mod_, "action shape mismatch");
  ActionTensor out(a.alg_dim(), a.mod_);
  for (std::size_t i = 0; i < a.alg_dim(); ++i) out.mats_[i] = a.mats_[i] + b.mats_[i];
  return out;
}

ActionTensor operator-(const ActionTensor& a, const ActionTensor& b) {
  require(a.alg_dim() == b.alg_dim() && a.mod_ == b.mod_, "action shape mismatch");
  ActionTensor out(a.alg_dim(), a.mod_);
  for (std::size_t i = 0; i < a.alg_dim(); ++i) out.mats_[i] = a.mats_[i] - b.mats_[i];
  return out;
}

ActionTensor transposed(const ActionTensor& a) {
  std::vector<LinearMap> mats;
  mats.reserve(a.alg_dim());
  for (const auto& m : a.mats()) mats.push_back(dual_map(m));
  return ActionTensor(a.mod_dim(), std::move(mats));
}

}  // namespace homcsa
