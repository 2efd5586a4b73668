#pragma once

#include <cstddef>
#include <vector>

#include "homcsa/scalar.hpp"

namespace homcsa {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
bool is_zero(const Vector& v);

/// Dense matrix acting on column vectors. Entry (i, j) is the coefficient of
/// output basis vector i in the image of input basis vector j, so a twist with
/// α(e_j) = Σ_i d_j^i e_i is stored with at(i, j) = d_j^i.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t rows, std::size_t cols);
  /// `entries` is row-major; throws InputError if its length is wrong.
  LinearMap(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static LinearMap identity(std::size_t n);
  static LinearMap zero(std::size_t rows, std::size_t cols) { return LinearMap(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return data_; }

  Vector apply(const Vector& v) const;
  Vector operator()(const Vector& v) const { return apply(v); }
  Vector column(std::size_t j) const;
  bool is_zero() const;

  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator*(const Scalar& s, const LinearMap& a);
  friend bool operator==(const LinearMap& a, const LinearMap& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// f∘g. Throws InputError unless f.cols() == g.rows().
LinearMap mat_compose(const LinearMap& f, const LinearMap& g);

/// Kronecker product on the left-major tensor basis: row (i,p) = i*g.rows()+p.
LinearMap kron(const LinearMap& f, const LinearMap& g);

/// Permutation of the n² tensor basis sending (i,j) to (j,i).
LinearMap tensor_swap(std::size_t n);

/// Transpose; the adjoint under ⟨e_i, e_j*⟩ = δ_ij.
LinearMap dual_map(const LinearMap& f);

LinearMap block_diagonal(const LinearMap& a, const LinearMap& b);

/// out[k] = Σ_{i,j} x[i] y[j] c[i][j][k].
class BilinearTensor {
 public:
  BilinearTensor() = default;
  BilinearTensor(std::size_t dimLeft, std::size_t dimRight, std::size_t dimOut);
  BilinearTensor(std::size_t dimLeft, std::size_t dimRight, std::size_t dimOut,
                 std::vector<Scalar> entries);

  std::size_t dim_left() const { return dl_; }
  std::size_t dim_right() const { return dr_; }
  std::size_t dim_out() const { return do_; }

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dr_ + j) * do_ + k];
  }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dr_ + j) * do_ + k]; }
  const std::vector<Scalar>& entries() const { return data_; }

  friend bool operator==(const BilinearTensor& a, const BilinearTensor& b) = default;

 private:
  std::size_t dl_ = 0, dr_ = 0, do_ = 0;
  std::vector<Scalar> data_;
};

Vector bilinear_apply(const BilinearTensor& t, const Vector& x, const Vector& y);

/// A linear family x ↦ Σ_i x_i mats[i] of square modDim matrices.
class ActionTensor {
 public:
  ActionTensor() = default;
  ActionTensor(std::size_t algDim, std::size_t modDim);  // all zero
  ActionTensor(std::size_t modDim, std::vector<LinearMap> mats);

  std::size_t alg_dim() const { return mats_.size(); }
  std::size_t mod_dim() const { return mod_; }
  const LinearMap& operator[](std::size_t i) const { return mats_[i]; }
  LinearMap& operator[](std::size_t i) { return mats_[i]; }
  const std::vector<LinearMap>& mats() const { return mats_; }

  /// Σ_i x[i] mats[i].
  LinearMap of(const Vector& x) const;

  friend ActionTensor operator+(const ActionTensor& a, const ActionTensor& b);
  friend ActionTensor operator-(const ActionTensor& a, const ActionTensor& b);
  friend bool operator==(const ActionTensor& a, const ActionTensor& b) = default;

 private:
  std::size_t mod_ = 0;
  std::vector<LinearMap> mats_;
};

/// Member-wise dual_map.
ActionTensor transposed(const ActionTensor& a);

}  // namespace homcsa
