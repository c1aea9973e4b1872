#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace ved {

using cplx = std::complex<double>;

// Anything the eigensolver can iterate on: y = H x plus a norm scale.
class LinearOp {
 public:
  virtual ~LinearOp() = default;
  virtual std::size_t dim() const = 0;
  virtual void apply(const cplx* x, cplx* y) const = 0;
  // Upper bound estimate of ||H||, used to scale residual tolerances.
  virtual double norm_estimate() const = 0;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const {
    Eigen::VectorXcd y(x.size());
    apply(x.data(), y.data());
    return y;
  }
};

// Compressed-row complex Hermitian matrix storing both triangles.
class SparseHermitian final : public LinearOp {
 public:
  struct Entry {
    std::uint32_t row;
    std::uint32_t col;
    cplx value;
  };

  SparseHermitian() = default;

  // Sums duplicate (row, col) entries; drops exact zeros.
  static SparseHermitian from_entries(std::size_t dim,
                                      std::vector<Entry> entries);

  std::size_t dim() const override { return dim_; }
  void apply(const cplx* x, cplx* y) const override;
  double norm_estimate() const override { return inf_norm_; }

  std::size_t nnz() const { return col_.size(); }
  double inf_norm() const { return inf_norm_; }

  // max |A(r,c) - conj(A(c,r))| over stored entries, relative to inf norm.
  double hermiticity_defect() const;

  Eigen::MatrixXcd dense() const;

  template <typename F>  // F(row, col, value)
  void for_each(F&& f) const {
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
        f(r, static_cast<std::size_t>(col_[k]), val_[k]);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::uint32_t> col_;
  std::vector<cplx> val_;
  double inf_norm_ = 0.0;
};

// Matrix-free operator defined by a row-filling callback; used when an
// explicit matrix would blow the memory budget.
class CallbackOp final : public LinearOp {
 public:
  // fill(row, emit) must call emit(col, value) for each entry of `row`.
  using RowFill = std::function<void(
      std::size_t, const std::function<void(std::size_t, cplx)>&)>;

  CallbackOp(std::size_t dim, RowFill fill, double norm_estimate)
      : dim_(dim), fill_(std::move(fill)), norm_(norm_estimate) {}

  std::size_t dim() const override { return dim_; }
  double norm_estimate() const override { return norm_; }
  void apply(const cplx* x, cplx* y) const override;

 private:
  std::size_t dim_;
  RowFill fill_;
  double norm_;
};

}  // namespace ved
