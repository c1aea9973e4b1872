#include "ved/sparse.hpp"

#include <algorithm>
#include <cmath>

namespace ved {

SparseHermitian SparseHermitian::from_entries(std::size_t dim,
                                              std::vector<Entry> entries) {
  SparseHermitian m;
  m.dim_ = dim;
  m.row_ptr_.assign(dim + 1, 0);
  for (const Entry& e : entries) ++m.row_ptr_[e.row + 1];
  for (std::size_t r = 0; r < dim; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];

  std::vector<std::uint32_t> col(entries.size());
  std::vector<cplx> val(entries.size());
  {
    std::vector<std::size_t> cursor(m.row_ptr_.begin(), m.row_ptr_.end() - 1);
    for (const Entry& e : entries) {
      const std::size_t k = cursor[e.row]++;
      col[k] = e.col;
      val[k] = e.value;
    }
  }
  entries.clear();
  entries.shrink_to_fit();

  // per-row sort by column, merge duplicates, drop zeros
  m.col_.reserve(col.size());
  m.val_.reserve(val.size());
  std::vector<std::size_t> new_row_ptr(dim + 1, 0);
  std::vector<std::size_t> perm;
  for (std::size_t r = 0; r < dim; ++r) {
    const std::size_t lo = m.row_ptr_[r], hi = m.row_ptr_[r + 1];
    perm.resize(hi - lo);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = lo + i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return col[a] < col[b]; });
    std::size_t i = 0;
    while (i < perm.size()) {
      const std::uint32_t c = col[perm[i]];
      cplx sum = 0.0;
      for (; i < perm.size() && col[perm[i]] == c; ++i) sum += val[perm[i]];
      if (sum != cplx{0.0, 0.0}) {
        m.col_.push_back(c);
        m.val_.push_back(sum);
      }
    }
    new_row_ptr[r + 1] = m.col_.size();
  }
  m.row_ptr_ = std::move(new_row_ptr);

  double inf = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    double row_sum = 0.0;
    for (std::size_t k = m.row_ptr_[r]; k < m.row_ptr_[r + 1]; ++k)
      row_sum += std::abs(m.val_[k]);
    inf = std::max(inf, row_sum);
  }
  m.inf_norm_ = inf;
  return m;
}

void SparseHermitian::apply(const cplx* x, cplx* y) const {
  for (std::size_t r = 0; r < dim_; ++r) {
    cplx acc = 0.0;
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      acc += val_[k] * x[col_[k]];
    y[r] = acc;
  }
}

double SparseHermitian::hermiticity_defect() const {
  // A - A^dag probed through a dense accumulation per row pair is too
  // expensive; instead walk entries and look up the transposed element.
  double defect = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const std::size_t c = col_[k];
      const auto lo = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[c]);
      const auto hi =
          col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[c + 1]);
      const auto it = std::lower_bound(lo, hi, static_cast<std::uint32_t>(r));
      cplx transposed = 0.0;
      if (it != hi && *it == r)
        transposed = val_[static_cast<std::size_t>(it - col_.begin())];
      defect = std::max(defect, std::abs(val_[k] - std::conj(transposed)));
    }
  }
  return inf_norm_ > 0.0 ? defect / inf_norm_ : defect;
}

Eigen::MatrixXcd SparseHermitian::dense() const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
  for_each([&](std::size_t r, std::size_t c, cplx v) {
    out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
  });
  return out;
}

void CallbackOp::apply(const cplx* x, cplx* y) const {
  for (std::size_t r = 0; r < dim_; ++r) {
    cplx acc = 0.0;
    fill_(r, [&](std::size_t c, cplx v) { acc += v * x[c]; });
    y[r] = acc;
  }
}

}  // namespace ved
