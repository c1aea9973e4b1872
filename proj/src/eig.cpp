#include "ved/eig.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ved {

namespace {

double uniform_pm(std::mt19937_64& rng) {
  // [-0.5, 0.5) from the standardized mt19937_64 stream
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
}

Eigen::VectorXcd random_start(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v[i] = cplx{uniform_pm(rng), uniform_pm(rng)};
  return v;
}

void finalize(EigenSolution& sol, double threshold) {
  sol.degeneracy_groups = degeneracy_split(sol.energies, threshold);
}

}  // namespace

std::vector<std::vector<int>> degeneracy_split(std::span<const double> energies,
                                               double threshold) {
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(energies.size()); ++i) {
    if (i == 0 || energies[i] - energies[i - 1] >= threshold)
      groups.emplace_back();
    groups.back().push_back(i);
  }
  return groups;
}

Eigen::MatrixXcd dense_of(const LinearOp& op) {
  if (const auto* sp = dynamic_cast<const SparseHermitian*>(&op))
    return sp->dense();
  const auto n = static_cast<Eigen::Index>(op.dim());
  Eigen::MatrixXcd out(n, n);
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
  Eigen::VectorXcd col(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    e[c] = 1.0;
    op.apply(e.data(), col.data());
    out.col(c) = col;
    e[c] = 0.0;
  }
  return out;
}

EigenSolution dense_all(const LinearOp& op, bool with_vectors,
                        double degeneracy_threshold) {
  const Eigen::MatrixXcd h = dense_of(op);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      h, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense_all: eigensolver failed");
  EigenSolution sol;
  const auto n = h.rows();
  sol.energies.assign(solver.eigenvalues().data(),
                      solver.eigenvalues().data() + n);
  sol.residuals.assign(static_cast<std::size_t>(n), 0.0);
  if (with_vectors) {
    sol.vectors.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
      sol.vectors.push_back(solver.eigenvectors().col(i));
  }
  finalize(sol, degeneracy_threshold);
  return sol;
}

namespace {

EigenSolution dense_lowest(const LinearOp& op, const LanczosOptions& opts) {
  EigenSolution all = dense_all(op, true, opts.degeneracy_threshold);
  const int k = std::min<int>(opts.k, static_cast<int>(all.energies.size()));
  EigenSolution sol;
  sol.energies.assign(all.energies.begin(), all.energies.begin() + k);
  sol.vectors.assign(all.vectors.begin(), all.vectors.begin() + k);
  sol.residuals.assign(static_cast<std::size_t>(k), 0.0);
  finalize(sol, opts.degeneracy_threshold);
  return sol;
}

// Rayleigh-Ritz iteration on a Krylov-augmented subspace: full two-pass
// reorthogonalization, thick restarts, locking of converged pairs and
// explicit deflation against them. Because a Krylov space holds one
// vector per eigenspace, reaching k locked pairs is not enough when the
// spectrum has degeneracies; the run only finishes once the remaining
// subspace provably sits above the k-th locked energy (tie pairs get
// locked along the way).
class LanczosEngine {
 public:
  LanczosEngine(const LinearOp& op, const LanczosOptions& opts)
      : op_(op), opts_(opts), dim_(op.dim()) {
    max_subspace_ = opts.max_subspace > 0
                        ? opts.max_subspace
                        : (dim_ <= 50'000 ? 320 : 128);
    max_subspace_ =
        std::min<int>(max_subspace_, static_cast<int>(dim_));
    keep_ = std::clamp(2 * opts.k + 6, 8, std::max(4, max_subspace_ / 2));
    scale_ = std::max(op.norm_estimate(), 1e-300);
    lock_tol_ = opts.tol * scale_;
    slack_ = std::max(opts.degeneracy_threshold, 4.0 * lock_tol_);
    v_.resize(static_cast<Eigen::Index>(dim_), max_subspace_);
    t_ = Eigen::MatrixXcd::Zero(max_subspace_, max_subspace_);
  }

  EigenSolution run() {
    start_fresh();
    for (;;) {
      if (done_) break;
      if (matvecs_ >= opts_.max_matvecs) fail("matvec budget exhausted");
      step();
      if (!done_ && m_ == max_subspace_) {
        ritz_pass();
        if (!done_) {
          compress(keep_);
          ++restarts_;
        }
      }
    }
    return assemble();
  }

 private:
  void orthogonalize(Eigen::VectorXcd& w, Eigen::VectorXcd* coeffs) const {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : locked_) w -= q * q.dot(w);
      if (m_ > 0) {
        const auto basis = v_.leftCols(m_);
        Eigen::VectorXcd c = basis.adjoint() * w;
        w.noalias() -= basis * c;
        if (coeffs) *coeffs += c;
      }
    }
  }

  void start_fresh() {
    for (int attempt = 0; attempt < 8; ++attempt) {
      Eigen::VectorXcd w =
          random_start(dim_, opts_.seed + 0x9E3779B97F4A7C15ull * ++starts_);
      orthogonalize(w, nullptr);
      const double n = w.norm();
      if (n > 1e-8) {
        pending_ = w / n;
        return;
      }
    }
    throw std::runtime_error("lanczos: could not seed a start vector");
  }

  // Appends the pending vector to the basis and orthogonalizes its image.
  void step() {
    const int j = m_;
    v_.col(j) = pending_;
    ++m_;
    Eigen::VectorXcd w(static_cast<Eigen::Index>(dim_));
    op_.apply(v_.col(j).data(), w.data());
    ++matvecs_;
    Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(m_);
    orthogonalize(w, &coeffs);
    for (int i = 0; i < m_; ++i) {
      t_(i, j) = coeffs[i];
      t_(j, i) = std::conj(coeffs[i]);
    }
    t_(j, j) = cplx{coeffs[j].real(), 0.0};
    beta_ = w.norm();
    if (beta_ < 1e-13 * scale_) {
      // invariant subspace: every Ritz pair in it is exact
      ritz_pass(/*exact=*/true);
      if (!done_) {
        if (locked_.size() + static_cast<std::size_t>(m_) >= dim_) {
          // nothing left to explore; whatever is locked is the answer
          done_ = true;
        } else {
          compress(std::min(keep_, m_));
          start_fresh();
        }
      }
      return;
    }
    pending_ = w / beta_;
    if (m_ % check_interval_ == 0) ritz_pass();
  }

  void solve_projected(Eigen::VectorXd& theta, Eigen::MatrixXcd& s) const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        t_.topLeftCorner(m_, m_));
    theta = es.eigenvalues();
    s = es.eigenvectors();
  }

  double kth_locked_energy() const {
    std::vector<double> e(locked_energies_);
    std::nth_element(e.begin(), e.begin() + (opts_.k - 1), e.end());
    return e[static_cast<std::size_t>(opts_.k - 1)];
  }

  // Locks converged Ritz pairs from the bottom up, then decides whether
  // the remaining subspace can still hide a bottom-k eigenvalue.
  void ritz_pass(bool exact = false) {
    if (m_ == 0) return;
    Eigen::VectorXd theta;
    Eigen::MatrixXcd s;
    solve_projected(theta, s);
    int consumed = 0;
    while (consumed < m_) {
      const bool need_more = static_cast<int>(locked_.size()) < opts_.k;
      const bool tie =
          static_cast<int>(locked_.size()) >= opts_.k &&
          static_cast<int>(locked_.size()) < opts_.k + kMaxTieLocks &&
          theta[consumed] <= kth_locked_energy() + slack_;
      if (!need_more && !tie) break;
      const double est =
          exact ? 0.0 : beta_ * std::abs(s(m_ - 1, consumed));
      if (est > lock_tol_) break;
      Eigen::VectorXcd x = v_.leftCols(m_) * s.col(consumed);
      x.normalize();
      Eigen::VectorXcd hx(static_cast<Eigen::Index>(dim_));
      op_.apply(x.data(), hx.data());
      ++matvecs_;
      const double e = x.dot(hx).real();
      const double res = (hx - e * x).norm();
      if (res > lock_tol_ && !exact) break;  // estimate was optimistic
      locked_.push_back(std::move(x));
      locked_energies_.push_back(e);
      locked_residuals_.push_back(res);
      ++consumed;
    }
    if (static_cast<int>(locked_.size()) >= opts_.k) {
      // Separation: a Krylov space carries one vector per eigenspace, so
      // a degenerate partner of a locked level only surfaces through
      // rounding noise. The run therefore finishes only when the lowest
      // remaining Ritz pair has itself converged and sits above the k-th
      // locked energy; a converged pair at or below it is a missed
      // degenerate copy and gets locked through the tie branch above.
      if (consumed >= m_) {
        done_ = locked_.size() + static_cast<std::size_t>(m_) >= dim_ ||
                static_cast<int>(locked_.size()) >= opts_.k + kMaxTieLocks;
      } else {
        const double est =
            exact ? 0.0 : beta_ * std::abs(s(m_ - 1, consumed));
        if ((est <= lock_tol_ &&
             theta[consumed] > kth_locked_energy() + slack_) ||
            static_cast<int>(locked_.size()) >= opts_.k + kMaxTieLocks) {
          // Noise seeding is too slow to trust a single subspace: confirm
          // with one cycle from a fresh random start, whose overlap with
          // any hidden copy is O(1/sqrt(dim)) instead of O(eps).
          if (reseeded_ || locked_.size() + 1 >= dim_) {
            done_ = true;
          } else {
            reseeded_ = true;
            compress_columns(theta, s, 0, 0);
            start_fresh();
            return;
          }
        }
      }
    }
    if (consumed > 0 && !done_) {
      reseeded_ = false;
      compress_columns(theta, s, consumed,
                       std::min(m_ - consumed, keep_));
    }
  }

  void compress(int keep) {
    if (m_ == 0 || keep >= m_) return;
    Eigen::VectorXd theta;
    Eigen::MatrixXcd s;
    solve_projected(theta, s);
    compress_columns(theta, s, 0, keep);
  }

  // Basis <- Ritz vectors [first, first+count). The pending vector stays
  // orthogonal to any rotation of the basis, and its coupling column is
  // rebuilt from explicit inner products on the next step().
  void compress_columns(const Eigen::VectorXd& theta, const Eigen::MatrixXcd& s,
                        int first, int count) {
    if (count < 0) count = 0;
    if (count > 0) {
      Eigen::MatrixXcd y = v_.leftCols(m_) * s.middleCols(first, count);
      v_.leftCols(count) = y;
    }
    t_.setZero();
    for (int i = 0; i < count; ++i) t_(i, i) = theta[first + i];
    m_ = count;
  }

  void fail(const std::string& why) {
    EigenSolution partial = assemble_unchecked();
    throw EigNotConverged("lanczos: " + why + " (" +
                              std::to_string(locked_.size()) + "/" +
                              std::to_string(opts_.k) + " pairs converged)",
                          std::move(partial));
  }

  EigenSolution assemble() {
    EigenSolution sol = assemble_unchecked();
    if (static_cast<int>(sol.energies.size()) < opts_.k)
      throw EigNotConverged("lanczos: incomplete", std::move(sol));
    return sol;
  }

  EigenSolution assemble_unchecked() {
    std::vector<int> order(locked_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return locked_energies_[a] < locked_energies_[b];
    });
    EigenSolution sol;
    const int k = std::min<int>(opts_.k, static_cast<int>(locked_.size()));
    for (int i = 0; i < k; ++i) {
      sol.energies.push_back(locked_energies_[order[i]]);
      sol.vectors.push_back(std::move(locked_[order[i]]));
      sol.residuals.push_back(locked_residuals_[order[i]]);
    }
    sol.matvecs = matvecs_;
    sol.restarts = restarts_;
    finalize(sol, opts_.degeneracy_threshold);
    return sol;
  }

  const LinearOp& op_;
  LanczosOptions opts_;
  std::size_t dim_;
  int max_subspace_ = 0;
  int keep_ = 0;
  double scale_ = 1.0;
  double lock_tol_ = 0.0;
  double slack_ = 0.0;
  static constexpr int check_interval_ = 8;
  static constexpr int kMaxTieLocks = 8;

  Eigen::MatrixXcd v_;
  Eigen::MatrixXcd t_;
  Eigen::VectorXcd pending_;
  double beta_ = 0.0;
  int m_ = 0;
  bool done_ = false;
  bool reseeded_ = false;
  std::uint64_t starts_ = 0;
  long matvecs_ = 0;
  int restarts_ = 0;

  std::vector<Eigen::VectorXcd> locked_;
  std::vector<double> locked_energies_;
  std::vector<double> locked_residuals_;
};

}  // namespace

EigenSolution lowest(const LinearOp& op, const LanczosOptions& opts) {
  if (opts.k < 1) throw std::invalid_argument("lowest: k must be >= 1");
  if (static_cast<std::size_t>(opts.k) > op.dim())
    throw std::invalid_argument("lowest: k exceeds dimension");
  if (op.dim() <= opts.dense_cutoff ||
      static_cast<std::size_t>(opts.k) + 2 >= op.dim())
    return dense_lowest(op, opts);
  return LanczosEngine(op, opts).run();
}

EigenSolution ground_manifold(const LinearOp& op, LanczosOptions opts,
                              int max_group) {
  opts.k = std::max(opts.k, 2);
  for (;;) {
    EigenSolution sol = lowest(op, opts);
    const auto& g0 = sol.degeneracy_groups.front();
    const bool complete =
        g0.back() + 1 < static_cast<int>(sol.energies.size()) ||
        sol.energies.size() == op.dim();
    if (complete || static_cast<int>(g0.size()) >= max_group) return sol;
    opts.k = std::min<int>(opts.k + 2, static_cast<int>(op.dim()));
  }
}

}  // namespace ved
