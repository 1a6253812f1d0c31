#include "altlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace altlab {

namespace {

thread_local JacobiOptions tls_options{};

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One complex Jacobi rotation annihilating a(p, q). The rotation J acts on
// columns p, q as [[c, s e], [-s conj(e), c]] with e = a(p,q) / |a(p,q)|;
// a <- J* a J and v <- v J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q, bool late_sweep) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  if (late_sweep && std::abs(app) + 100.0 * mag == std::abs(app) &&
      std::abs(aqq) + 100.0 * mag == std::abs(aqq)) {
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    return;
  }
  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex e = apq / mag;
  const Complex jpq = s * e;
  const Complex jqp = -s * std::conj(e);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * c + akq * jqp;
    a(k, q) = akp * jpq + akq * c;
  }
  const Complex cjqp = std::conj(jqp);
  const Complex cjpq = std::conj(jpq);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + cjqp * aqk;
    a(q, k) = cjpq * apk + c * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * c + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * c;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

// Orthonormalizes `column` against the first `count` columns of `basis`
// (two passes of modified Gram-Schmidt). Returns the norm left over.
double orthogonalize(const ComplexMatrix& basis, std::size_t count, std::vector<Complex>& column) {
  const std::size_t m = column.size();
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t k = 0; k < count; ++k) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < m; ++i) dot += std::conj(basis(i, k)) * column[i];
      for (std::size_t i = 0; i < m; ++i) column[i] -= dot * basis(i, k);
    }
  }
  double norm = 0.0;
  for (const auto& z : column) norm += std::norm(z);
  return std::sqrt(norm);
}

}  // namespace

ConvergenceError::ConvergenceError(double residual, int sweeps)
    : std::runtime_error("hermitian_eig: Jacobi did not converge after " +
                         std::to_string(sweeps) + " sweeps (relative off-diagonal residual " +
                         std::to_string(residual) + ")"),
      residual_(residual),
      sweeps_(sweeps) {}

const JacobiOptions& current_jacobi_options() noexcept { return tls_options; }

ScopedJacobiOptions::ScopedJacobiOptions(const JacobiOptions& options) : previous_(tls_options) {
  tls_options = options;
}

ScopedJacobiOptions::~ScopedJacobiOptions() { tls_options = previous_; }

EigenDecomposition hermitian_eig(const HermitianMatrix& h) {
  return hermitian_eig(h, current_jacobi_options());
}

EigenDecomposition hermitian_eig(const HermitianMatrix& h, const JacobiOptions& options) {
  ComplexMatrix a = h.matrix();
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();

  int sweep = 0;
  double residual = off_diagonal_norm(a);
  while (residual > options.tolerance * scale) {
    if (sweep >= options.max_sweeps) throw ConvergenceError(residual / scale, sweep);
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q, sweep > 4);
    }
    residual = off_diagonal_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix SingularDecomposition::reconstruct() const {
  const std::size_t m = left.rows();
  const std::size_t n = right.rows();
  ComplexMatrix out(m, n);
  for (std::size_t k = 0; k < singular_values.size(); ++k) {
    const double s = singular_values[k];
    if (s == 0.0) continue;
    for (std::size_t i = 0; i < m; ++i) {
      const Complex u = s * left(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += u * std::conj(right(j, k));
    }
  }
  return out;
}

SingularDecomposition svd(const ComplexMatrix& x) {
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  const std::size_t rank_bound = std::min(m, n);

  const auto gram = HermitianMatrix::project(x.adjoint() * x);
  const auto eig = hermitian_eig(gram);
  const ComplexMatrix w = x * eig.eigenvectors;

  std::vector<double> norms(n);
  for (std::size_t k = 0; k < n; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += std::norm(w(i, k));
    norms[k] = std::sqrt(sum);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return norms[i] > norms[j]; });

  SingularDecomposition out{std::vector<double>(rank_bound), ComplexMatrix(m, m),
                            ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) out.right(i, k) = eig.eigenvectors(i, order[k]);
  }
  const double smax = norms[order[0]];
  const double cutoff = spectral_zero_threshold(std::max(m, n), smax);
  for (std::size_t k = 0; k < rank_bound; ++k) {
    const double s = norms[order[k]];
    out.singular_values[k] = s > cutoff ? s : 0.0;
  }

  // Left vectors: normalized X v_k for the numerically nonzero singular
  // values, then a deterministic completion.
  std::size_t filled = 0;
  std::vector<Complex> column(m);
  for (std::size_t k = 0; k < rank_bound && out.singular_values[k] > 0.0; ++k) {
    for (std::size_t i = 0; i < m; ++i) column[i] = w(i, order[k]);
    const double norm = orthogonalize(out.left, filled, column);
    if (norm <= cutoff) break;
    for (std::size_t i = 0; i < m; ++i) out.left(i, filled) = column[i] / norm;
    ++filled;
  }
  const std::size_t numeric_rank = filled;
  auto try_candidate = [&](std::vector<Complex> candidate) {
    const double norm = orthogonalize(out.left, filled, candidate);
    if (norm < 1e-8) return;
    for (std::size_t i = 0; i < m; ++i) out.left(i, filled) = candidate[i] / norm;
    ++filled;
  };
  if (m == n) {
    for (std::size_t k = filled; k < n && filled < m; ++k) {
      std::vector<Complex> candidate(m);
      for (std::size_t i = 0; i < m; ++i) candidate[i] = out.right(i, k);
      try_candidate(std::move(candidate));
    }
  }
  for (std::size_t e = 0; e < m && filled < m; ++e) {
    std::vector<Complex> candidate(m);
    candidate[e] = 1.0;
    try_candidate(std::move(candidate));
  }
  // Singular values whose left vector came from the completion are
  // rounding-level; drop them so the factors stay consistent.
  for (std::size_t k = numeric_rank; k < rank_bound; ++k) out.singular_values[k] = 0.0;
  return out;
}

std::vector<double> graded_singular_values(std::span<const double> left, const ComplexMatrix& w,
                                           std::span<const double> right) {
  using Real = long double;
  using Cx = std::complex<Real>;
  const std::size_t m = w.rows();
  const std::size_t n = w.cols();
  if (left.size() != m || right.size() != n) {
    throw std::invalid_argument("graded_singular_values: scaling length mismatch");
  }
  // Zero scalings remove whole rows or columns of G = diag(left) W diag(right)
  // exactly; the Gram matrix is formed on the smaller remaining side.
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t k = 0; k < m; ++k) {
    if (left[k] != 0.0) rows.push_back(k);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (right[k] != 0.0) cols.push_back(k);
  }
  std::vector<Cx> g(rows.size() * cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Complex x = w(rows[i], cols[j]);
      g[i * cols.size() + j] = static_cast<Real>(left[rows[i]]) * static_cast<Real>(right[cols[j]]) *
                               Cx(x.real(), x.imag());
    }
  }
  const bool by_rows = rows.size() < cols.size();
  const std::size_t size = by_rows ? rows.size() : cols.size();
  const std::size_t inner = by_rows ? cols.size() : rows.size();
  auto at = [&](std::size_t outer_index, std::size_t k) {
    return by_rows ? g[outer_index * cols.size() + k] : g[k * cols.size() + outer_index];
  };
  std::vector<Cx> h(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      Cx sum = 0;
      for (std::size_t k = 0; k < inner; ++k) sum += std::conj(at(i, k)) * at(j, k);
      h[i * size + j] = sum;
      h[j * size + i] = std::conj(sum);
    }
    h[i * size + i] = h[i * size + i].real();
  }

  constexpr Real kPairTolerance = 1e-17L;
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < size; ++p) {
      for (std::size_t q = p + 1; q < size; ++q) {
        const Cx hpq = h[p * size + q];
        const Real mag = std::abs(hpq);
        const Real hpp = h[p * size + p].real();
        const Real hqq = h[q * size + q].real();
        if (mag == 0 || mag <= kPairTolerance * std::sqrt(std::abs(hpp * hqq))) continue;
        rotated = true;
        const Real theta = (hqq - hpp) / (2 * mag);
        const Real t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(1 + theta * theta));
        const Real c = 1 / std::sqrt(1 + t * t);
        const Cx e = hpq / mag;
        const Cx jpq = t * c * e;
        const Cx jqp = -t * c * std::conj(e);
        for (std::size_t k = 0; k < size; ++k) {
          const Cx hkp = h[k * size + p];
          const Cx hkq = h[k * size + q];
          h[k * size + p] = hkp * c + hkq * jqp;
          h[k * size + q] = hkp * jpq + hkq * c;
        }
        for (std::size_t k = 0; k < size; ++k) {
          const Cx hpk = h[p * size + k];
          const Cx hqk = h[q * size + k];
          h[p * size + k] = c * hpk + std::conj(jqp) * hqk;
          h[q * size + k] = std::conj(jpq) * hpk + c * hqk;
        }
        h[p * size + q] = 0;
        h[q * size + p] = 0;
        h[p * size + p] = h[p * size + p].real();
        h[q * size + q] = h[q * size + q].real();
      }
    }
    if (!rotated) break;
  }

  std::vector<double> out(std::min(m, n), 0.0);
  for (std::size_t i = 0; i < size; ++i) {
    out[i] = static_cast<double>(std::sqrt(std::max<Real>(h[i * size + i].real(), 0)));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace altlab
