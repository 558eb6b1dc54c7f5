#include "gainspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>

namespace gainspec {

namespace {

using cd = std::complex<double>;

constexpr int kMaxSweeps = 100;

std::mutex sanity_mutex;
SpectralSanity sanity_state;

void record_solve(double trace_ratio, double frobenius_ratio, double residual) {
  std::lock_guard lock(sanity_mutex);
  ++sanity_state.solves;
  sanity_state.worst_trace_ratio = std::max(sanity_state.worst_trace_ratio, trace_ratio);
  sanity_state.worst_frobenius_ratio =
      std::max(sanity_state.worst_frobenius_ratio, frobenius_ratio);
  sanity_state.worst_residual = std::max(sanity_state.worst_residual, residual);
}

double max_abs_entry(const HermitianMatrix& a) {
  double m = 0.0;
  for (const cd& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

HermitianMatrix::HermitianMatrix(std::size_t n) : n_(n), a_(n * n, cd(0.0, 0.0)) {}

HermitianMatrix::HermitianMatrix(std::size_t n, std::vector<cd> entries)
    : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) {
    throw std::invalid_argument("HermitianMatrix: expected " + std::to_string(n * n) +
                                " entries, got " + std::to_string(a_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(a_[i * n + j] - std::conj(a_[j * n + i])) > kHermitianTolerance) {
        throw std::invalid_argument("HermitianMatrix: entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") breaks Hermitian symmetry");
      }
    }
  }
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i).real();
  return t;
}

double HermitianMatrix::frobenius_norm_squared() const {
  double s = 0.0;
  for (const cd& z : a_) s += std::norm(z);
  return s;
}

HermitianMatrix adjacency(const GainGraph& phi) {
  const std::size_t n = phi.order();
  std::vector<cd> a(n * n, cd(0.0, 0.0));
  const auto& edges = phi.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const cd z = phi.forward_gains()[i].value();
    a[edges[i].u * n + edges[i].v] = z;
    a[edges[i].v * n + edges[i].u] = std::conj(z);
  }
  return HermitianMatrix(n, std::move(a));
}

namespace detail {

EigenSystem jacobi_eigensystem(const HermitianMatrix& input) {
  const std::size_t n = input.dim();
  std::vector<cd> a = input.entries();
  std::vector<cd> v(n * n, cd(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  auto at = [n](std::vector<cd>& m, std::size_t i, std::size_t j) -> cd& { return m[i * n + j]; };

  const double scale = std::sqrt(input.frobenius_norm_squared());
  const double stop = 1e-15 * scale;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(at(a, p, q));
    }
    if (std::sqrt(2.0 * off) <= stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cd apq = at(a, p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const double app = at(a, p, p).real();
        const double aqq = at(a, q, q).real();
        if (sweep > 3 && std::abs(app) + 100.0 * r == std::abs(app) &&
            std::abs(aqq) + 100.0 * r == std::abs(aqq)) {
          at(a, p, q) = at(a, q, p) = 0.0;
          continue;
        }
        // Phase e makes the (p,q) entry real, then a real rotation zeroes it.
        const cd e = std::conj(apq) / r;
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        const cd gpp = c, gpq = s, gqp = -s * e, gqq = c * e;

        for (std::size_t k = 0; k < n; ++k) {
          const cd akp = at(a, k, p), akq = at(a, k, q);
          at(a, k, p) = akp * gpp + akq * gqp;
          at(a, k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cd apk = at(a, p, k), aqk = at(a, q, k);
          at(a, p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          at(a, q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        at(a, p, q) = at(a, q, p) = 0.0;
        at(a, p, p) = at(a, p, p).real();
        at(a, q, q) = at(a, q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cd vkp = at(v, k, p), vkq = at(v, k, q);
          at(v, k, p) = vkp * gpp + vkq * gqp;
          at(v, k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }

  EigenSystem out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = at(a, i, i).real();
  out.vectors = std::move(v);
  return out;
}

}  // namespace detail

Spectrum eigenvalues(const HermitianMatrix& a) {
  const std::size_t n = a.dim();
  detail::EigenSystem sys = detail::jacobi_eigensystem(a);

  const double norm = std::sqrt(a.frobenius_norm_squared());
  double worst_residual = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cd acc = -sys.values[k] * sys.vectors[i * n + k];
      for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * sys.vectors[j * n + k];
      r2 += std::norm(acc);
    }
    worst_residual = std::max(worst_residual, std::sqrt(r2));
  }

  Spectrum out;
  out.eigenvalues = std::move(sys.values);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  double sum = 0.0, sum_sq = 0.0;
  for (double lambda : out.eigenvalues) {
    out.energy += std::abs(lambda);
    sum += lambda;
    sum_sq += lambda * lambda;
  }

  const double entry_scale = std::max(1.0, max_abs_entry(a));
  const double dim = std::max<double>(static_cast<double>(n), 1.0);
  const double trace_ratio = std::abs(sum - a.trace()) / (dim * entry_scale);
  const double frob_ratio =
      std::abs(sum_sq - a.frobenius_norm_squared()) / (dim * entry_scale * entry_scale);
  const double residual_ratio = worst_residual / std::max(norm, 1.0);
  record_solve(trace_ratio, frob_ratio, residual_ratio);

  if (worst_residual > kResidualTolerance * norm) {
    throw std::runtime_error("eigenvalues: residual " + std::to_string(worst_residual) +
                             " exceeds bound");
  }
  if (trace_ratio > 1e-8 || frob_ratio > 1e-7) {
    throw std::runtime_error("eigenvalues: trace or Frobenius identity violated");
  }
  return out;
}

Spectrum spectrum(const GainGraph& phi) { return eigenvalues(adjacency(phi)); }

double energy(const GainGraph& phi) { return spectrum(phi).energy; }

std::vector<double> char_poly(const HermitianMatrix& a) {
  const std::size_t n = a.dim();
  if (n > kCharPolyMaxOrder) {
    throw std::invalid_argument("char_poly: order " + std::to_string(n) + " exceeds " +
                                std::to_string(kCharPolyMaxOrder));
  }
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k) / k.
  std::vector<cd> coeffs(n + 1, cd(0.0, 0.0));
  coeffs[0] = 1.0;
  std::vector<cd> m(n * n, cd(0.0, 0.0));
  std::vector<cd> am(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    // am = A * m (m holds M_{k-1}); then M_k = am + c_{k-1} I.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        cd acc = 0.0;
        for (std::size_t l = 0; l < n; ++l) acc += a(i, l) * m[l * n + j];
        am[i * n + j] = acc;
      }
    }
    for (std::size_t i = 0; i < n; ++i) am[i * n + i] += coeffs[k - 1];
    m = am;
    cd tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr += a(i, l) * m[l * n + i];
    }
    coeffs[k] = -tr / static_cast<double>(k);
  }
  std::vector<double> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = coeffs[k].real();
  return out;
}

double four_cycle_energy(UnitComplex a, UnitComplex b) {
  // With x = Re(ab): 2 - 2x = |1 - ab|^2, which stays accurate near x = 1,
  // and 2 - sqrt(2 + 2x) = (2 - 2x) / (2 + sqrt(2 + 2x)).
  const double d = std::clamp(std::norm(1.0 - a.value() * b.value()), 0.0, 4.0);
  const double s = std::sqrt(4.0 - d);
  return 2.0 * std::sqrt(2.0 + s) + 2.0 * std::sqrt(d / (2.0 + s));
}

double four_cycle_energy(std::complex<double> a, std::complex<double> b) {
  return four_cycle_energy(UnitComplex::checked(a), UnitComplex::checked(b));
}

GainGraph four_cycle(UnitComplex a, UnitComplex b) {
  GainGraph k(named::cycle(4));
  return k.with_gain(0, 1, UnitComplex())
      .with_gain(1, 2, a)
      .with_gain(2, 3, UnitComplex())
      .with_gain(3, 0, b);
}

KroneckerReport kronecker_spectrum_check(const GainGraph& phi, const Graph& h) {
  const std::size_t order = phi.order() * h.order();
  if (order > kKroneckerMaxOrder) {
    throw std::invalid_argument("kronecker_spectrum_check: product order " +
                                std::to_string(order) + " exceeds " +
                                std::to_string(kKroneckerMaxOrder));
  }
  const Spectrum base = spectrum(phi);
  const Spectrum factor = eigenvalues(adjacency(all_ones(h)));
  const Spectrum product = spectrum(kronecker(phi, h));

  KroneckerReport report;
  for (double eta : base.eigenvalues) {
    for (double lambda : factor.eigenvalues) report.predicted.push_back(eta * lambda);
  }
  std::sort(report.predicted.begin(), report.predicted.end(), std::greater<>());
  report.computed = product.eigenvalues;
  for (std::size_t i = 0; i < report.predicted.size(); ++i) {
    report.max_deviation =
        std::max(report.max_deviation, std::abs(report.predicted[i] - report.computed[i]));
  }
  report.spectra_match = report.max_deviation <= kKroneckerTolerance;

  report.is_bipartite_double = h.order() == 2 && h.size() == 1;
  report.base_energy = base.energy;
  report.product_energy = product.energy;
  report.energy_doubles =
      std::abs(report.product_energy - 2.0 * report.base_energy) <= kKroneckerTolerance;
  return report;
}

SpectralSanity spectral_sanity() {
  std::lock_guard lock(sanity_mutex);
  return sanity_state;
}

void reset_spectral_sanity() {
  std::lock_guard lock(sanity_mutex);
  sanity_state = SpectralSanity{};
}

}  // namespace gainspec
