#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "gainspec/gain_graph.hpp"

namespace gainspec {

/// Tolerance on entry(i,j) - conj(entry(j,i)) accepted as Hermitian.
inline constexpr double kHermitianTolerance = 1e-12;
/// Per-pair residual bound ||A v - lambda v|| <= kResidualTolerance * ||A||.
inline constexpr double kResidualTolerance = 1e-8;
/// Tolerance for matching Kronecker spectra and energy doubling.
inline constexpr double kKroneckerTolerance = 1e-7;
/// Largest dimension accepted by char_poly.
inline constexpr std::size_t kCharPolyMaxOrder = 12;
/// Largest product order accepted by kronecker_spectrum_check.
inline constexpr std::size_t kKroneckerMaxOrder = 64;

/// Dense Hermitian matrix, row-major.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Zero matrix.
  explicit HermitianMatrix(std::size_t n);
  /// Throws std::invalid_argument if `entries` is not n*n or not Hermitian
  /// within kHermitianTolerance.
  HermitianMatrix(std::size_t n, std::vector<std::complex<double>> entries);

  std::size_t dim() const { return n_; }
  std::complex<double> operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<std::complex<double>>& entries() const { return a_; }

  double trace() const;
  double frobenius_norm_squared() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::complex<double>> a_;
};

HermitianMatrix adjacency(const GainGraph& phi);

struct Spectrum {
  /// Sorted descending.
  std::vector<double> eigenvalues;
  double energy = 0.0;
};

/// Throws std::invalid_argument when the input is not Hermitian and
/// std::runtime_error when the solve misses its residual or sanity bounds.
Spectrum eigenvalues(const HermitianMatrix& a);
/// Sum of |lambda_i| over the spectrum of adjacency(phi).
double energy(const GainGraph& phi);
Spectrum spectrum(const GainGraph& phi);

/// Coefficients of det(lambda I - A), leading coefficient first
/// (result[k] multiplies lambda^(n-k)). Throws std::invalid_argument for
/// dimensions above kCharPolyMaxOrder.
std::vector<double> char_poly(const HermitianMatrix& a);

/// Energy of the 4-cycle x1 y1 x0 y0 with gains 1, a, 1, b in closed form.
double four_cycle_energy(UnitComplex a, UnitComplex b);
/// Throws std::invalid_argument if either argument is not unit modulus.
double four_cycle_energy(std::complex<double> a, std::complex<double> b);
/// The gain graph realising four_cycle_energy: vertices x1=0, y1=1, x0=2,
/// y0=3, gains x1->y1 = 1, y1->x0 = a, x0->y0 = 1, y0->x1 = b.
GainGraph four_cycle(UnitComplex a, UnitComplex b);

struct KroneckerReport {
  /// Sorted products eta_s * lambda_t.
  std::vector<double> predicted;
  /// Sorted spectrum of adjacency(phi (x) h).
  std::vector<double> computed;
  double max_deviation = 0.0;
  bool spectra_match = false;
  /// Only meaningful when h is K2.
  bool is_bipartite_double = false;
  double base_energy = 0.0;
  double product_energy = 0.0;
  bool energy_doubles = false;

  bool ok() const { return spectra_match && (!is_bipartite_double || energy_doubles); }
};

/// Throws std::invalid_argument if the product has more than
/// kKroneckerMaxOrder vertices.
KroneckerReport kronecker_spectrum_check(const GainGraph& phi, const Graph& h);

/// Process-wide record of every eigensolve, for the trace and Frobenius
/// checks that accompany each solve.
struct SpectralSanity {
  std::size_t solves = 0;
  /// max over solves of |sum lambda_i - trace(A)| / max(n, 1).
  double worst_trace_ratio = 0.0;
  /// max over solves of |sum lambda_i^2 - ||A||_F^2| / max(n, 1).
  double worst_frobenius_ratio = 0.0;
  /// max over solves and pairs of ||A v - lambda v|| / max(||A||_F, 1).
  double worst_residual = 0.0;
};

SpectralSanity spectral_sanity();
void reset_spectral_sanity();

namespace detail {

struct EigenSystem {
  std::vector<double> values;
  /// Column k is the eigenvector of values[k], stored row-major n x n.
  std::vector<std::complex<double>> vectors;
};

/// Cyclic complex Jacobi; values are in the order they appear on the
/// diagonal after convergence.
EigenSystem jacobi_eigensystem(const HermitianMatrix& a);

}  // namespace detail

}  // namespace gainspec
