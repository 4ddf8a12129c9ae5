#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qfc/params.hpp"
#include "qfc/srs.hpp"

namespace qfc::conversion {

/// Amplitudes of |0,0,0>, |1,1,0>, |1,0,1> in idler/mixing/up order.
struct ThreeModePureState {
  std::complex<double> c000;
  std::complex<double> c110;
  std::complex<double> c101;
};

/// Basis |00>, |01>, |10>, |11>; the idler is the first qubit.
using TwoQubitDensity = Eigen::Matrix4cd;

struct PhotonNumbers {
  double n_i = 0;
  double n_m = 0;
  double n_u = 0;
};

struct ConcurrencePair {
  double c_im = 0;
  double c_iu = 0;
};

struct ConversionTrace {
  std::vector<double> z;
  std::vector<double> theta;
  std::vector<double> n_i, n_m, n_u;
  std::vector<double> c_im, c_iu;
  std::vector<double> eof_im, eof_iu;

  std::size_t size() const { return z.size(); }
};

ThreeModePureState initial_bell_state();

/// Beamsplitter rotation by `theta` (>= 0) of the mixing excitation into the
/// up-converted mode; `conv_phase` rides on the |1,0,1> amplitude.
ThreeModePureState evolve_bell(double theta, double conv_phase = 0.0);

/// Throws DomainError when the norm deviates from 1 by more than 1e-9.
PhotonNumbers photon_numbers(const ThreeModePureState& state);

TwoQubitDensity reduce_idler_mixing(const ThreeModePureState& state);
TwoQubitDensity reduce_idler_up(const ThreeModePureState& state);

/// Two-qubit density matrix with populations 1/2, x, 1/2 - x on |00>, |11>,
/// |10> and coherence <11|rho|00> = coherence.
TwoQubitDensity x_state(double x, std::complex<double> coherence);

/// Wootters concurrence via the eigenvalues of sqrt(rho) rho~ sqrt(rho),
/// which share their spectrum with rho rho~. Throws NumericalError when rho
/// has an eigenvalue below -1e-10.
double wootters_concurrence(const TwoQubitDensity& rho);

ConcurrencePair concurrence_closed_form(double theta);

/// Throws DomainError for c outside [0, 1].
double entanglement_of_formation(double c);

/// theta(z) = G_U int_0^z |xi| dz' / c by trapezoid, then closed forms per sample.
ConversionTrace conversion_trace(const srs::FieldProfile& profile, const params::DerivedParams& d,
                                 srs::XiMode mode = srs::XiMode::Eom);

/// Same, from an explicit |xi(z)| array.
ConversionTrace conversion_trace(const std::vector<double>& z, const std::vector<double>& xi_abs,
                                 double g_u);

/// argmin_k |n_m - n_u| (first on ties). Equals the concurrence argmin.
std::size_t crossing_index(const ConversionTrace& trace);
std::size_t concurrence_crossing_index(const ConversionTrace& trace);

}  // namespace qfc::conversion
