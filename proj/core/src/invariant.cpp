#include "stapulse/invariant.hpp"

#include <cmath>
#include <complex>

#include "stapulse/errors.hpp"
#include "stapulse/hamiltonian.hpp"
#include "stapulse/pulses.hpp"

namespace stapulse {

namespace {

using std::complex;

constexpr complex<double> kI{0.0, 1.0};

struct Angles {
  double sg, cg, sb, cb;       // sin/cos of gamma and beta
  double gd, bd;               // rates
  complex<double> eip, eimp;   // e^{+-i phase}
};

Angles eval_angles(const InvariantSpec& spec, double t) {
  if (!(spec.omega0 > 0.0)) {
    throw ValidationError("invariant scale omega0 must be positive");
  }
  const double g = spec.path.gamma(t);
  const double b = spec.path.beta(t);
  Angles a;
  a.sg = std::sin(g);
  a.cg = std::cos(g);
  a.sb = std::sin(b);
  a.cb = std::cos(b);
  a.gd = spec.path.gamma_dot(t);
  a.bd = spec.path.beta_dot(t);
  a.eip = std::exp(kI * spec.path.phase);
  a.eimp = std::conj(a.eip);
  return a;
}

Eigen::Matrix3cd matrix_from_angles(const Angles& a, double omega0) {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(0, 1) = a.cg * a.sb;
  m(0, 2) = -kI * a.sg * a.eimp;
  m(1, 2) = a.cg * a.cb * a.eimp;
  m(1, 0) = std::conj(m(0, 1));
  m(2, 0) = std::conj(m(0, 2));
  m(2, 1) = std::conj(m(1, 2));
  return 0.5 * omega0 * m;
}

}  // namespace

Eigen::Matrix3cd invariant_matrix(const InvariantSpec& spec, double t) {
  return matrix_from_angles(eval_angles(spec, t), spec.omega0);
}

InvariantEigenstates invariant_eigenstates(const InvariantSpec& spec, double t) {
  const Angles a = eval_angles(spec, t);
  InvariantEigenstates e;
  e.phi0 = {a.cg * a.cb, -kI * a.sg, -a.cg * a.sb * a.eip};
  constexpr double r = 0.70710678118654752440;  // 1/sqrt(2)
  e.phi_plus = {r * (a.sg * a.cb + kI * a.sb), r * kI * a.cg,
                r * (-a.sg * a.sb + kI * a.cb) * a.eip};
  e.phi_minus = {r * (a.sg * a.cb - kI * a.sb), r * kI * a.cg,
                 r * (-a.sg * a.sb - kI * a.cb) * a.eip};
  return e;
}

namespace {

// Time derivatives of the eigenvector components by the chain rule.
Eigen::Vector3cd eigenstate_rate(const Angles& a, Branch branch) {
  const double gd = a.gd;
  const double bd = a.bd;
  switch (branch) {
    case Branch::Zero:
      return {-gd * a.sg * a.cb - bd * a.cg * a.sb, -kI * gd * a.cg,
              (gd * a.sg * a.sb - bd * a.cg * a.cb) * a.eip};
    case Branch::Plus: {
      constexpr double r = 0.70710678118654752440;
      return {r * (gd * a.cg * a.cb - bd * a.sg * a.sb + kI * bd * a.cb),
              -r * kI * gd * a.sg,
              r * (-gd * a.cg * a.sb - bd * a.sg * a.cb - kI * bd * a.sb) * a.eip};
    }
    case Branch::Minus: {
      constexpr double r = 0.70710678118654752440;
      return {r * (gd * a.cg * a.cb - bd * a.sg * a.sb - kI * bd * a.cb),
              -r * kI * gd * a.sg,
              r * (-gd * a.cg * a.sb - bd * a.sg * a.cb + kI * bd * a.sb) * a.eip};
    }
  }
  return Eigen::Vector3cd::Zero();
}

Eigen::Vector3cd eigenstate(const InvariantEigenstates& e, Branch branch) {
  switch (branch) {
    case Branch::Zero:
      return e.phi0;
    case Branch::Plus:
      return e.phi_plus;
    case Branch::Minus:
      return e.phi_minus;
  }
  return Eigen::Vector3cd::Zero();
}

Eigen::Matrix3cd resonant_hamiltonian(const PulsePair& pulses, double t) {
  const PulseSample s = pulses.envelopes(t);
  return assemble_hamiltonian({s.omega_p, s.omega_s, pulses.phase, 0.0});
}

}  // namespace

double invariance_residual(const InvariantSpec& spec, const PulsePair& pulses, double t) {
  const Angles a = eval_angles(spec, t);

  // dI/dt from the chain rule on (gamma, beta).
  Eigen::Matrix3cd di = Eigen::Matrix3cd::Zero();
  di(0, 1) = -a.gd * a.sg * a.sb + a.bd * a.cg * a.cb;
  di(0, 2) = -kI * a.gd * a.cg * a.eimp;
  di(1, 2) = (-a.gd * a.sg * a.cb - a.bd * a.cg * a.sb) * a.eimp;
  di(1, 0) = std::conj(di(0, 1));
  di(2, 0) = std::conj(di(0, 2));
  di(2, 1) = std::conj(di(1, 2));
  di *= 0.5 * spec.omega0;

  // Invariance condition dI/dt + i [H, I] = 0 (both operators over hbar).
  const Eigen::Matrix3cd i_mat = matrix_from_angles(a, spec.omega0);
  const Eigen::Matrix3cd h = resonant_hamiltonian(pulses, t);
  const Eigen::Matrix3cd residual = di + kI * (h * i_mat - i_mat * h);
  return residual.norm();
}

double lr_phase_rate(const InvariantSpec& spec, const PulsePair& pulses, double t,
                     Branch branch) {
  const Angles a = eval_angles(spec, t);
  const InvariantEigenstates e = invariant_eigenstates(spec, t);
  const Eigen::Vector3cd phi = eigenstate(e, branch);
  const Eigen::Vector3cd dphi = eigenstate_rate(a, branch);
  const Eigen::Matrix3cd h = resonant_hamiltonian(pulses, t);
  const complex<double> rate = kI * phi.dot(dphi) - phi.dot(h * phi);
  return rate.real();
}

}  // namespace stapulse
