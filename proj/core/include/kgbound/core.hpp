#pragma once

/// \file core.hpp
/// Shared domain types, physical constants and unit conventions.
///
/// Everything here is immutable after construction. Natural units
/// (hbar = c = 1, energies in units of the rest mass) are the default; the
/// molecular mode expresses energies in eV, lengths in angstrom and masses
/// in amu.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kgb {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical or physical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A square root that must be real would have a negative argument.
class NonRealError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A quantization condition has no admissible root.
class NoBoundStateError : public Error {
 public:
  using Error::Error;
};

/// A quantization condition has several admissible roots.
class AmbiguousRootError : public Error {
 public:
  AmbiguousRootError(const std::string& what, std::vector<double> candidates)
      : Error(what), candidates_(std::move(candidates)) {}
  const std::vector<double>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<double> candidates_;
};

/// An iterative numerical procedure did not reach its tolerance.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double error_estimate)
      : Error(what), best_(best_estimate), err_(error_estimate) {}
  double best_estimate() const noexcept { return best_; }
  double error_estimate() const noexcept { return err_; }

 private:
  double best_;
  double err_;
};

// ---------------------------------------------------------------------------
// Constants
// ---------------------------------------------------------------------------

namespace constants {
inline constexpr double pi = 3.14159265358979323846;
/// hbar*c in eV*angstrom.
inline constexpr double hbar_c_ev_angstrom = 1973.296;
/// 1 amu in eV/c^2 (931.494028 MeV/c^2).
inline constexpr double amu_ev = 931.494028e6;
}  // namespace constants

// ---------------------------------------------------------------------------
// Potential parameters
// ---------------------------------------------------------------------------

/// Coefficients of the exponential (approximated) form of the combined potential.
struct AlphaCoefficients {
  double alpha1;  ///< V1 + 2 delta V3
  double alpha2;  ///< V2
  double alpha3;  ///< -4 delta^2 V4

  friend bool operator==(const AlphaCoefficients&, const AlphaCoefficients&) = default;
};

/// Strengths of the Eckart plus class-of-Yukawa potential.
///
/// The Eckart range is locked to b = 1/(2 delta). V1 and V2 must be
/// non-negative (zero is allowed so the reduced potentials are reachable);
/// V3 and V4 may be negative, which is reported through
/// has_negative_yukawa() because the corresponding squared spectral
/// parameters change sign.
class PotentialParams {
 public:
  static PotentialParams make(double v1, double v2, double v3, double v4, double delta);

  double v1() const noexcept { return v1_; }
  double v2() const noexcept { return v2_; }
  double v3() const noexcept { return v3_; }
  double v4() const noexcept { return v4_; }
  double delta() const noexcept { return delta_; }
  double b() const noexcept { return 0.5 / delta_; }
  const AlphaCoefficients& alpha() const noexcept { return alpha_; }
  bool has_negative_yukawa() const noexcept { return v3_ < 0.0 || v4_ < 0.0; }

  /// Copy with a different screening parameter.
  PotentialParams with_delta(double delta) const;

  friend bool operator==(const PotentialParams&, const PotentialParams&) = default;

 private:
  PotentialParams(double v1, double v2, double v3, double v4, double delta);

  double v1_, v2_, v3_, v4_, delta_;
  AlphaCoefficients alpha_;
};

/// Free-function spelling of PotentialParams::make.
PotentialParams make_params(double v1, double v2, double v3, double v4, double delta);

/// Default strengths used throughout the reference results: V1 = 2 V2 = V3 = V4 = 4.
PotentialParams reference_params(double delta);

// ---------------------------------------------------------------------------
// Quantum numbers
// ---------------------------------------------------------------------------

struct QuantumNumbers {
  int n_r = 0;  ///< radial quantum number
  int l = 0;    ///< orbital quantum number
  int m = 0;    ///< magnetic quantum number, |m| <= l

  /// Principal quantum number n = n_r + l + 1.
  int n() const noexcept { return n_r + l + 1; }

  /// Validated construction.
  static QuantumNumbers make(int n_r, int l, int m = 0);

  /// Parses spectroscopic notation such as "1s", "4f" or "3d".
  static QuantumNumbers from_label(std::string_view label);

  /// Spectroscopic label, e.g. "2p".
  std::string label() const;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Letter used in spectroscopic notation for orbital number l (s, p, d, f, g, ...).
char orbital_letter(int l);

// ---------------------------------------------------------------------------
// Physical context
// ---------------------------------------------------------------------------

enum class UnitMode { natural, molecular };

/// Unit system and masses for a calculation.
///
/// In molecular mode the masses are rest energies in eV (mu = mu_amu * 931.494028 MeV)
/// and hbar_c = 1973.296 eV*angstrom, so hbar^2/mu = hbar_c^2 / mu in eV*angstrom^2.
struct PhysicalContext {
  double mass = 1.0;    ///< rest mass M (relativistic problem)
  double mu = 1.0;      ///< reduced mass (non-relativistic problem)
  double hbar_c = 1.0;  ///< hbar*c
  double k_b = 1.0;     ///< Boltzmann constant; S and C are reported in units of k_B
  UnitMode mode = UnitMode::natural;

  static PhysicalContext natural(double mass = 1.0, double mu = 1.0);
  static PhysicalContext molecular(double mu_amu);

  /// Throws DomainError unless mass, mu and hbar_c are positive.
  void validate() const;
};

}  // namespace kgb
