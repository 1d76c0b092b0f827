#include "kgbound/core.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace kgb {

PotentialParams::PotentialParams(double v1, double v2, double v3, double v4, double delta)
    : v1_(v1),
      v2_(v2),
      v3_(v3),
      v4_(v4),
      delta_(delta),
      alpha_{v1 + 2.0 * delta * v3, v2, -4.0 * delta * delta * v4} {}

PotentialParams PotentialParams::make(double v1, double v2, double v3, double v4, double delta) {
  for (double v : {v1, v2, v3, v4, delta}) {
    if (!std::isfinite(v)) throw DomainError("potential parameters must be finite");
  }
  if (!(delta > 0.0)) {
    throw DomainError("screening parameter delta must be positive, got " + std::to_string(delta));
  }
  if (v1 < 0.0 || v2 < 0.0) {
    throw DomainError("Eckart strengths V1, V2 must be non-negative");
  }
  return PotentialParams(v1, v2, v3, v4, delta);
}

PotentialParams PotentialParams::with_delta(double delta) const {
  return make(v1_, v2_, v3_, v4_, delta);
}

PotentialParams make_params(double v1, double v2, double v3, double v4, double delta) {
  return PotentialParams::make(v1, v2, v3, v4, delta);
}

PotentialParams reference_params(double delta) { return make_params(4.0, 2.0, 4.0, 4.0, delta); }

QuantumNumbers QuantumNumbers::make(int n_r, int l, int m) {
  if (n_r < 0) throw DomainError("radial quantum number must be non-negative");
  if (l < 0) throw DomainError("orbital quantum number must be non-negative");
  if (m < -l || m > l) throw DomainError("magnetic quantum number must satisfy |m| <= l");
  return QuantumNumbers{n_r, l, m};
}

namespace {
constexpr std::string_view kOrbitalLetters = "spdfghiklmnoqrtuv";
}

char orbital_letter(int l) {
  if (l < 0 || l >= static_cast<int>(kOrbitalLetters.size())) {
    throw DomainError("no spectroscopic letter for l = " + std::to_string(l));
  }
  return kOrbitalLetters[static_cast<std::size_t>(l)];
}

QuantumNumbers QuantumNumbers::from_label(std::string_view label) {
  if (label.size() < 2) throw DomainError("malformed state label '" + std::string(label) + "'");
  int n = 0;
  const char* first = label.data();
  const char* last = label.data() + label.size() - 1;
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc{} || ptr != last || n < 1) {
    throw DomainError("malformed state label '" + std::string(label) + "'");
  }
  const char letter = static_cast<char>(std::tolower(static_cast<unsigned char>(label.back())));
  const auto pos = kOrbitalLetters.find(letter);
  if (pos == std::string_view::npos) {
    throw DomainError("unknown orbital letter in '" + std::string(label) + "'");
  }
  const int l = static_cast<int>(pos);
  if (n < l + 1) throw DomainError("label '" + std::string(label) + "' needs n >= l + 1");
  return make(n - l - 1, l, 0);
}

std::string QuantumNumbers::label() const { return std::to_string(n()) + orbital_letter(l); }

PhysicalContext PhysicalContext::natural(double mass, double mu) {
  PhysicalContext ctx{mass, mu, 1.0, 1.0, UnitMode::natural};
  ctx.validate();
  return ctx;
}

PhysicalContext PhysicalContext::molecular(double mu_amu) {
  PhysicalContext ctx{mu_amu * constants::amu_ev, mu_amu * constants::amu_ev,
                      constants::hbar_c_ev_angstrom, 1.0, UnitMode::molecular};
  ctx.validate();
  return ctx;
}

void PhysicalContext::validate() const {
  if (!(mass > 0.0)) throw DomainError("rest mass must be positive");
  if (!(mu > 0.0)) throw DomainError("reduced mass must be positive");
  if (!(hbar_c > 0.0)) throw DomainError("hbar*c must be positive");
  if (!(k_b > 0.0)) throw DomainError("Boltzmann constant must be positive");
}

}  // namespace kgb
