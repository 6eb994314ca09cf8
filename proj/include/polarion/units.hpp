#pragma once

// Internal unit system: hbar = 1, energies and frequencies in meV,
// lengths in nm, eps0 = 1. Coupling density alpha and mass density rho
// are expressed in units consistent with these choices.
namespace polarion::units {

inline constexpr double hbar_c = 197327.0;  // meV * nm
inline constexpr double eps0 = 1.0;

}  // namespace polarion::units
