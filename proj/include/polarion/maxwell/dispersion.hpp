#pragma once

#include <vector>

#include "polarion/maxwell/medium.hpp"

namespace polarion::maxwell {

// All roots omega of the bulk polariton dispersion at wavenumber k (1/nm):
//   k^2 (hbar c)^2 (w0^2 - 2 i gx w - w^2) =
//       w^2 ((eps_b + i eps_bI)(w0^2 - 2 i gx w - w^2) + alpha^2 / rho)
// computed as companion-matrix eigenvalues of the quartic. Lossless media
// give two symmetric pairs of real branches.
std::vector<cplx> bulk_polariton_dispersion(double k, const LorentzMedium& m);

// Residual of the dispersion polynomial at omega (for verification).
cplx dispersion_residual(double k, const LorentzMedium& m, cplx omega);

}  // namespace polarion::maxwell
