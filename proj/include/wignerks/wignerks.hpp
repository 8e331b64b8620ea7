#pragma once

// Umbrella header: the exact operator algebra, the closed-form special
// functions, the 4D-to-3D coordinate geometry, the finite-difference
// spectral oracle, and the oscillator-to-Coulomb mapping.

#include "wignerks/algebra_checks.hpp"
#include "wignerks/channels.hpp"
#include "wignerks/errors.hpp"
#include "wignerks/ext_scalar.hpp"
#include "wignerks/gaussian_poly.hpp"
#include "wignerks/hydrogen_map.hpp"
#include "wignerks/ks_geometry.hpp"
#include "wignerks/laguerre.hpp"
#include "wignerks/moments.hpp"
#include "wignerks/parallel.hpp"
#include "wignerks/quadrature.hpp"
#include "wignerks/radial_functions.hpp"
#include "wignerks/radial_grid.hpp"
#include "wignerks/rational.hpp"
#include "wignerks/rng.hpp"
#include "wignerks/spectrum_report.hpp"
#include "wignerks/spherical_harmonics.hpp"
#include "wignerks/spinor_poly.hpp"
#include "wignerks/sturm_liouville.hpp"
#include "wignerks/tridiagonal.hpp"
#include "wignerks/wigner_algebra.hpp"
