#pragma once

// Doubly periodic standing-wave asymptotics for the undamped cubic wave
// equation: coefficient-space algebra, the truncated diagonal solver, the
// elliptic closed form, and the assembled two-correction expansion.

#include "phi4sw/coeff_algebra.hpp"
#include "phi4sw/coeff_grid.hpp"
#include "phi4sw/diagonal_seq.hpp"
#include "phi4sw/elliptic.hpp"
#include "phi4sw/errors.hpp"
#include "phi4sw/galerkin.hpp"
#include "phi4sw/perturbation.hpp"
#include "phi4sw/real.hpp"
