#pragma once

#include "epc/models/hamiltonians.hpp"
#include "epc/rational.hpp"

#include <vector>

namespace epc {

/// Hierarchical perturbation whose leading secular polynomial has exactly
/// the target roots. Subdiagonal k gets a single parameter at (N, N-k).
/// Throws InvalidArgument("unreachable: zero-trace constraint") when the
/// roots do not sum to zero.
PerturbationSpec design_perturbation(const std::vector<Rational>& roots);

}  // namespace epc
