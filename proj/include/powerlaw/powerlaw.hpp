#pragma once

// Interaction energies for attractive-repulsive power-law kernels:
// pairwise oracle, closed forms for simplex / cross-polytope / shell
// configurations, concavity-based lower bounds, simplex-transition
// threshold bounds, and particle-based minimization.

#include "powerlaw/bisect.hpp"
#include "powerlaw/bounds.hpp"
#include "powerlaw/closed_forms.hpp"
#include "powerlaw/cluster.hpp"
#include "powerlaw/energy.hpp"
#include "powerlaw/format.hpp"
#include "powerlaw/kernel.hpp"
#include "powerlaw/measure.hpp"
#include "powerlaw/minimize.hpp"
#include "powerlaw/params.hpp"
#include "powerlaw/rng.hpp"
#include "powerlaw/special_functions.hpp"
#include "powerlaw/threshold.hpp"
