#pragma once

// Umbrella header for the homcalc library: exact linear algebra over Q or
// F_p, finite-dimensional algebras and their modules, truncated
// differential graded algebras, hom-connections with curvature and
// homology, induction along DGA maps and differentiable bimodules, the
// comodule/contramodule dualities, and the q-deformed Laurent calculus.

#include "homcalc/builtins.hpp"
#include "homcalc/calculus.hpp"
#include "homcalc/connection.hpp"
#include "homcalc/coring.hpp"
#include "homcalc/duality.hpp"
#include "homcalc/induce.hpp"
#include "homcalc/qlaurent.hpp"
#include "homcalc/workspace.hpp"
