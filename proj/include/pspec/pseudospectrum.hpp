#pragma once

// Pseudospectra as resolvent-norm sublevel sets on a grid.

#include "pspec/contour.hpp"
#include "pspec/region.hpp"
#include "pspec/witness.hpp"
