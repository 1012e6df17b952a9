#pragma once

// Dense complex linear algebra: matrix type, factorizations, ensembles.

#include "pspec/eigen.hpp"
#include "pspec/matrix.hpp"
#include "pspec/predicates.hpp"
#include "pspec/random.hpp"
#include "pspec/svd.hpp"
