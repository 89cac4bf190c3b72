#pragma once

// Umbrella header for the whole library.

#include "nfct/errors.hpp"
#include "nfct/homological.hpp"
#include "nfct/matrix.hpp"
#include "nfct/normalform.hpp"
#include "nfct/polyvec.hpp"
#include "nfct/problem.hpp"
#include "nfct/rational.hpp"
#include "nfct/subspace.hpp"
#include "nfct/symmetry.hpp"
#include "nfct/transversal.hpp"
