#pragma once

// Exact computation with maximal commutative subrings of matrix rings over
// division rings: scalar arithmetic for Q, F_p and rational quaternions,
// noncommutative linear algebra, centralizers, radicals, local
// decomposition and brute-force enumeration oracles.

#include "maxcomm/centralizer.hpp"
#include "maxcomm/constructions.hpp"
#include "maxcomm/domains.hpp"
#include "maxcomm/errors.hpp"
#include "maxcomm/linear.hpp"
#include "maxcomm/matrix.hpp"
#include "maxcomm/oracle.hpp"
#include "maxcomm/polynomial.hpp"
#include "maxcomm/prime_field.hpp"
#include "maxcomm/quaternion.hpp"
#include "maxcomm/rational.hpp"
#include "maxcomm/sampling.hpp"
#include "maxcomm/subalgebra.hpp"
#include "maxcomm/zsubspace.hpp"
