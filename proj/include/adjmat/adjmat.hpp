#pragma once

// Exact adjugates and determinants over commutative domains, computed by a
// fraction-free block recursion with a parallel task schedule. Umbrella
// header pulling in the whole library.

#include "adjmat/domain.hpp"
#include "adjmat/element.hpp"
#include "adjmat/errors.hpp"
#include "adjmat/identities.hpp"
#include "adjmat/ints.hpp"
#include "adjmat/matrix.hpp"
#include "adjmat/matrix_io.hpp"
#include "adjmat/oracle.hpp"
#include "adjmat/paradj.hpp"
#include "adjmat/polynomial.hpp"
#include "adjmat/precondition.hpp"
#include "adjmat/rng.hpp"
#include "adjmat/stats.hpp"
