#pragma once

// Umbrella header for the whole library.

#include "jsum/bounds.hpp"
#include "jsum/errors.hpp"
#include "jsum/experiments.hpp"
#include "jsum/geometry.hpp"
#include "jsum/gliding_hump.hpp"
#include "jsum/jnorm.hpp"
#include "jsum/jvector.hpp"
#include "jsum/operator_norm.hpp"
#include "jsum/pexponent.hpp"
#include "jsum/serialization.hpp"
#include "jsum/subspace.hpp"
#include "jsum/vec.hpp"
