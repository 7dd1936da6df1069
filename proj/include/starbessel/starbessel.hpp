#pragma once

#include "starbessel/critical.hpp"
#include "starbessel/errors.hpp"
#include "starbessel/expansions.hpp"
#include "starbessel/geometry.hpp"
#include "starbessel/special_fn.hpp"
#include "starbessel/zeros.hpp"
