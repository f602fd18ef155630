#pragma once

#include "permuto/counting.hpp"
#include "permuto/errors.hpp"
#include "permuto/exact.hpp"
#include "permuto/expansion.hpp"
#include "permuto/fan.hpp"
#include "permuto/formulas.hpp"
#include "permuto/localization.hpp"
#include "permuto/parallel.hpp"
#include "permuto/permutation.hpp"
#include "permuto/reduction.hpp"
