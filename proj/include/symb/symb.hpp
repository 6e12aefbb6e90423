#pragma once

#include "symb/capacities.hpp"
#include "symb/domain.hpp"
#include "symb/error.hpp"
#include "symb/folding.hpp"
#include "symb/lagrangian.hpp"
#include "symb/packing.hpp"
#include "symb/problems.hpp"
#include "symb/rational.hpp"
#include "symb/sweep.hpp"
