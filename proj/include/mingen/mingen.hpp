#pragma once

#include "mingen/algorithms.hpp"
#include "mingen/arith.hpp"
#include "mingen/error.hpp"
#include "mingen/fixtures.hpp"
#include "mingen/group.hpp"
#include "mingen/io.hpp"
#include "mingen/lifting.hpp"
#include "mingen/permutation.hpp"
#include "mingen/quotient.hpp"
#include "mingen/result.hpp"
#include "mingen/search.hpp"
#include "mingen/structure.hpp"
#include "mingen/subgroup.hpp"
