#pragma once

#include "lusztig/algebra.hpp"
#include "lusztig/error.hpp"
#include "lusztig/ffield.hpp"
#include "lusztig/liealg.hpp"
#include "lusztig/lusztig.hpp"
#include "lusztig/matrix.hpp"
#include "lusztig/orbits.hpp"
#include "lusztig/padic.hpp"
#include "lusztig/qforms.hpp"
#include "lusztig/triangular.hpp"
