#pragma once

#include "cumskew/distributions.hpp"
#include "cumskew/error.hpp"
#include "cumskew/experiments.hpp"
#include "cumskew/lorenz.hpp"
#include "cumskew/random.hpp"
#include "cumskew/sample.hpp"
#include "cumskew/skew.hpp"
#include "cumskew/summation.hpp"
