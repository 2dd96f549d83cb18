#pragma once

#include "mixq/classifier.hpp"
#include "mixq/distribution.hpp"
#include "mixq/errors.hpp"
#include "mixq/extended_real.hpp"
#include "mixq/io.hpp"
#include "mixq/mixture.hpp"
#include "mixq/number.hpp"
#include "mixq/split_solver.hpp"
#include "mixq/verification.hpp"
