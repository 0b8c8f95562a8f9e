#pragma once

#include "bernstein/coeff_vec.hpp"
#include "bernstein/core.hpp"
#include "bernstein/errors.hpp"
#include "bernstein/functionals.hpp"
#include "bernstein/kernels.hpp"
#include "bernstein/limits.hpp"
#include "bernstein/operators.hpp"
#include "bernstein/optimizer.hpp"
#include "bernstein/oracle.hpp"
#include "bernstein/random.hpp"
#include "bernstein/sinc.hpp"
#include "bernstein/symbol.hpp"
