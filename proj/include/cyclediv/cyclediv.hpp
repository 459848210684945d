#pragma once

#include "bench.hpp"
#include "errors.hpp"
#include "factorization.hpp"
#include "instance.hpp"
#include "json.hpp"
#include "numtheory.hpp"
#include "partitions.hpp"
#include "principal.hpp"
#include "solve.hpp"
#include "solvers.hpp"
#include "sum_of_cycles.hpp"
