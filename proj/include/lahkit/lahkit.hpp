#pragma once

#include "lahkit/bigint.hpp"
#include "lahkit/numbers.hpp"
#include "lahkit/oracle.hpp"
#include "lahkit/polynomial.hpp"
#include "lahkit/recurrences.hpp"
#include "lahkit/table_io.hpp"
#include "lahkit/transition.hpp"
#include "lahkit/types.hpp"
