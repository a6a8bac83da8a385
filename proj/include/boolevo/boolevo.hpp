#pragma once

// Umbrella header: the full library except the CLI front end (boolevo/cli.hpp),
// which additionally depends on the vendored CLI11.

#include "boolevo/bias_schedule.hpp"
#include "boolevo/bitstring.hpp"
#include "boolevo/crossover.hpp"
#include "boolevo/csv.hpp"
#include "boolevo/fitness.hpp"
#include "boolevo/ga.hpp"
#include "boolevo/mutation.hpp"
#include "boolevo/oracle.hpp"
#include "boolevo/random.hpp"
#include "boolevo/sweep.hpp"
#include "boolevo/truth_table.hpp"
#include "boolevo/walsh.hpp"
