#pragma once

// Umbrella header: exact truncated q-series arithmetic over GMP integers,
// partition-number oracles, the modulus-7 determinant construction with its
// identity suite, the general-modulus construction, JSON (de)serialization
// and the command-line front end.

#include "qpart/integers.hpp"
#include "qpart/series.hpp"
#include "qpart/polynomial.hpp"
#include "qpart/partition.hpp"
#include "qpart/verify.hpp"
#include "qpart/ramanujan7.hpp"
#include "qpart/det.hpp"
#include "qpart/general_mod.hpp"
#include "qpart/json_io.hpp"
#include "qpart/catalog.hpp"
#include "qpart/cli.hpp"
