#pragma once

// Hamming shells in hypercubes: perfect-code construction, certified cycle
// embedding, and connectivity verification.

#include "hsk/certify.hpp"
#include "hsk/connectivity.hpp"
#include "hsk/cycle.hpp"
#include "hsk/cycles.hpp"
#include "hsk/domination.hpp"
#include "hsk/engine.hpp"
#include "hsk/error.hpp"
#include "hsk/gf2.hpp"
#include "hsk/glue.hpp"
#include "hsk/hypercube.hpp"
#include "hsk/json_io.hpp"
