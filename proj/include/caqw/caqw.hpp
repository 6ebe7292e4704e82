// caqw.hpp — umbrella header for the controlled alternate quantum walk
// hash library.

#pragma once

#include "caqw/coin.hpp"
#include "caqw/dense.hpp"
#include "caqw/digest.hpp"
#include "caqw/lattice.hpp"
#include "caqw/message.hpp"
#include "caqw/params.hpp"
#include "caqw/report_io.hpp"
#include "caqw/rng.hpp"
#include "caqw/state.hpp"
#include "caqw/stats.hpp"
