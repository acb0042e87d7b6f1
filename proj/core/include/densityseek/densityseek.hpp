#pragma once

// Umbrella header for the densityseek core library.

#include "densityseek/bench.hpp"
#include "densityseek/bitstream.hpp"
#include "densityseek/counters.hpp"
#include "densityseek/distance.hpp"
#include "densityseek/io.hpp"
#include "densityseek/lattice.hpp"
#include "densityseek/loglinear.hpp"
#include "densityseek/mapping_matrix.hpp"
#include "densityseek/oracle.hpp"
#include "densityseek/random.hpp"
#include "densityseek/ratio.hpp"
#include "densityseek/solve.hpp"
#include "densityseek/span.hpp"
#include "densityseek/sweep.hpp"
