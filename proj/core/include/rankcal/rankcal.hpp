#pragma once

// Umbrella header for the rankcal core library: estimation, calibration,
// and ranking-uncertainty analysis of nonreciprocal pairwise comparison
// matrices.

#include "rankcal/calibration.hpp"
#include "rankcal/errors.hpp"
#include "rankcal/estimation.hpp"
#include "rankcal/experiments.hpp"
#include "rankcal/matrix.hpp"
#include "rankcal/matrix_io.hpp"
#include "rankcal/projection.hpp"
#include "rankcal/random.hpp"
#include "rankcal/scores.hpp"
#include "rankcal/structure.hpp"
#include "rankcal/synth.hpp"
#include "rankcal/uncertainty.hpp"
