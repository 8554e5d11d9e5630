#pragma once

// Umbrella header for the whole toolkit.

#include "harmonic/analytic.hpp"
#include "harmonic/conformal.hpp"
#include "harmonic/csv.hpp"
#include "harmonic/fft.hpp"
#include "harmonic/hcorr.hpp"
#include "harmonic/operators.hpp"
#include "harmonic/spectrum.hpp"
#include "harmonic/svg.hpp"
#include "harmonic/types.hpp"
