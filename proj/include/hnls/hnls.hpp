#pragma once

#include "hnls/extremals.hpp"
#include "hnls/fft.hpp"
#include "hnls/io.hpp"
#include "hnls/lattice.hpp"
#include "hnls/nls.hpp"
#include "hnls/parallel.hpp"
#include "hnls/picard.hpp"
#include "hnls/propagator.hpp"
#include "hnls/report.hpp"
#include "hnls/resonance.hpp"
#include "hnls/rng.hpp"
#include "hnls/spectrum.hpp"
#include "hnls/sweep.hpp"
#include "hnls/types.hpp"
