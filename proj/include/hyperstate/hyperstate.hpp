#pragma once

#include "hyperstate/coherence.hpp"
#include "hyperstate/error.hpp"
#include "hyperstate/fft.hpp"
#include "hyperstate/hypergraph.hpp"
#include "hyperstate/moments.hpp"
#include "hyperstate/operators.hpp"
#include "hyperstate/plot.hpp"
#include "hyperstate/reproduce.hpp"
#include "hyperstate/squeezing.hpp"
#include "hyperstate/state.hpp"
#include "hyperstate/sweep.hpp"
