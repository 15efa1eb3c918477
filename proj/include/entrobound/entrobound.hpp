#pragma once

// Umbrella header: entropic lower bounds on the tripartite entanglement of
// formation from density matrices, measured correlations, and triple-Gaussian
// photon-triplet models, plus N-partite and GHZ-element witnesses.

#include "entrobound/core.hpp"
#include "entrobound/matrix.hpp"
#include "entrobound/state.hpp"
#include "entrobound/entropy.hpp"
#include "entrobound/states.hpp"
#include "entrobound/measurement.hpp"
#include "entrobound/witness.hpp"
#include "entrobound/npartite.hpp"
#include "entrobound/element_bound.hpp"
#include "entrobound/gaussian.hpp"
#include "entrobound/sweep.hpp"
#include "entrobound/io.hpp"
#include "entrobound/version.hpp"
