#pragma once

// Quantum wave mixing on a cascaded source-probe pair of two-level systems:
// stationary cascaded linear problem, weak-drive perturbative expansion,
// exact phase-sampled solves, a time-domain oracle, and the closed-form
// side-peak amplitudes with their suppression laws.

#include "qwm/types.hpp"
#include "qwm/params.hpp"
#include "qwm/state.hpp"
#include "qwm/cascaded_system.hpp"
#include "qwm/equations.hpp"
#include "qwm/drive_series.hpp"
#include "qwm/neumann.hpp"
#include "qwm/analytics.hpp"
#include "qwm/stationary.hpp"
#include "qwm/ode.hpp"
#include "qwm/io.hpp"
