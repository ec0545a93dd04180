#pragma once

#include "stapulse/chs.hpp"
#include "stapulse/coefficients.hpp"
#include "stapulse/errors.hpp"
#include "stapulse/hamiltonian.hpp"
#include "stapulse/invariant.hpp"
#include "stapulse/io.hpp"
#include "stapulse/optimize.hpp"
#include "stapulse/propagate.hpp"
#include "stapulse/pulses.hpp"
#include "stapulse/state.hpp"
#include "stapulse/sweep.hpp"
#include "stapulse/units.hpp"
