// Umbrella header for the whole library.
#pragma once

#include "cadence/anchored.hpp"
#include "cadence/convolve.hpp"
#include "cadence/oracle.hpp"
#include "cadence/text.hpp"
#include "cadence/three_cadence.hpp"
