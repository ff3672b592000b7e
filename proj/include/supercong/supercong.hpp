#pragma once

// Umbrella header.

#include "error.hpp"
#include "rational.hpp"
#include "valuation.hpp"
#include "combinatorics.hpp"
#include "power_series.hpp"
#include "hypergeometric.hpp"
#include "gamma_ratio.hpp"
#include "identities.hpp"
#include "modular_form.hpp"
#include "harness.hpp"
#include "report.hpp"
#include "cli.hpp"
