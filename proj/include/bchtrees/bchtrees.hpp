#pragma once

// Umbrella header.

#include "bchtrees/bch.hpp"
#include "bchtrees/bernoulli.hpp"
#include "bchtrees/posetted.hpp"
#include "bchtrees/rational.hpp"
#include "bchtrees/series.hpp"
#include "bchtrees/tree.hpp"
#include "bchtrees/verify.hpp"
