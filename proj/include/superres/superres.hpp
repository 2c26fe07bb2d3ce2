#pragma once

// Umbrella header for the superres engine.

#include "superres/blockdata.hpp"
#include "superres/diagrams.hpp"
#include "superres/dimensions.hpp"
#include "superres/evensystems.hpp"
#include "superres/family.hpp"
#include "superres/growth.hpp"
#include "superres/loperator.hpp"
#include "superres/numeric.hpp"
#include "superres/resolutions.hpp"
#include "superres/rootdata.hpp"
#include "superres/verify.hpp"
#include "superres/weight.hpp"
