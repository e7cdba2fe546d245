#pragma once

#include "digrid/formulas.hpp"
#include "digrid/grid.hpp"
#include "digrid/int128.hpp"
#include "digrid/io.hpp"
#include "digrid/metrics.hpp"
#include "digrid/orientations.hpp"
#include "digrid/search.hpp"
