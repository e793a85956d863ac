#pragma once

// Umbrella header: the whole library in dependency order.

#include "numeric.hpp"
#include "errors.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "bijections.hpp"
#include "statistics.hpp"
#include "series.hpp"
#include "genfun.hpp"
#include "closedforms.hpp"
#include "json_io.hpp"
#include "render.hpp"
#include "oeis.hpp"
#include "cache.hpp"
#include "verify.hpp"
