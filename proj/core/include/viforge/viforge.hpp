#pragma once

#include "viforge/config.hpp"
#include "viforge/diagnostics.hpp"
#include "viforge/io.hpp"
#include "viforge/problems.hpp"
#include "viforge/projections.hpp"
#include "viforge/run.hpp"
#include "viforge/signal.hpp"
#include "viforge/solvers.hpp"
#include "viforge/types.hpp"
