#pragma once

// Umbrella header: the whole library.

#include "mwroute/ahp.hpp"
#include "mwroute/baseline.hpp"
#include "mwroute/chromosome.hpp"
#include "mwroute/costs.hpp"
#include "mwroute/covid.hpp"
#include "mwroute/errors.hpp"
#include "mwroute/ga.hpp"
#include "mwroute/instance.hpp"
#include "mwroute/instance_io.hpp"
#include "mwroute/objective.hpp"
#include "mwroute/oracle.hpp"
#include "mwroute/report.hpp"
#include "mwroute/risk.hpp"
#include "mwroute/schedule.hpp"
#include "mwroute/svg.hpp"
#include "mwroute/transport_cost.hpp"
