#pragma once

#include "fracosc/approx.hpp"
#include "fracosc/calibration.hpp"
#include "fracosc/charroot.hpp"
#include "fracosc/csv.hpp"
#include "fracosc/diagnostics.hpp"
#include "fracosc/equiv.hpp"
#include "fracosc/fdm.hpp"
#include "fracosc/response.hpp"
#include "fracosc/scenario.hpp"
#include "fracosc/series.hpp"
#include "fracosc/specfun.hpp"
#include "fracosc/types.hpp"
