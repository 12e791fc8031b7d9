#pragma once

#include "omdp/analysis.hpp"
#include "omdp/campaign.hpp"
#include "omdp/cdcl.hpp"
#include "omdp/chirotope.hpp"
#include "omdp/cnf.hpp"
#include "omdp/combinatorics.hpp"
#include "omdp/encoder.hpp"
#include "omdp/errors.hpp"
#include "omdp/fixtures.hpp"
#include "omdp/paths.hpp"
#include "omdp/program.hpp"
#include "omdp/solver.hpp"
