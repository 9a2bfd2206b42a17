#pragma once

#include "curvelab/analysis.hpp"
#include "curvelab/classify.hpp"
#include "curvelab/curve.hpp"
#include "curvelab/elimination.hpp"
#include "curvelab/error.hpp"
#include "curvelab/factor.hpp"
#include "curvelab/generators.hpp"
#include "curvelab/git.hpp"
#include "curvelab/json_io.hpp"
#include "curvelab/lct.hpp"
#include "curvelab/linear_change.hpp"
#include "curvelab/mpoly.hpp"
#include "curvelab/number_field.hpp"
#include "curvelab/parse.hpp"
#include "curvelab/rational.hpp"
#include "curvelab/regression_suite.hpp"
#include "curvelab/resolution.hpp"
#include "curvelab/surface.hpp"
