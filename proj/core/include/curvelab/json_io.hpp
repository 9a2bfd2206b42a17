#pragma once

#include <nlohmann/json.hpp>

#include "curvelab/classify.hpp"
#include "curvelab/error.hpp"
#include "curvelab/git.hpp"
#include "curvelab/surface.hpp"

namespace curvelab {

using Json = nlohmann::json;

/// Rationals and field elements are written as exact strings ("p/q").
Json to_json(const Rational& q);
Json to_json(const FieldElement& x);
Json to_json(const FieldPtr& field);
Json to_json(const MPoly& p);
Json to_json(const Matrix& m);
Json to_json(const ProjPoint& p);
Json to_json(const PlaneCurve& c);
Json to_json(const SurfaceForm& s);
Json to_json(const SingularLocus& locus);
Json to_json(const ResolutionTree& t);
Json to_json(const EquisingularityType& e);
Json to_json(const LctReport& r);
Json to_json(const GlobalLct& g);
Json to_json(const ThresholdClass& t);
Json to_json(const SingularityClass& k);
Json to_json(const PloskiReport& r);
Json to_json(const WeightVector& w);
Json to_json(const Flag& f);
Json to_json(const StabilityVerdict& v);
Json to_json(const AlphaProbeReport& r);
Json error_json(const Error& e);

/// Adds "<key>_approx" decimal siblings next to exact rational strings.
void add_approximations(Json& j);

}  // namespace curvelab
