#pragma once

#include <string>
#include <vector>

#include "elastica/classify.hpp"
#include "elastica/curve.hpp"
#include "elastica/energy.hpp"
#include "elastica/flow.hpp"
#include "elastica/stability.hpp"

namespace elastica::io {

// All writers emit a fixed key order and 17-significant-digit floats, so
// identical inputs produce byte-identical documents. Non-finite values
// (the segment's unset modulus) serialize as null.
std::string format_double(double v);

std::string constants_json();

std::string catalogue_json(const classify::ProblemParams& p, int n_max,
                           const std::vector<classify::CriticalPoint>& entries);

std::string curve_csv(const curve::PlanarCurve& c);

std::string curve_json(const classify::CriticalPoint& cp,
                       const classify::ProblemParams& p,
                       const curve::PlanarCurve& c);

std::string energy_table_csv(const classify::ProblemParams& p,
                             const std::vector<classify::CriticalPoint>& entries);

std::string comparison_json(const classify::ProblemParams& p,
                            const energy::ComparisonReport& rep);

std::string stability_json(const classify::ProblemParams& p,
                           const std::vector<classify::CriticalPoint>& entries);

std::string crossover_json(double ell, double lambda_dagger);

// One JSONL record per sample time: {"t":..,"energy":..,"intersections":..,
// "nodes":[[x,y],...]}
std::string trajectory_record(const flow::FlowState& s,
                              const flow::FlowDiagnostics& d);

std::string outcome_json(const flow::FlowOutcome& out);

}  // namespace elastica::io
