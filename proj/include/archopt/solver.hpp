#ifndef ARCHOPT_SOLVER_HPP
#define ARCHOPT_SOLVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "archopt/model.hpp"

namespace archopt {

/// One scenario step bound to a serving component and its processor.
///
/// A step normally yields exactly one entry. When the owning component has
/// replicas (node cloning), the step yields one entry per copy and the
/// traffic splits evenly among them via `weight`.
struct Entry {
    std::size_t scenario = 0;   // index into Architecture::scenarios
    std::size_t step = 0;       // index into Scenario::steps
    std::string operation;      // Operation id
    std::string component;      // serving component id (owner or replica)
    std::string processor;      // node id the serving component is deployed on
    double weight = 1.0;        // share of the step's traffic, sums to 1 per step
};

struct SolverResult {
    std::vector<Entry> entries;
    std::vector<double> entry_utilization;       // parallel to entries
    std::vector<std::string> node_ids;           // parallel to node_utilization
    std::vector<double> node_utilization;        // raw demand/capacity ratio, may exceed 1
    std::vector<double> scenario_response;       // ms, parallel to Architecture::scenarios
    double system_response = 0.0;                // ms, arrival-rate-weighted mean
    bool feasible = true;

    double utilization_of(const std::string& node_id) const;
};

/// Feasibility margin: a node is saturated when U >= 1 - kSaturationEps.
inline constexpr double kSaturationEps = 1e-6;

/// One entry per scenario step and serving component; processors follow
/// the deployment map.
std::vector<Entry> build_queueing_model(const Architecture& arch);

/// Open multiclass M/M/1 per node with additive cross-node link latency.
///
/// U_{e,p} = weight * rate * demand / (1000 * speed_factor(p)); U_p is the
/// sum over the node's entries. While every node is below saturation, a
/// step's residence time is (demand/speed)/(1 - U_p) and a scenario's
/// response adds the expected link latency of each consecutive-step hop.
/// Saturation flips `feasible` and sets every response to +infinity; the
/// utilizations stay available for power accounting.
SolverResult solve(const Architecture& arch);

}  // namespace archopt

#endif
