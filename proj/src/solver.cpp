#include "archopt/solver.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

namespace archopt {

double SolverResult::utilization_of(const std::string& node_id) const {
    for (std::size_t i = 0; i < node_ids.size(); ++i)
        if (node_ids[i] == node_id)
            return node_utilization[i];
    return 0.0;
}

std::vector<Entry> build_queueing_model(const Architecture& arch) {
    std::unordered_map<std::string, const Operation*> ops;
    for (const auto& op : arch.operations)
        ops[op.id] = &op;

    std::vector<Entry> entries;
    for (std::size_t si = 0; si < arch.scenarios.size(); ++si) {
        const Scenario& s = arch.scenarios[si];
        for (std::size_t step = 0; step < s.steps.size(); ++step) {
            const Operation* op = ops.at(s.steps[step]);
            auto copies = arch.serving_components(op->owner);
            const double weight = 1.0 / static_cast<double>(copies.size());
            for (const Component* c : copies) {
                Entry e;
                e.scenario = si;
                e.step = step;
                e.operation = op->id;
                e.component = c->id;
                e.processor = arch.deployment.at(c->id);
                e.weight = weight;
                entries.push_back(std::move(e));
            }
        }
    }
    return entries;
}

SolverResult solve(const Architecture& arch) {
    SolverResult result;
    result.entries = build_queueing_model(arch);
    result.entry_utilization.resize(result.entries.size());

    std::unordered_map<std::string, std::size_t> node_index;
    result.node_ids.reserve(arch.nodes.size());
    for (const auto& n : arch.nodes) {
        node_index[n.id] = result.node_ids.size();
        result.node_ids.push_back(n.id);
    }
    result.node_utilization.assign(arch.nodes.size(), 0.0);

    std::unordered_map<std::string, double> speed;
    for (const auto& n : arch.nodes)
        speed[n.id] = arch.find_instance(n.instance)->speed_factor;
    std::unordered_map<std::string, double> demand;
    for (const auto& op : arch.operations)
        demand[op.id] = op.demand;

    for (std::size_t i = 0; i < result.entries.size(); ++i) {
        const Entry& e = result.entries[i];
        const double rate = arch.scenarios[e.scenario].arrival_rate;
        const double u = e.weight * rate * demand[e.operation] / (1000.0 * speed[e.processor]);
        result.entry_utilization[i] = u;
        result.node_utilization[node_index[e.processor]] += u;
    }

    result.feasible = true;
    for (double u : result.node_utilization)
        if (u >= 1.0 - kSaturationEps)
            result.feasible = false;

    const double inf = std::numeric_limits<double>::infinity();
    result.scenario_response.assign(arch.scenarios.size(), inf);
    result.system_response = inf;
    if (!result.feasible)
        return result;

    // Group the entries per (scenario, step) to evaluate residence times
    // and expected hop latencies under the replica dispatch weights.
    std::vector<std::vector<std::vector<const Entry*>>> per_step(arch.scenarios.size());
    for (std::size_t si = 0; si < arch.scenarios.size(); ++si)
        per_step[si].resize(arch.scenarios[si].steps.size());
    for (const Entry& e : result.entries)
        per_step[e.scenario][e.step].push_back(&e);

    for (std::size_t si = 0; si < arch.scenarios.size(); ++si) {
        double response = 0.0;
        for (std::size_t step = 0; step < per_step[si].size(); ++step) {
            for (const Entry* e : per_step[si][step]) {
                const double service = demand[e->operation] / speed[e->processor];
                const double busy = result.node_utilization[node_index[e->processor]];
                response += e->weight * service / (1.0 - busy);
            }
            if (step > 0) {
                for (const Entry* prev : per_step[si][step - 1]) {
                    for (const Entry* cur : per_step[si][step]) {
                        if (prev->processor == cur->processor)
                            continue;
                        response += prev->weight * cur->weight *
                                    arch.link_latency(prev->processor, cur->processor);
                    }
                }
            }
        }
        result.scenario_response[si] = response;
    }

    double total_rate = 0.0;
    for (const auto& s : arch.scenarios)
        total_rate += s.arrival_rate;
    double weighted = 0.0;
    if (total_rate > 0.0) {
        for (std::size_t si = 0; si < arch.scenarios.size(); ++si)
            weighted += arch.scenarios[si].arrival_rate * result.scenario_response[si];
        result.system_response = weighted / total_rate;
    } else if (!arch.scenarios.empty()) {
        // No load at all: fall back to the plain mean.
        for (double r : result.scenario_response)
            weighted += r;
        result.system_response = weighted / static_cast<double>(arch.scenarios.size());
    } else {
        result.system_response = 0.0;
    }
    return result;
}

}  // namespace archopt
