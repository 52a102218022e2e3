#include "archopt/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace archopt {

std::string describe(const std::vector<Violation>& violations) {
    std::ostringstream out;
    out << violations.size() << " validation violation" << (violations.size() == 1 ? "" : "s");
    for (const auto& v : violations)
        out << "\n  [" << v.rule << "] " << v.element;
    return out.str();
}

namespace {

template <typename T>
const T* find_by_id(const std::vector<T>& items, const std::string& id) {
    for (const auto& item : items)
        if (item.id == id)
            return &item;
    return nullptr;
}

}  // namespace

const InstanceType* Architecture::find_instance(const std::string& name) const {
    for (const auto& it : catalog)
        if (it.name == name)
            return &it;
    return nullptr;
}

const Node* Architecture::find_node(const std::string& id) const {
    return find_by_id(nodes, id);
}

const Component* Architecture::find_component(const std::string& id) const {
    return find_by_id(components, id);
}

const Operation* Architecture::find_operation(const std::string& id) const {
    return find_by_id(operations, id);
}

const Scenario* Architecture::find_scenario(const std::string& id) const {
    return find_by_id(scenarios, id);
}

const Node* Architecture::node_of(const std::string& component_id) const {
    auto it = deployment.find(component_id);
    if (it == deployment.end())
        return nullptr;
    return find_node(it->second);
}

std::vector<const Component*> Architecture::serving_components(const std::string& owner_id) const {
    std::vector<const Component*> out;
    for (const auto& c : components)
        if (c.id == owner_id || c.replica_of == owner_id)
            out.push_back(&c);
    return out;
}

bool Architecture::node_used(const std::string& node_id) const {
    for (const auto& [component, node] : deployment)
        if (node == node_id)
            return true;
    return false;
}

std::vector<std::string> Architecture::neighbors(const std::string& node_id) const {
    std::vector<std::string> out;
    for (const auto& l : links) {
        if (l.a == node_id)
            out.push_back(l.b);
        else if (l.b == node_id)
            out.push_back(l.a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double Architecture::link_latency(const std::string& a, const std::string& b) const {
    for (const auto& l : links)
        if ((l.a == a && l.b == b) || (l.a == b && l.b == a))
            return l.latency;
    return 0.0;
}

namespace {

bool finite_nonneg(double x) {
    return std::isfinite(x) && x >= 0.0;
}

}  // namespace

std::vector<Violation> validate(const Architecture& arch) {
    std::vector<Violation> out;
    auto add = [&out](const std::string& element, const std::string& rule) {
        out.push_back({element, rule});
    };

    std::unordered_set<std::string> instance_names;
    for (const auto& it : arch.catalog) {
        if (!instance_names.insert(it.name).second)
            add(it.name, "duplicate instance name");
        if (!std::isfinite(it.speed_factor) || it.speed_factor <= 0.0)
            add(it.name, "non-positive speed factor");
        if (!finite_nonneg(it.power_max))
            add(it.name, "negative power_max");
        if (!finite_nonneg(it.cost))
            add(it.name, "negative cost");
    }

    std::unordered_set<std::string> node_ids;
    for (const auto& n : arch.nodes) {
        if (!node_ids.insert(n.id).second)
            add(n.id, "duplicate node id");
        if (!arch.find_instance(n.instance))
            add(n.id, "unknown instance type");
    }
    if (arch.nodes.empty())
        add("architecture", "no nodes");

    std::unordered_set<std::string> component_ids;
    for (const auto& c : arch.components) {
        if (!component_ids.insert(c.id).second)
            add(c.id, "duplicate component id");
    }
    for (const auto& c : arch.components) {
        if (c.replica_of.empty())
            continue;
        const Component* root = arch.find_component(c.replica_of);
        if (!root || root->id == c.id)
            add(c.id, "unknown replica target");
        else if (!root->replica_of.empty())
            add(c.id, "replica of a replica");
    }

    std::unordered_set<std::string> operation_ids;
    for (const auto& op : arch.operations) {
        if (!operation_ids.insert(op.id).second)
            add(op.id, "duplicate operation id");
        if (!component_ids.count(op.owner))
            add(op.id, "unknown owner component");
        if (!finite_nonneg(op.demand))
            add(op.id, "negative demand");
    }

    std::set<std::pair<std::string, std::string>> seen_links;
    for (const auto& l : arch.links) {
        if (l.a == l.b)
            add(l.a, "self link");
        if (!node_ids.count(l.a))
            add(l.a, "unknown link endpoint");
        if (!node_ids.count(l.b))
            add(l.b, "unknown link endpoint");
        if (!finite_nonneg(l.latency))
            add(l.a + "--" + l.b, "negative latency");
        auto key = std::minmax(l.a, l.b);
        if (!seen_links.insert(key).second)
            add(l.a + "--" + l.b, "duplicate link");
    }

    for (const auto& c : arch.components) {
        auto it = arch.deployment.find(c.id);
        if (it == arch.deployment.end())
            add(c.id, "undeployed component");
        else if (!node_ids.count(it->second))
            add(c.id, "unknown deployment node");
    }
    for (const auto& [component, node] : arch.deployment) {
        if (!component_ids.count(component))
            add(component, "unknown deployment component");
    }

    std::unordered_set<std::string> scenario_ids;
    for (const auto& s : arch.scenarios) {
        if (!scenario_ids.insert(s.id).second)
            add(s.id, "duplicate scenario id");
        if (!finite_nonneg(s.arrival_rate))
            add(s.id, "negative arrival rate");
        if (s.steps.empty())
            add(s.id, "empty scenario");
        for (const auto& step : s.steps)
            if (!operation_ids.count(step))
                add(s.id + "/" + step, "dangling operation reference");
    }

    return out;
}

std::map<std::string, double> component_affinity(const Architecture& arch,
                                                 const std::string& component_id) {
    if (!arch.find_component(component_id))
        throw std::invalid_argument("unknown component id: " + component_id);

    std::unordered_map<std::string, std::string> owner_of;  // operation -> component
    for (const auto& op : arch.operations)
        owner_of[op.id] = op.owner;

    const Node* home = arch.node_of(component_id);
    const std::string home_id = home ? home->id : std::string();

    std::map<std::string, double> out;
    for (const auto& s : arch.scenarios) {
        for (std::size_t i = 0; i + 1 < s.steps.size(); ++i) {
            const std::string& ca = owner_of[s.steps[i]];
            const std::string& cb = owner_of[s.steps[i + 1]];
            const std::string* other = nullptr;
            if (ca == component_id && cb != component_id)
                other = &cb;
            else if (cb == component_id && ca != component_id)
                other = &ca;
            if (!other)
                continue;
            const Node* other_node = arch.node_of(*other);
            if (!other_node || other_node->id == home_id)
                continue;
            out[other_node->id] += s.arrival_rate;
        }
    }
    return out;
}

std::vector<InstanceType> builtin_catalog() {
    return {
        {"d2.2xlarge", 4.67, 83.4, 0.46},
        {"m6i.xlarge", 3.48, 32.4, 0.13},
        {"t2.medium", 2.33, 14.1, 0.03},
        {"t2.micro", 1.17, 6.40, 0.004},
        {"m5ad.xlarge", 1.14, 29.9, 0.25},
    };
}

}  // namespace archopt
