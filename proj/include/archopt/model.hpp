#ifndef ARCHOPT_MODEL_HPP
#define ARCHOPT_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "archopt/errors.hpp"

namespace archopt {

/// Cloud instance type: CPU speed multiplier, peak power draw, hourly price.
struct InstanceType {
    std::string name;
    double speed_factor = 1.0;  // dimensionless, > 0
    double power_max = 0.0;     // Watts at full utilization
    double cost = 0.0;          // USD per hour

    bool operator==(const InstanceType&) const = default;
};

struct Node {
    std::string id;
    std::string instance;  // InstanceType name

    bool operator==(const Node&) const = default;
};

struct Component {
    std::string id;
    // Set by node cloning: this component serves the operations owned by
    // `replica_of`, splitting their traffic evenly with the original and
    // any sibling replicas. Empty for ordinary components.
    std::string replica_of;

    bool operator==(const Component&) const = default;
};

struct Operation {
    std::string id;
    std::string owner;    // Component id
    double demand = 0.0;  // ms of CPU per invocation at speed_factor 1.0

    bool operator==(const Operation&) const = default;
};

/// Undirected connection between two nodes. Stored with a <= b.
struct Link {
    std::string a;
    std::string b;
    double latency = 0.0;  // ms per remote message

    bool operator==(const Link&) const = default;
};

struct Scenario {
    std::string id;
    double arrival_rate = 0.0;       // requests per second
    std::vector<std::string> steps;  // Operation ids, in call order

    bool operator==(const Scenario&) const = default;
};

/// The whole architecture description: static, dynamic and deployment
/// views in one value. Immutable by convention once loaded; refactoring
/// actions operate on copies.
struct Architecture {
    std::vector<InstanceType> catalog;
    std::vector<Node> nodes;
    std::vector<Component> components;
    std::vector<Operation> operations;
    std::vector<Link> links;
    std::map<std::string, std::string> deployment;  // component id -> node id
    std::vector<Scenario> scenarios;

    bool operator==(const Architecture&) const = default;

    const InstanceType* find_instance(const std::string& name) const;
    const Node* find_node(const std::string& id) const;
    const Component* find_component(const std::string& id) const;
    const Operation* find_operation(const std::string& id) const;
    const Scenario* find_scenario(const std::string& id) const;

    /// Node a component is deployed on; nullptr when undeployed.
    const Node* node_of(const std::string& component_id) const;

    /// Component that owns the serving copies of an operation, i.e. the
    /// owner itself plus every component whose replica_of points at it.
    std::vector<const Component*> serving_components(const std::string& owner_id) const;

    /// True when the node hosts at least one component.
    bool node_used(const std::string& node_id) const;

    /// Node ids directly linked to `node_id`.
    std::vector<std::string> neighbors(const std::string& node_id) const;

    /// Link latency between two distinct nodes; 0 when they are not linked.
    double link_latency(const std::string& a, const std::string& b) const;
};

/// All invariant violations in the model, empty when it is well formed.
std::vector<Violation> validate(const Architecture& arch);

/// Rate-weighted count of scenario-step adjacencies between `component_id`
/// and components hosted on other nodes, keyed by node id. Throws
/// std::invalid_argument for an unknown component.
std::map<std::string, double> component_affinity(const Architecture& arch,
                                                 const std::string& component_id);

/// The Table I instance catalog bundled with the tool.
std::vector<InstanceType> builtin_catalog();

}  // namespace archopt

#endif
