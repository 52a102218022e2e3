#include "archopt/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace archopt {

using nlohmann::ordered_json;

namespace {

double require_number(const ordered_json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key))
        throw ParseError(where + ": missing field '" + key + "'");
    if (!obj.at(key).is_number())
        throw ParseError(where + ": field '" + key + "' must be a number");
    return obj.at(key).get<double>();
}

std::string require_string(const ordered_json& obj, const std::string& key,
                           const std::string& where) {
    if (!obj.contains(key))
        throw ParseError(where + ": missing field '" + key + "'");
    if (!obj.at(key).is_string())
        throw ParseError(where + ": field '" + key + "' must be a string");
    return obj.at(key).get<std::string>();
}

const ordered_json& require_array(const ordered_json& doc, const std::string& key) {
    if (!doc.contains(key))
        throw ParseError("model: missing top-level key '" + key + "'");
    if (!doc.at(key).is_array())
        throw ParseError("model: top-level key '" + key + "' must be an array");
    return doc.at(key);
}

}  // namespace

Architecture parse_architecture(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("model: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("model: top level must be a JSON object");

    Architecture arch;

    for (const auto& j : require_array(doc, "catalog")) {
        InstanceType it;
        it.name = require_string(j, "name", "catalog entry");
        it.speed_factor = require_number(j, "speed_factor", "instance " + it.name);
        it.power_max = require_number(j, "power_max", "instance " + it.name);
        it.cost = require_number(j, "cost", "instance " + it.name);
        arch.catalog.push_back(std::move(it));
    }

    for (const auto& j : require_array(doc, "nodes")) {
        Node n;
        n.id = require_string(j, "id", "node entry");
        n.instance = require_string(j, "instance", "node " + n.id);
        arch.nodes.push_back(std::move(n));
    }

    for (const auto& j : require_array(doc, "components")) {
        Component c;
        c.id = require_string(j, "id", "component entry");
        if (j.contains("replica_of"))
            c.replica_of = j.at("replica_of").get<std::string>();
        arch.components.push_back(std::move(c));
    }

    for (const auto& j : require_array(doc, "operations")) {
        Operation op;
        op.id = require_string(j, "id", "operation entry");
        op.owner = require_string(j, "owner", "operation " + op.id);
        op.demand = require_number(j, "demand", "operation " + op.id);
        arch.operations.push_back(std::move(op));
    }

    for (const auto& j : require_array(doc, "links")) {
        Link l;
        l.a = require_string(j, "a", "link entry");
        l.b = require_string(j, "b", "link entry");
        l.latency = j.contains("latency") ? require_number(j, "latency", "link") : 0.0;
        if (l.b < l.a)
            std::swap(l.a, l.b);
        arch.links.push_back(std::move(l));
    }

    if (!doc.contains("deployment") || !doc.at("deployment").is_object())
        throw ParseError("model: missing top-level object 'deployment'");
    for (const auto& [component, node] : doc.at("deployment").items()) {
        if (!node.is_string())
            throw ParseError("deployment of " + component + ": node must be a string");
        arch.deployment[component] = node.get<std::string>();
    }

    for (const auto& j : require_array(doc, "scenarios")) {
        Scenario s;
        s.id = require_string(j, "id", "scenario entry");
        s.arrival_rate = require_number(j, "arrival_rate", "scenario " + s.id);
        if (!j.contains("steps") || !j.at("steps").is_array())
            throw ParseError("scenario " + s.id + ": missing steps array");
        for (const auto& step : j.at("steps")) {
            if (!step.is_string())
                throw ParseError("scenario " + s.id + ": steps must be operation ids");
            s.steps.push_back(step.get<std::string>());
        }
        arch.scenarios.push_back(std::move(s));
    }

    auto violations = validate(arch);
    if (!violations.empty())
        throw ValidationError(std::move(violations));
    return arch;
}

Architecture load_architecture(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open model file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_architecture(buffer.str());
}

std::string to_canonical_json(const Architecture& arch) {
    ordered_json doc;

    doc["catalog"] = ordered_json::array();
    for (const auto& it : arch.catalog)
        doc["catalog"].push_back({{"name", it.name},
                                  {"speed_factor", it.speed_factor},
                                  {"power_max", it.power_max},
                                  {"cost", it.cost}});

    doc["nodes"] = ordered_json::array();
    for (const auto& n : arch.nodes)
        doc["nodes"].push_back({{"id", n.id}, {"instance", n.instance}});

    doc["components"] = ordered_json::array();
    for (const auto& c : arch.components) {
        ordered_json j{{"id", c.id}};
        if (!c.replica_of.empty())
            j["replica_of"] = c.replica_of;
        doc["components"].push_back(std::move(j));
    }

    doc["operations"] = ordered_json::array();
    for (const auto& op : arch.operations)
        doc["operations"].push_back({{"id", op.id}, {"owner", op.owner}, {"demand", op.demand}});

    auto links = arch.links;
    std::sort(links.begin(), links.end(),
              [](const Link& x, const Link& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    doc["links"] = ordered_json::array();
    for (const auto& l : links)
        doc["links"].push_back({{"a", l.a}, {"b", l.b}, {"latency", l.latency}});

    doc["deployment"] = ordered_json::object();
    for (const auto& [component, node] : arch.deployment)
        doc["deployment"][component] = node;

    doc["scenarios"] = ordered_json::array();
    for (const auto& s : arch.scenarios)
        doc["scenarios"].push_back(
            {{"id", s.id}, {"arrival_rate", s.arrival_rate}, {"steps", s.steps}});

    return doc.dump(2) + "\n";
}

void save_architecture(const Architecture& arch, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write model file: " + path);
    out << to_canonical_json(arch);
}

}  // namespace archopt
