#ifndef ARCHOPT_MODEL_IO_HPP
#define ARCHOPT_MODEL_IO_HPP

#include <string>

#include "archopt/model.hpp"

namespace archopt {

/// Parses and validates a model file. Throws ParseError on syntax or
/// schema problems (with position/field info) and ValidationError when
/// the model breaks invariants; the latter lists every violation.
Architecture load_architecture(const std::string& path);

Architecture parse_architecture(const std::string& json_text);

/// Canonical form: fixed key order, normalized links, explicit defaults.
/// load(save(a)) == a for every valid architecture.
std::string to_canonical_json(const Architecture& arch);

void save_architecture(const Architecture& arch, const std::string& path);

}  // namespace archopt

#endif
