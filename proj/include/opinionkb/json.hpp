#pragma once

#include <json.hpp>

namespace opinionkb {

/// Insertion-ordered JSON so canonical serializations keep a stable,
/// documented key order.
using Json = nlohmann::ordered_json;

}  // namespace opinionkb
