#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace spectral_entropy::cli {

using Json = nlohmann::ordered_json;

/// %.17g; nan and infinities become "nan", "inf", "-inf".
std::string format_number(double value);

/// Pretty-printed JSON with every float written to 17 significant digits.
/// Non-finite numbers are emitted as null.
void write_json(std::ostream& out, const Json& value, int indent = 2);

}  // namespace spectral_entropy::cli
