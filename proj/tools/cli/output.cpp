#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace spectral_entropy::cli {

namespace {

void write_string(std::ostream& out, const std::string& s) {
  // dump() of a string node handles escaping.
  out << Json(s).dump();
}

void write_value(std::ostream& out, const Json& value, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad;
        write_string(out, key);
        out << ": ";
        write_value(out, item, indent, depth + 1);
      }
      out << '\n' << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line; spectra are long.
      const bool flat = std::all_of(value.begin(), value.end(),
                                    [](const Json& v) { return v.is_primitive(); });
      if (flat) {
        out << '[';
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (i != 0) out << ", ";
          write_value(out, value[i], indent, depth + 1);
        }
        out << ']';
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i != 0) out << ",\n";
        out << pad;
        write_value(out, value[i], indent, depth + 1);
      }
      out << '\n' << close_pad << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = value.get<double>();
      if (std::isfinite(x)) {
        out << format_number(x);
      } else {
        out << "null";
      }
      return;
    }
    case Json::value_t::string:
      write_string(out, value.get<std::string>());
      return;
    default:
      out << value.dump();
      return;
  }
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // no "-0"
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_json(std::ostream& out, const Json& value, int indent) {
  write_value(out, value, indent, 0);
  out << '\n';
}

}  // namespace spectral_entropy::cli
