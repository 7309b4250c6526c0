#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace erdos {

// Machine-readable output contract: floats at 12 significant digits,
// fields emitted in insertion order, so identical runs are
// byte-identical and diffs stay small.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

// Minimal ordered JSON object builder.
class JsonObject {
 public:
  JsonObject& field(std::string_view key, std::string_view value) {
    emit_key(key);
    out_ += '"';
    out_ += json_escape(value);
    out_ += '"';
    return *this;
  }
  JsonObject& field(std::string_view key, const char* value) {
    return field(key, std::string_view(value));
  }
  JsonObject& field(std::string_view key, double value) {
    emit_key(key);
    out_ += format_double(value);
    return *this;
  }
  JsonObject& field(std::string_view key, bool value) {
    emit_key(key);
    out_ += value ? "true" : "false";
    return *this;
  }
  JsonObject& field(std::string_view key, std::uint64_t value) {
    emit_key(key);
    out_ += std::to_string(value);
    return *this;
  }
  JsonObject& field(std::string_view key, int value) {
    emit_key(key);
    out_ += std::to_string(value);
    return *this;
  }
  // Pre-serialized JSON (nested objects, arrays).
  JsonObject& raw(std::string_view key, std::string_view json) {
    emit_key(key);
    out_ += json;
    return *this;
  }

  std::string str() const { return out_ + "}"; }

 private:
  void emit_key(std::string_view key) {
    out_ += first_ ? "\"" : ",\"";
    first_ = false;
    out_ += json_escape(key);
    out_ += "\":";
  }
  std::string out_ = "{";
  bool first_ = true;
};

template <typename Range, typename Fn>
std::string json_array(const Range& range, Fn&& element) {
  std::string out = "[";
  bool first = true;
  for (const auto& v : range) {
    if (!first) out += ",";
    first = false;
    out += element(v);
  }
  return out + "]";
}

}  // namespace erdos
