#pragma once

// Locale-independent CSV formatting: '.' decimal separator, shortest
// round-trip representation, no grouping.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

namespace qperc::csv {

inline std::string format(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

template <class Int>
  requires std::is_integral_v<Int>
std::string format(Int value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

inline std::string format(std::string_view value) { return std::string(value); }
inline std::string format(const char* value) { return std::string(value); }
inline std::string format(bool value) { return value ? "1" : "0"; }

class Row {
 public:
  template <class T>
  Row& operator<<(const T& value) {
    if (!text_.empty() || started_) text_ += ',';
    text_ += format(value);
    started_ = true;
    return *this;
  }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
  bool started_ = false;
};

inline void write_header(std::ostream& out, std::initializer_list<std::string_view> columns) {
  bool first = true;
  for (auto c : columns) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  out << '\n';
}

inline void write_row(std::ostream& out, const Row& row) { out << row.str() << '\n'; }

}  // namespace qperc::csv
