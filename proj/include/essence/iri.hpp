#pragma once

#include <compare>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace essence {

/// Entity name, either fragment-style ("#fulfills") or a full
/// scheme-prefixed identifier. Identity is exact text equality.
class Iri {
 public:
  Iri() = default;

  explicit Iri(std::string value) : value_(std::move(value)) {
    if (value_.empty()) {
      throw std::invalid_argument("IRI must be non-empty");
    }
    for (unsigned char c : value_) {
      if (std::isspace(c)) {
        throw std::invalid_argument("IRI must not contain whitespace: '" +
                                    value_ + "'");
      }
    }
  }

  const std::string& str() const { return value_; }

  /// Text after a leading '#'; the full text otherwise.
  std::string local_name() const {
    if (!value_.empty() && value_.front() == '#') return value_.substr(1);
    return value_;
  }

  bool empty() const { return value_.empty(); }

  auto operator<=>(const Iri&) const = default;

 private:
  std::string value_;
};

}  // namespace essence

template <>
struct std::hash<essence::Iri> {
  std::size_t operator()(const essence::Iri& iri) const noexcept {
    return std::hash<std::string>{}(iri.str());
  }
};
