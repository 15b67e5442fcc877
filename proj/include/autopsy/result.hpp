#pragma once

#include <stdexcept>
#include <string_view>
#include <variant>

namespace autopsy {

enum class Reject {
  bad_key,                 // ciphertext failed integrity under the derived key
  stale,                   // timestamp outside the freshness window
  forged,                  // algebraic verification value mismatch
  server_unauthenticated,  // challenge response value wrong
  id_mismatch,             // entered identity differs from the card's
};

std::string_view to_string(Reject r);

// Accepted value or a reject reason.
template <typename T>
class Expected {
 public:
  Expected(T value) : v_(std::move(value)) {}
  Expected(Reject r) : v_(r) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Expected::value on reject");
    return std::get<T>(v_);
  }
  T& value() & {
    if (!ok()) throw std::logic_error("Expected::value on reject");
    return std::get<T>(v_);
  }

  Reject reject() const {
    if (ok()) throw std::logic_error("Expected::reject on value");
    return std::get<Reject>(v_);
  }

 private:
  std::variant<T, Reject> v_;
};

}  // namespace autopsy
