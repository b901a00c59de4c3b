#pragma once

#include <functional>
#include <optional>

#include "betlogic/error.hpp"

// Error code raised by `f`, or nullopt if it returns normally.
inline std::optional<betlogic::ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const betlogic::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
