#pragma once

#include <stdexcept>
#include <string>

namespace vffkit {

// Error classes map onto CLI exit codes: usage/config -> 1, data/schema -> 2,
// backend failure -> 3.
enum class ErrorClass { usage, data, backend };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& msg)
      : std::runtime_error(msg), cls_(cls) {}

  ErrorClass error_class() const { return cls_; }

  const char* class_name() const {
    switch (cls_) {
      case ErrorClass::usage: return "config";
      case ErrorClass::data: return "data";
      case ErrorClass::backend: return "backend";
    }
    return "unknown";
  }

 private:
  ErrorClass cls_;
};

[[noreturn]] inline void throw_usage(const std::string& msg) {
  throw Error(ErrorClass::usage, msg);
}
[[noreturn]] inline void throw_data(const std::string& msg) {
  throw Error(ErrorClass::data, msg);
}
[[noreturn]] inline void throw_backend(const std::string& msg) {
  throw Error(ErrorClass::backend, msg);
}

}  // namespace vffkit
