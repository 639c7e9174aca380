#ifndef GRIDLOC_ERROR_HPP
#define GRIDLOC_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gridloc {

// Error taxonomy mirrored by the C API status codes and CLI exit codes.
enum class ErrorKind {
  Input,     // malformed or out-of-contract input
  Budget,    // exact search exceeded its node budget
  Internal,  // failed self-certification; indicates a construction bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& msg) {
  return Error(ErrorKind::Input, msg);
}
inline Error budget_error(const std::string& msg) {
  return Error(ErrorKind::Budget, msg);
}
inline Error internal_error(const std::string& msg) {
  return Error(ErrorKind::Internal, msg);
}

// Node budget for exact searches. Exhaustion raises a Budget error so a
// truncated search can never masquerade as a "no" answer.
struct SearchBudget {
  std::int64_t nodes = 200'000'000;

  void spend(std::int64_t& counter) const {
    if (++counter > nodes) throw budget_error("search budget exceeded");
  }
};

}  // namespace gridloc

#endif
