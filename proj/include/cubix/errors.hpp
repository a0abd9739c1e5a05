#ifndef CUBIX_ERRORS_HPP
#define CUBIX_ERRORS_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cubix {

// Precondition or input violations (dimension mismatch, non-monotone map, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration exceeded its cell budget.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A check needs cells above the truncation bound of its input.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Global cell budget for enumerations, overridable via CUBIX_MAX_CELLS.
inline std::size_t max_cells() {
  static const std::size_t limit = [] {
    if (const char* env = std::getenv("CUBIX_MAX_CELLS")) {
      const long long v = std::atoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(100'000'000);
  }();
  return limit;
}

inline void check_budget(std::size_t used, const char* what) {
  if (used > max_cells())
    throw ResourceError(std::string(what) + ": cell budget exceeded (" +
                        std::to_string(used) + " > " + std::to_string(max_cells()) + ")");
}

}  // namespace cubix

#endif
