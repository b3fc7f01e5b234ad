#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

namespace stackdual {

struct ResourceLimits {
  std::size_t max_terms = 100000;
  std::chrono::milliseconds wall_clock{60000};

  /// Defaults overridden by STACKDUAL_MAX_TERMS and STACKDUAL_TIMEOUT_MS.
  static ResourceLimits from_environment();
};

/// Installs limits for the current thread for the lifetime of the guard.
/// Kernels call check_terms()/check_deadline() at step boundaries.
class ResourceGuard {
 public:
  explicit ResourceGuard(const ResourceLimits& limits);
  ~ResourceGuard();
  ResourceGuard(const ResourceGuard&) = delete;
  ResourceGuard& operator=(const ResourceGuard&) = delete;

 private:
  struct Saved {
    std::size_t max_terms;
    std::optional<std::chrono::steady_clock::time_point> deadline;
  };
  Saved saved_;
};

void check_terms(std::size_t count);
void check_deadline();

}  // namespace stackdual
