#include "stackdual/resource.hpp"

#include <cstdlib>
#include <string>

#include "stackdual/errors.hpp"

namespace stackdual {

namespace {

thread_local std::size_t tl_max_terms = static_cast<std::size_t>(-1);
thread_local std::optional<std::chrono::steady_clock::time_point> tl_deadline;

std::optional<long long> env_integer(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    long long value = std::stoll(raw, &used);
    if (used != std::string(raw).size() || value <= 0) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

ResourceLimits ResourceLimits::from_environment() {
  ResourceLimits limits;
  if (auto v = env_integer("STACKDUAL_MAX_TERMS")) limits.max_terms = static_cast<std::size_t>(*v);
  if (auto v = env_integer("STACKDUAL_TIMEOUT_MS")) limits.wall_clock = std::chrono::milliseconds(*v);
  return limits;
}

ResourceGuard::ResourceGuard(const ResourceLimits& limits)
    : saved_{tl_max_terms, tl_deadline} {
  tl_max_terms = limits.max_terms;
  tl_deadline = std::chrono::steady_clock::now() + limits.wall_clock;
}

ResourceGuard::~ResourceGuard() {
  tl_max_terms = saved_.max_terms;
  tl_deadline = saved_.deadline;
}

void check_terms(std::size_t count) {
  if (count > tl_max_terms)
    throw ResourceExceeded("polynomial exceeds the monomial cap of " + std::to_string(tl_max_terms) +
                           " terms");
}

void check_deadline() {
  if (tl_deadline && std::chrono::steady_clock::now() > *tl_deadline)
    throw ResourceExceeded("wall-clock cap exceeded");
}

}  // namespace stackdual
