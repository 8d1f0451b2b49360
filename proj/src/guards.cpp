#include "chromapos/guards.hpp"

#include <cstdlib>
#include <string>

#include "chromapos/error.hpp"

namespace chromapos {

int effective_vertex_guard(int default_guard) {
  const char* env = std::getenv("CHROMAPOS_MAX_VERTICES");
  if (env == nullptr || *env == '\0') return default_guard;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 0) {
    fail(ErrorKind::BadParameter,
         "CHROMAPOS_MAX_VERTICES is not a nonnegative integer: " + std::string(env));
  }
  return value < default_guard ? static_cast<int>(value) : default_guard;
}

void check_vertex_guard(const std::string& op, const std::string& guard_name,
                        int default_guard, int actual) {
  int guard = effective_vertex_guard(default_guard);
  if (actual > guard) {
    fail(ErrorKind::TooLarge,
         op + ": " + std::to_string(actual) + " vertices exceeds " + guard_name +
             "=" + std::to_string(guard) +
             (guard < default_guard ? " (lowered by CHROMAPOS_MAX_VERTICES)" : ""));
  }
}

void check_param_guard(const std::string& op, const std::string& guard_name,
                       long long guard, long long actual) {
  if (actual > guard) {
    fail(ErrorKind::TooLarge, op + ": " + std::to_string(actual) + " exceeds " +
                                  guard_name + "=" + std::to_string(guard));
  }
}

}  // namespace chromapos
