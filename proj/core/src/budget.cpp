#include "gatelat/budget.hpp"

#include <cstdlib>

#include "gatelat/error.hpp"

namespace gatelat {

Budget Budget::from_env() {
  if (char const *env = std::getenv("GATELAT_BUDGET")) {
    char *end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env)
      return Budget(v);
  }
  return Budget();
}

void Budget::spend(std::uint64_t units, std::string const &stage) {
  _used += units;
  if (_used > _limit)
    fail(ErrorCode::BudgetExceeded,
         "search budget of " + std::to_string(_limit) +
             " exhausted during stage '" + stage + "'");
}

} // namespace gatelat
