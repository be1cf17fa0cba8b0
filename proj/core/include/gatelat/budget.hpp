#pragma once

#include <cstdint>
#include <string>

namespace gatelat {

inline constexpr std::uint64_t kDefaultBudget = 4'000'000'000ull;

// Work counter for bounded searches. Units are table cells touched.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : _limit(limit) {}

  // GATELAT_BUDGET if set, else the default
  static Budget from_env();

  void spend(std::uint64_t units, std::string const &stage);
  std::uint64_t used() const { return _used; }
  std::uint64_t limit() const { return _limit; }

 private:
  std::uint64_t _limit;
  std::uint64_t _used = 0;
};

} // namespace gatelat
