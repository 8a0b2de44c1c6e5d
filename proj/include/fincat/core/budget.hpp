#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fincat {

// Every enumeration in this library is worst-case exponential, so all of
// them charge their work against an explicit budget.  A single budget
// object may be threaded through nested searches.
struct SearchBudget {
  std::size_t max_objects = 64;
  std::size_t max_morphisms = 512;
  std::uint64_t max_nodes = 50'000'000;

  mutable std::uint64_t nodes_used = 0;

  void charge(std::uint64_t n = 1) const {
    nodes_used += n;
    if (nodes_used > max_nodes) throw_exceeded("search node budget");
  }
  void require_objects(std::size_t n) const {
    if (n > max_objects) throw_exceeded("object budget");
  }
  void require_morphisms(std::size_t n) const {
    if (n > max_morphisms) throw_exceeded("morphism budget");
  }

  [[noreturn]] void throw_exceeded(const std::string& what) const;
};

class SizeBudgetExceeded : public std::runtime_error {
public:
  explicit SizeBudgetExceeded(const std::string& what)
      : std::runtime_error("size budget exceeded: " + what) {}
};

inline void SearchBudget::throw_exceeded(const std::string& what) const {
  throw SizeBudgetExceeded(what);
}

inline SearchBudget& default_budget() {
  static SearchBudget b;
  return b;
}

}  // namespace fincat
