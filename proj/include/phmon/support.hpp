#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace phmon {

// Node budget for the search routines. A "node" is a distinct word
// discovered during closure computation.
struct SearchBudget {
  static constexpr std::uint64_t kUnlimited = ~std::uint64_t{0};
  static constexpr std::uint64_t kDefaultMaxNodes = 50'000'000;

  std::uint64_t max_nodes = kDefaultMaxNodes;

  static SearchBudget unlimited() { return SearchBudget{kUnlimited}; }
  static SearchBudget nodes(std::uint64_t n) { return SearchBudget{n}; }
};

struct BudgetExceeded {
  std::uint64_t nodes_visited = 0;
  std::string context;
};

enum class Verdict { Yes, No, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "inconclusive";
  }
}

// Value-or-budget-exhaustion. Definite verdicts are values; running out of
// search budget is the only non-exceptional failure mode in this library.
template <class T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(BudgetExceeded b) : v_(std::move(b)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(v_); }
  T& value() & { return std::get<T>(v_); }
  T&& value() && { return std::get<T>(std::move(v_)); }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const BudgetExceeded& budget() const { return std::get<BudgetExceeded>(v_); }

 private:
  std::variant<T, BudgetExceeded> v_;
};

enum class Side { Left, Right };

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

}  // namespace phmon
