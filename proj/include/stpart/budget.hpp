#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace stpart::search {

struct SearchBudget {
  std::optional<long long> max_parts;
  std::optional<long long> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
};

struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Node counting plus an optional deadline, shared by the exact engines.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& b) : budget_(b) {
    if (budget_.time_limit) {
      deadline_ = std::chrono::steady_clock::now() + *budget_.time_limit;
    }
  }

  // True when the budget fires; checks the clock every 1024 nodes.
  bool tick() {
    ++nodes_;
    if (budget_.node_limit && nodes_ > *budget_.node_limit) return true;
    if (deadline_ && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() >= *deadline_) {
      return true;
    }
    return false;
  }

  long long nodes() const { return nodes_; }

 private:
  SearchBudget budget_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  long long nodes_ = 0;
};

}  // namespace detail

}  // namespace stpart::search
