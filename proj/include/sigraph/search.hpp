#pragma once

#include <cstdint>

#include "sigraph/error.hpp"

namespace sigraph {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchOptions {
    std::uint64_t budget = kDefaultBudget;  // max search-tree nodes before giving up
};

struct SearchStats {
    std::uint64_t expansions = 0;
};

/// Counts search-tree expansions against a budget; throws once exhausted so
/// callers can distinguish "exhausted the space" from "ran out of budget".
class BudgetTicker {
public:
    explicit BudgetTicker(const SearchOptions& opts) : budget_(opts.budget) {}

    void tick(const char* where) {
        if (++used_ > budget_)
            throw Error(Errc::search_budget_exceeded,
                        std::string(where) + " exceeded budget of " +
                            std::to_string(budget_) + " expansions");
    }

    std::uint64_t used() const { return used_; }

private:
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
};

}  // namespace sigraph
