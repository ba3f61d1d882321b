#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace interlace {

struct SelftestResult {
    std::string group;
    bool pass = false;
    std::string detail; // failure description, empty on pass
};

// Seeded property suite across all modules; one result per group.
std::vector<SelftestResult> run_selftest(std::uint64_t seed);

} // namespace interlace
