#pragma once

#include <cstdint>
#include <string>

#include "cli.hpp"

namespace ywalls::cli {

struct CheckOutcome {
  bool ok = true;
  std::string message;  // one-line summary, or the first failure
};

CheckOutcome verify_main(const RunConfig& config);
CheckOutcome verify_motivic(const RunConfig& config);
CheckOutcome verify_specialize(const RunConfig& config);
CheckOutcome verify_coords(const RunConfig& config);
CheckOutcome verify_confluence(const RunConfig& config);
CheckOutcome verify_fibers(const RunConfig& config);

/// Seed of the i-th random reduction order derived from a base seed.
std::uint64_t order_seed(std::uint64_t base, std::uint64_t i);

}  // namespace ywalls::cli
