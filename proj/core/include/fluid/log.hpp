#pragma once

#include <memory>

#include <spdlog/logger.h>

namespace fluid {

// Shared stderr logger. The level comes from the FLUID_LOG environment
// variable (trace, debug, info, warn, error, off; default info).
std::shared_ptr<spdlog::logger> logger();

}  // namespace fluid
