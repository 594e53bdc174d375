#pragma once

#include <set>
#include <span>
#include <string>

#include "fluid/model_config.hpp"
#include "fluid/term.hpp"

// Brute-force reference for instance partitions. Works on the whole graph
// in memory, applies each model's definition literally and compares nested
// textual schemas instead of digests. Shares nothing with the engine beyond
// the quad type.
namespace oracle {

// One block per schema element: the subject keys it summarizes.
using Partition = std::set<std::set<std::string>>;

// Supports inference modes none and pre-processed.
Partition partition(const fluid::ModelConfig& config, std::span<const fluid::Quad> quads);

}  // namespace oracle
