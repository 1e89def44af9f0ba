#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgpart/hfcm.hpp"

namespace kgpart {

struct AssignedLeaf {
    std::uint32_t leaf_id = 0;
    std::uint64_t load = 0;
};

struct MachineAssignment {
    std::uint32_t machine_id = 0;
    std::vector<AssignedLeaf> leaves;
    std::uint64_t total_load = 0;
    bool over_capacity = false;  // single leaf that alone exceeds capacity
};

struct PartitionPlan {
    std::vector<MachineAssignment> machines;
    std::uint64_t capacity = 0;
};

// First-fit-decreasing by leaf triple load (ties by leaf id). A leaf larger
// than the capacity gets its own flagged machine; every leaf is assigned
// exactly once.
PartitionPlan partition_plan(const ClusterTree& tree, std::uint64_t capacity);

std::string plan_to_csv(const PartitionPlan& plan);

}  // namespace kgpart
