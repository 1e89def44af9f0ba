#include "kgpart/partition_plan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kgpart {

PartitionPlan partition_plan(const ClusterTree& tree, std::uint64_t capacity) {
    if (capacity == 0) throw std::invalid_argument("partition_plan: capacity must be positive");

    std::vector<AssignedLeaf> items;
    for (const ClusterNode* leaf : tree.leaves()) items.push_back({leaf->id, leaf->triple_load});
    std::sort(items.begin(), items.end(), [](const AssignedLeaf& a, const AssignedLeaf& b) {
        if (a.load != b.load) return a.load > b.load;
        return a.leaf_id < b.leaf_id;
    });

    PartitionPlan plan;
    plan.capacity = capacity;
    auto new_machine = [&plan](const AssignedLeaf& item, bool flagged) {
        MachineAssignment m;
        m.machine_id = static_cast<std::uint32_t>(plan.machines.size());
        m.leaves.push_back(item);
        m.total_load = item.load;
        m.over_capacity = flagged;
        plan.machines.push_back(std::move(m));
    };

    for (const AssignedLeaf& item : items) {
        if (item.load > capacity) {
            new_machine(item, true);
            continue;
        }
        bool placed = false;
        for (auto& machine : plan.machines) {
            if (machine.over_capacity) continue;
            if (machine.total_load + item.load <= capacity) {
                machine.leaves.push_back(item);
                machine.total_load += item.load;
                placed = true;
                break;
            }
        }
        if (!placed) new_machine(item, false);
    }
    return plan;
}

std::string plan_to_csv(const PartitionPlan& plan) {
    std::ostringstream out;
    out << "machine,leaf,leaf_load,machine_load,over_capacity\n";
    for (const auto& machine : plan.machines) {
        for (const AssignedLeaf& leaf : machine.leaves) {
            out << machine.machine_id << ',' << leaf.leaf_id << ',' << leaf.load << ','
                << machine.total_load << ',' << (machine.over_capacity ? 1 : 0) << '\n';
        }
    }
    return out.str();
}

}  // namespace kgpart
