#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reposim/search_index.hpp"

namespace reposim {

struct ExplanationEntry {
    std::uint32_t cluster = 0;
    double contribution = 0.0;  // this cluster's term of the scored inner product
    double query_mass = 0.0;    // the query vector component for the cluster
    std::string label;
    std::vector<std::string> representatives;
};

// Top-m inner-product terms for one query/result pair. The contributions over
// all K clusters sum to the result's score exactly.
struct Explanation {
    std::string result_id;
    double score = 0.0;
    std::vector<ExplanationEntry> entries;  // sorted by contribution, descending
};

Explanation explain(const ProjectDistribution& q, const SearchIndex& index,
                    const std::string& result_id, const ClusterModel& model, std::size_t m,
                    double epsilon);

}  // namespace reposim
