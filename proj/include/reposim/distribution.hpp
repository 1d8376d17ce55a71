#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reposim/clustering.hpp"
#include "reposim/token_stats.hpp"

namespace reposim {

// K-dimensional cluster-probability vector for one project. Probabilities are
// occurrence-weighted: probs[c] = (occurrences assigned to c) / covered.
struct ProjectDistribution {
    std::string project_id;
    std::vector<double> probs;
    std::uint64_t covered = 0;  // occurrences that mapped to a cluster
    std::uint64_t dropped = 0;  // occurrences of unknown sub-tokens
};

// Sub-tokens absent from the assignment table are dropped, mirroring the
// no-OOV-at-query-time rule. Throws NoKnownTokens when nothing maps.
ProjectDistribution build_distribution(const TokenStats& stats, const ClusterModel& model);

// Additive-epsilon smoothing: (p + eps) / (1 + K*eps). Keeps the vector a
// distribution with strictly positive components.
ProjectDistribution smooth(const ProjectDistribution& dist, double epsilon);

struct DistributionSet {
    std::size_t k = 0;
    std::string model_checksum;
    std::vector<ProjectDistribution> items;
};

// File format: header "K checksum"; one line per project:
// project_id covered dropped p1 ... pK.
std::string write_distributions(const DistributionSet& set);
DistributionSet read_distributions(const std::string& contents,
                                   const std::string& source_name = "<string>");
DistributionSet read_distributions_file(const std::string& path);

}  // namespace reposim
