#include "reposim/distribution.hpp"

#include <cmath>
#include <sstream>

#include "reposim/errors.hpp"
#include "reposim/io_util.hpp"

namespace reposim {

ProjectDistribution build_distribution(const TokenStats& stats, const ClusterModel& model) {
    ProjectDistribution dist;
    dist.project_id = stats.project_id;
    dist.probs.assign(model.k, 0.0);

    std::vector<std::uint64_t> cluster_counts(model.k, 0);
    for (const auto& [subtoken, count] : stats.counts) {
        auto it = model.assignment.find(subtoken);
        if (it == model.assignment.end()) {
            dist.dropped += count;
        } else {
            cluster_counts[it->second] += count;
            dist.covered += count;
        }
    }
    if (dist.covered == 0)
        throw NoKnownTokens("no sub-token of project '" + stats.project_id +
                            "' is present in the cluster assignment");
    for (std::size_t c = 0; c < model.k; ++c)
        dist.probs[c] =
            static_cast<double>(cluster_counts[c]) / static_cast<double>(dist.covered);
    return dist;
}

ProjectDistribution smooth(const ProjectDistribution& dist, double epsilon) {
    ProjectDistribution out = dist;
    const double k = static_cast<double>(dist.probs.size());
    const double denom = 1.0 + k * epsilon;
    for (double& p : out.probs) p = (p + epsilon) / denom;
    return out;
}

std::string write_distributions(const DistributionSet& set) {
    std::ostringstream out;
    out << set.k << ' ' << set.model_checksum << '\n';
    for (const ProjectDistribution& d : set.items) {
        out << d.project_id << ' ' << d.covered << ' ' << d.dropped;
        for (double p : d.probs) out << ' ' << io::format_double(p);
        out << '\n';
    }
    return std::move(out).str();
}

DistributionSet read_distributions(const std::string& contents, const std::string& source_name) {
    std::istringstream in(contents);
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw FormatError(source_name + ":" + std::to_string(lineno) + ": " + what);
    };

    ++lineno;
    if (!std::getline(in, line)) fail("empty distribution file");
    auto header = io::split_ws(line);
    if (header.size() != 2) fail("header must be: K checksum");
    bool ok = false;
    DistributionSet set;
    set.k = io::parse_u64(header[0], ok);
    if (!ok || set.k == 0) fail("bad K");
    set.model_checksum = std::string(header[1]);

    while (std::getline(in, line)) {
        ++lineno;
        auto parts = io::split_ws(line);
        if (parts.empty()) continue;
        if (parts.size() != 3 + set.k)
            throw DimensionMismatch(source_name + ":" + std::to_string(lineno) +
                                    ": expected " + std::to_string(3 + set.k) + " fields");
        ProjectDistribution d;
        d.project_id = std::string(parts[0]);
        d.covered = io::parse_u64(parts[1], ok);
        if (!ok) fail("bad covered count");
        d.dropped = io::parse_u64(parts[2], ok);
        if (!ok) fail("bad dropped count");
        d.probs.resize(set.k);
        double sum = 0.0;
        for (std::size_t i = 0; i < set.k; ++i) {
            d.probs[i] = io::parse_double(parts[3 + i], ok);
            if (!ok || !std::isfinite(d.probs[i]) || d.probs[i] < 0.0)
                fail("bad probability component");
            sum += d.probs[i];
        }
        if (std::abs(sum - 1.0) > 1e-9) fail("probabilities of " + d.project_id + " do not sum to 1");
        set.items.push_back(std::move(d));
    }
    return set;
}

DistributionSet read_distributions_file(const std::string& path) {
    return read_distributions(io::read_file(path), path);
}

}  // namespace reposim
