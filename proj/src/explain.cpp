#include "reposim/explain.hpp"

#include <algorithm>

#include "reposim/errors.hpp"

namespace reposim {

Explanation explain(const ProjectDistribution& q, const SearchIndex& index,
                    const std::string& result_id, const ClusterModel& model, std::size_t m,
                    double epsilon) {
    auto it = std::find(index.ids.begin(), index.ids.end(), result_id);
    if (it == index.ids.end())
        throw UnknownResult("result '" + result_id + "' is not in the index");
    const std::size_t row_idx = static_cast<std::size_t>(it - index.ids.begin());
    const std::vector<double>& row = index.rows[row_idx];
    std::vector<double> qv = prepare_query_vector(index, q, epsilon);

    Explanation ex;
    ex.result_id = result_id;

    std::vector<ExplanationEntry> terms(index.k);
    for (std::uint32_t c = 0; c < index.k; ++c) {
        terms[c].cluster = c;
        terms[c].contribution = qv[c] * row[c];
        terms[c].query_mass = qv[c];
        ex.score += terms[c].contribution;
    }
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.contribution != b.contribution) return a.contribution > b.contribution;
        return a.cluster < b.cluster;
    });

    const std::size_t keep = std::min<std::size_t>(m, index.k);
    terms.resize(keep);
    for (ExplanationEntry& e : terms) {
        auto label = model.labels.find(e.cluster);
        e.label = label == model.labels.end() ? "unlabeled" : label->second;
        auto reps = model.representatives.find(e.cluster);
        if (reps != model.representatives.end()) e.representatives = reps->second;
    }
    ex.entries = std::move(terms);
    return ex;
}

}  // namespace reposim
