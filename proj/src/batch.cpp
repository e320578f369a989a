#include "amgm/batch.hpp"

namespace amgm {

std::vector<GapDecomposition> decompose_many(const std::vector<Sample>& samples, unsigned depth,
                                             const PrecisionContext& ctx,
                                             const DecompositionOptions& opts, Exec exec) {
    std::vector<GapDecomposition> out(samples.size());
    for_each_index(samples.size(), exec,
                   [&](std::size_t i) { out[i] = decompose(samples[i], depth, ctx, opts); });
    return out;
}

std::vector<std::vector<InequalityVerdict>> check_many(const std::vector<Sample>& samples,
                                                       const PrecisionContext& ctx, Exec exec) {
    std::vector<std::vector<InequalityVerdict>> out(samples.size());
    for_each_index(samples.size(), exec,
                   [&](std::size_t i) { out[i] = check_all(samples[i], ctx); });
    return out;
}

}
