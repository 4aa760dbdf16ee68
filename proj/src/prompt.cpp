#include "occ/prompt.hpp"

#include <stdexcept>
#include <unordered_set>

namespace occ {

void ClassPromptPair::validate() const {
    if (non_target.empty() || target.empty())
        throw std::invalid_argument("ClassPromptPair: class names must be non-empty");
    if (non_target == target)
        throw std::invalid_argument("ClassPromptPair: class names must be distinct");
}

PromptContext init_context(std::size_t n_ctx, std::size_t ctx_dim, double std,
                           std::uint64_t seed) {
    if (n_ctx == 0 || ctx_dim == 0)
        throw std::invalid_argument("init_context: dimensions must be positive");
    if (!(std > 0.0))
        throw std::invalid_argument("init_context: std must be positive");

    PromptContext ctx;
    ctx.init_std = std;
    ctx.context = Matrix(n_ctx, ctx_dim);
    Rng rng(seed);
    for (double& v : ctx.context.d) v = rng.normal(0.0, std);
    return ctx;
}

AssembledPromptBatch assemble_prompts(const PromptContext& ctx,
                                      const ClassPromptPair& pair) {
    pair.validate();
    return assemble_prompts(ctx, {pair.non_target, pair.target});
}

AssembledPromptBatch assemble_prompts(const PromptContext& ctx,
                                      const std::vector<std::string>& names) {
    if (ctx.context.rows == 0 || ctx.context.cols == 0)
        throw std::invalid_argument("assemble_prompts: empty context");
    if (!ctx.context.all_finite())
        throw std::invalid_argument("assemble_prompts: non-finite context");
    if (names.size() < 2)
        throw std::invalid_argument("assemble_prompts: need at least two classes");
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty())
            throw std::invalid_argument("assemble_prompts: empty class name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("assemble_prompts: duplicate class name '" +
                                        n + "'");
    }

    AssembledPromptBatch batch;
    batch.context = &ctx.context;
    batch.class_names = names;
    return batch;
}

}  // namespace occ
