#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "occ/common.hpp"
#include "occ/matrix.hpp"

namespace occ {

/// The learnable context vectors. This is the only trainable state in the
/// whole system; everything else (both encoders) stays frozen.
struct PromptContext {
    Matrix context;          // n_ctx x ctx_dim
    double init_std = 0.02;  // recorded for provenance

    std::size_t n_ctx() const { return context.rows; }
    std::size_t ctx_dim() const { return context.cols; }
};

/// Contrasting label pair for the binary task. Index 0 is always the
/// non-target class, index 1 the target class; every probability row and
/// stored score downstream follows this order.
struct ClassPromptPair {
    std::string non_target = "real";
    std::string target = "fake";

    void validate() const;
};

/// Per-class prompts: shared context vectors followed by one class token.
/// The context is referenced, not copied, so reassembly after a context
/// update is optional — rows always reflect the current values.
struct AssembledPromptBatch {
    const Matrix* context = nullptr;       // shared, non-owning
    std::vector<std::string> class_names;  // one row per class, order fixed

    std::size_t classes() const { return class_names.size(); }
};

/// Draw a fresh context matrix with i.i.d. Normal(0, std^2) entries from the
/// seeded generator. Same seed, bit-identical result.
PromptContext init_context(std::size_t n_ctx, std::size_t ctx_dim, double std,
                           std::uint64_t seed);

AssembledPromptBatch assemble_prompts(const PromptContext& ctx,
                                      const ClassPromptPair& pair);

/// Multi-class variant: one prompt row per name, shared context. Names must
/// be distinct, non-empty and at least two.
AssembledPromptBatch assemble_prompts(const PromptContext& ctx,
                                      const std::vector<std::string>& names);

/// View over the trainable parameters: exactly the context matrix.
inline Matrix& trainable_parameters(PromptContext& ctx) { return ctx.context; }
inline const Matrix& trainable_parameters(const PromptContext& ctx) {
    return ctx.context;
}

}  // namespace occ
