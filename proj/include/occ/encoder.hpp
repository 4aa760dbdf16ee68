#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "occ/matrix.hpp"
#include "occ/prompt.hpp"

namespace occ {

enum class SimilarityKind { dot, cosine };

struct SimilarityConfig {
    SimilarityKind kind = SimilarityKind::dot;
    double temperature = 1.0;  // multiplies similarities before the softmax

    void validate() const;
};

std::string to_string(SimilarityKind k);
SimilarityKind similarity_kind_from_string(const std::string& s);

/// Frozen dual encoder: an image encoder and a text encoder producing
/// embeddings of the same width. Implementations are read-only after
/// construction and safe for concurrent calls; nothing in the toolkit
/// ever updates encoder parameters.
///
/// The two *_gradient methods expose the chain rule through the frozen maps:
/// they take the loss gradient with respect to this encoder's output and
/// return it with respect to the input (pixels, or context vectors). That is
/// all the trainer and the adversarial augmentation need.
class Encoder {
public:
    virtual ~Encoder() = default;

    virtual std::string id() const = 0;
    virtual std::size_t embed_dim() const = 0;
    virtual std::size_t ctx_dim() const = 0;

    virtual EmbeddingMatrix encode_images(const ImageBatch& batch) const = 0;
    virtual EmbeddingMatrix encode_prompts(const AssembledPromptBatch& prompts) const = 0;

    /// Hand-written prompt path used by the zero-shot baseline: whitespace
    /// tokens, no learned context.
    virtual EmbeddingMatrix encode_text(const std::vector<std::string>& prompts) const = 0;

    /// upstream is dLoss/d(image embeddings) [n x embed_dim]; returns
    /// dLoss/d(pixels) with the batch's shape.
    virtual ImageBatch image_gradient(const ImageBatch& batch,
                                      const Matrix& upstream) const = 0;

    /// upstream is dLoss/d(prompt embeddings) [K x embed_dim]; returns
    /// dLoss/d(context) [n_ctx x ctx_dim]. The context is shared across
    /// classes, so per-class contributions are summed.
    virtual Matrix context_gradient(const AssembledPromptBatch& prompts,
                                    const Matrix& upstream) const = 0;

    /// Digest of every frozen parameter. Must be identical before and after
    /// any training run.
    virtual std::uint64_t fingerprint() const = 0;
};

struct ToyEncoderOptions {
    std::size_t embed_dim = 32;
    std::size_t ctx_dim = 32;
    std::size_t pool_grid = 4;
    std::size_t channels = 3;
};

/// Deterministic, differentiable stand-in for a pretrained backbone.
///
/// Images: per-channel average-pool to a pool_grid x pool_grid summary,
/// flatten, then a fixed seeded affine map into embedding space.
/// Prompts: fixed seeded token embeddings, mean-pooled with the context
/// vectors, squashed through tanh, then a fixed seeded affine map. The
/// tanh matters: with a purely linear text path the shared context would
/// cancel out of every softmax and nothing could be learned.
class ToyEncoder final : public Encoder {
public:
    ToyEncoder(std::uint64_t seed, const ToyEncoderOptions& opt = {});

    std::string id() const override { return id_; }
    std::size_t embed_dim() const override { return embed_dim_; }
    std::size_t ctx_dim() const override { return ctx_dim_; }

    EmbeddingMatrix encode_images(const ImageBatch& batch) const override;
    EmbeddingMatrix encode_prompts(const AssembledPromptBatch& prompts) const override;
    EmbeddingMatrix encode_text(const std::vector<std::string>& prompts) const override;
    ImageBatch image_gradient(const ImageBatch& batch,
                              const Matrix& upstream) const override;
    Matrix context_gradient(const AssembledPromptBatch& prompts,
                            const Matrix& upstream) const override;
    std::uint64_t fingerprint() const override;

    std::size_t pool_grid() const { return grid_; }
    std::size_t feature_dim() const { return feat_dim_; }

    /// Fixed seeded embedding for one token (exposed for tests).
    std::vector<double> token_embedding(const std::string& token) const;

    // Frozen parameters, readable for analytic test constructions.
    const Matrix& image_weights() const { return w_img_; }
    const std::vector<double>& image_bias() const { return b_img_; }
    const Matrix& text_weights() const { return w_txt_; }
    const std::vector<double>& text_bias() const { return b_txt_; }

private:
    Matrix pooled_rows(const AssembledPromptBatch& prompts) const;
    EmbeddingMatrix text_forward(const Matrix& pooled) const;

    std::string id_;
    std::uint64_t seed_;
    std::size_t embed_dim_, ctx_dim_, grid_, channels_, feat_dim_;
    Matrix w_img_;               // embed_dim x feat_dim
    std::vector<double> b_img_;  // embed_dim
    Matrix w_txt_;               // embed_dim x ctx_dim
    std::vector<double> b_txt_;  // embed_dim
    double act_scale_ = 8.0;     // tanh input scale
};

/// Resolve an encoder identifier. "toy:<seed>" builds the deterministic toy
/// encoder; other identifiers (e.g. a pretrained backbone name) are looked up
/// in the adapter registry and fail with a clear message when nothing is
/// registered for them.
std::unique_ptr<Encoder> make_encoder(const std::string& id,
                                      const ToyEncoderOptions& toy_opt = {});

using EncoderFactory = std::function<std::unique_ptr<Encoder>(const std::string& id)>;

/// Adapter seam: register a factory for identifiers starting with `prefix`
/// (e.g. "vit-b-16"). The factory owns resolving weights and preprocessing
/// conventions of that backbone.
void register_encoder_factory(const std::string& prefix, EncoderFactory factory);

// ---------------------------------------------------------------------------
// Similarity and the classification head.
// ---------------------------------------------------------------------------

/// Raw similarity matrix [n_images x K].
Matrix similarity(const EmbeddingMatrix& img, const EmbeddingMatrix& txt,
                  const SimilarityConfig& cfg);

/// Forward pass with the intermediates needed for the backward pass.
struct SimilarityForward {
    Matrix sims;   // n x K, raw similarity
    Matrix probs;  // n x K, softmax(temperature * sims) per row
    // cosine-only intermediates
    Matrix img_unit, txt_unit;
    std::vector<double> img_norms, txt_norms;
    SimilarityConfig cfg;
};

SimilarityForward similarity_forward(const EmbeddingMatrix& img,
                                     const EmbeddingMatrix& txt,
                                     const SimilarityConfig& cfg);

/// Propagate dLoss/d(sims) to the two embedding matrices. Either output may
/// be null when not needed.
void similarity_backward(const SimilarityForward& fwd, const EmbeddingMatrix& img,
                         const EmbeddingMatrix& txt, const Matrix& dsims,
                         Matrix* dimg, Matrix* dtxt);

/// Per-class probabilities: softmax over similarities, one row per image.
/// Requires K >= 2 prompt rows and matching embedding widths.
Matrix class_probabilities(const EmbeddingMatrix& img, const EmbeddingMatrix& txt,
                           const SimilarityConfig& cfg);

}  // namespace occ
