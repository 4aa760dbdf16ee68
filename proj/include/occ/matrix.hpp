#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace occ {

/// Dense row-major matrix of doubles. The workhorse container for
/// embeddings, similarities, probabilities and learnable context.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> d;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), d(r * c, fill) {}

    double& at(std::size_t r, std::size_t c) { return d[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return d[r * cols + c]; }

    double* row_ptr(std::size_t r) { return d.data() + r * cols; }
    const double* row_ptr(std::size_t r) const { return d.data() + r * cols; }

    bool same_shape(const Matrix& o) const {
        return rows == o.rows && cols == o.cols;
    }

    bool all_finite() const {
        for (double v : d)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

/// Batch of images in planar layout [count][channels][height][width],
/// normalized-pixel space (see data pipeline). All values finite.
struct ImageBatch {
    std::size_t count = 0;
    std::size_t channels = 0;
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<double> d;

    ImageBatch() = default;
    ImageBatch(std::size_t n, std::size_t c, std::size_t h, std::size_t w,
               double fill = 0.0)
        : count(n), channels(c), height(h), width(w), d(n * c * h * w, fill) {}

    std::size_t pixels_per_image() const { return channels * height * width; }

    double* image_ptr(std::size_t i) { return d.data() + i * pixels_per_image(); }
    const double* image_ptr(std::size_t i) const {
        return d.data() + i * pixels_per_image();
    }

    double& at(std::size_t i, std::size_t c, std::size_t y, std::size_t x) {
        return d[((i * channels + c) * height + y) * width + x];
    }
    double at(std::size_t i, std::size_t c, std::size_t y, std::size_t x) const {
        return d[((i * channels + c) * height + y) * width + x];
    }

    bool same_shape(const ImageBatch& o) const {
        return count == o.count && channels == o.channels &&
               height == o.height && width == o.width;
    }

    bool all_finite() const {
        for (double v : d)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

enum class EmbeddingSource { image, text };

/// Batch of embeddings produced by a frozen encoder: one row per item.
/// Construction enforces the invariants (at least one row, finite values).
struct EmbeddingMatrix {
    Matrix m;
    EmbeddingSource source = EmbeddingSource::image;

    EmbeddingMatrix() = default;
    EmbeddingMatrix(Matrix mat, EmbeddingSource src) : m(std::move(mat)), source(src) {
        if (m.rows == 0)
            throw std::invalid_argument("EmbeddingMatrix: needs at least one row");
        if (!m.all_finite())
            throw std::invalid_argument("EmbeddingMatrix: non-finite entries");
    }

    std::size_t items() const { return m.rows; }
    std::size_t dim() const { return m.cols; }
};

/// Class labels for the binary task: 0 = non-target, 1 = target.
using LabelVector = std::vector<int>;

struct LabeledImageBatch {
    ImageBatch images;
    LabelVector labels;
};

}  // namespace occ
