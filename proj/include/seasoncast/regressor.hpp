#pragma once

#include "seasoncast/parallel.hpp"
#include "seasoncast/tensor.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace seasoncast {

/// Uniform train/predict contract shared by every model family. Trained
/// models are immutable and safe to share across threads.
class Regressor {
public:
    virtual ~Regressor() = default;

    /// Model family id: rf | gbt | mlp | cnn1d | lstm | gru.
    virtual std::string kind() const = 0;

    /// Feature width the model was trained with.
    virtual int feature_count() const = 0;

    /// Raw predictions, one per row. Throws DimensionMismatch when the
    /// feature width differs from training.
    virtual std::vector<double> predict(const Matrix& x, Exec exec = Exec::parallel) const = 0;

    /// Self-describing serialization for exact reload.
    virtual nlohmann::json to_json() const = 0;

    /// Reconstructs any serialized model by its "kind" tag.
    static std::unique_ptr<Regressor> from_json(const nlohmann::json& doc);
};

} // namespace seasoncast
