#pragma once

#include <filesystem>
#include <string>

#include "odhd/pipeline.hpp"

namespace odhd {

// Versioned JSON model document: dims, levels, flip count, variant, epochs,
// quantizer bounds, seed HVs, one-class HV and threshold.
std::string model_to_json(const OneClassModel& model);
OneClassModel model_from_json(const std::string& text);

void save_model(const OneClassModel& model, const std::filesystem::path& path);
OneClassModel load_model(const std::filesystem::path& path);

// Write-to-temp-then-rename so readers never observe partial output.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace odhd
