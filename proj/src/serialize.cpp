#include "odhd/serialize.hpp"

#include <fstream>

#include <json.hpp>

#include "odhd/errors.hpp"

namespace odhd {

namespace {

using nlohmann::json;

constexpr int kModelVersion = 1;

json hv_to_json(const hdc::Hypervector& hv) {
    return json(hv.elems());
}

hdc::Hypervector hv_from_json(const json& j, hdc::Kind kind) {
    return hdc::Hypervector(j.get<std::vector<std::int64_t>>(), kind);
}

}  // namespace

std::string model_to_json(const OneClassModel& model) {
    json j;
    j["version"] = kModelVersion;
    j["variant"] = to_string(model.variant);
    j["epochs"] = model.epochs;
    j["dims"] = model.seeds.dims;
    j["levels"] = model.seeds.levels();
    j["flips"] = model.seeds.flips;
    json bounds = json::array();
    for (const auto& [lo, hi] : model.quantizer.bounds()) bounds.push_back({lo, hi});
    j["quantizer"] = {{"levels", model.quantizer.levels()}, {"bounds", bounds}};
    json seeds = json::array();
    for (const auto& s : model.seeds.seeds) seeds.push_back(hv_to_json(s));
    j["seeds"] = seeds;
    j["h_oc"] = hv_to_json(model.h_oc);
    j["threshold"] = model.threshold;
    return j.dump(2) + "\n";
}

OneClassModel model_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("model JSON: ") + e.what());
    }
    try {
        if (j.at("version").get<int>() != kModelVersion)
            throw ParseError("model JSON: unsupported version " +
                             std::to_string(j.at("version").get<int>()));
        OneClassModel model;
        model.variant = variant_from_string(j.at("variant").get<std::string>());
        model.epochs = j.at("epochs").get<std::size_t>();
        const auto dims = j.at("dims").get<std::size_t>();
        std::vector<std::pair<double, double>> bounds;
        for (const auto& b : j.at("quantizer").at("bounds"))
            bounds.emplace_back(b.at(0).get<double>(), b.at(1).get<double>());
        model.quantizer = Quantizer(j.at("quantizer").at("levels").get<std::size_t>(),
                                    std::move(bounds));
        model.seeds.dims = dims;
        model.seeds.flips = j.at("flips").get<std::size_t>();
        for (const auto& s : j.at("seeds"))
            model.seeds.seeds.push_back(hv_from_json(s, hdc::Kind::bipolar));
        model.h_oc = hv_from_json(j.at("h_oc"), hdc::Kind::accumulator);
        model.threshold = j.at("threshold").get<double>();
        if (model.h_oc.dims() != dims || model.seeds.seeds.empty())
            throw ParseError("model JSON: inconsistent dimensions");
        for (const auto& s : model.seeds.seeds)
            if (s.dims() != dims) throw ParseError("model JSON: seed dimension mismatch");
        return model;
    } catch (const json::exception& e) {
        throw ParseError(std::string("model JSON: ") + e.what());
    }
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    const fs::path tmp = dir / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot write output file: " + tmp.string());
        out << content;
        if (!out) throw ConfigError("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

void save_model(const OneClassModel& model, const std::filesystem::path& path) {
    write_atomic(path, model_to_json(model));
}

OneClassModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open model file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return model_from_json(text);
}

}  // namespace odhd
