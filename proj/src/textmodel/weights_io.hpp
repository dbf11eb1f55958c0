#ifndef SEEDSTAB_TEXTMODEL_WEIGHTS_IO_HPP
#define SEEDSTAB_TEXTMODEL_WEIGHTS_IO_HPP

#include <filesystem>
#include <string>

#include "textmodel/model.hpp"

namespace seedstab::textmodel {

// Weight file = "SSTW" magic, u32 LE header length, JSON header, then the
// parameter vector as little-endian IEEE-754 doubles. The header pins dims,
// a vocab hash and a train-config hash so mismatched files are caught at load.
struct WeightsHeader {
    Dims dims;
    std::string vocab_hash;
    std::string config_hash;
    std::uint64_t seed = 0;
    std::string variant;  // "vanilla" | "swa"
    std::string epoch;    // "1".."E" or "final"
};

std::string serialize_weights(const ModelWeights& weights, const WeightsHeader& header);

struct LoadedWeights {
    ModelWeights weights;
    WeightsHeader header;
};

LoadedWeights deserialize_weights(const std::string& bytes);

void save_weights(const std::filesystem::path& path, const ModelWeights& weights,
                  const WeightsHeader& header);
LoadedWeights load_weights(const std::filesystem::path& path);

// FNV-1a over the serialized parameter payload; used for snapshot hashes in
// the training logs.
std::string weights_digest(const ModelWeights& weights);

}  // namespace seedstab::textmodel

#endif
