#include "textmodel/weights_io.hpp"

#include <bit>
#include <cstring>

#include <nlohmann/json.hpp>

#include "common/errors.hpp"
#include "common/fsio.hpp"
#include "common/hash.hpp"

namespace seedstab::textmodel {

namespace {

constexpr char kMagic[4] = {'S', 'S', 'T', 'W'};

void append_u32_le(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t read_u32_le(const std::string& bytes, std::size_t off) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[off + static_cast<std::size_t>(i)]))
             << (8 * i);
    }
    return v;
}

void append_f64_le(std::string& out, double d) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(d);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

double read_f64_le(const std::string& bytes, std::size_t off) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) {
        bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[off + static_cast<std::size_t>(i)]))
                << (8 * i);
    }
    return std::bit_cast<double>(bits);
}

}  // namespace

std::string serialize_weights(const ModelWeights& weights, const WeightsHeader& header) {
    nlohmann::json h;
    h["format"] = 1;
    h["dims"] = {{"vocab", weights.dims.vocab},
                 {"embedding_dim", weights.dims.embedding},
                 {"hidden_dim", weights.dims.hidden}};
    h["n_params"] = weights.n_params();
    h["vocab_hash"] = header.vocab_hash;
    h["config_hash"] = header.config_hash;
    h["seed"] = header.seed;
    h["variant"] = header.variant;
    h["epoch"] = header.epoch;
    const std::string hj = h.dump();

    std::string out;
    out.reserve(8 + hj.size() + 8 * weights.n_params());
    out.append(kMagic, 4);
    append_u32_le(out, static_cast<std::uint32_t>(hj.size()));
    out += hj;
    for (double v : weights.values) append_f64_le(out, v);
    return out;
}

LoadedWeights deserialize_weights(const std::string& bytes) {
    if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw DataError("weights file: bad magic");
    }
    const std::uint32_t hlen = read_u32_le(bytes, 4);
    if (bytes.size() < 8 + hlen) throw DataError("weights file: truncated header");

    nlohmann::json h;
    try {
        h = nlohmann::json::parse(bytes.substr(8, hlen));
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("weights file: malformed header: ") + e.what());
    }

    LoadedWeights out;
    out.header.dims.vocab = h.at("dims").at("vocab").get<int>();
    out.header.dims.embedding = h.at("dims").at("embedding_dim").get<int>();
    out.header.dims.hidden = h.at("dims").at("hidden_dim").get<int>();
    out.header.vocab_hash = h.at("vocab_hash").get<std::string>();
    out.header.config_hash = h.at("config_hash").get<std::string>();
    out.header.seed = h.at("seed").get<std::uint64_t>();
    out.header.variant = h.at("variant").get<std::string>();
    out.header.epoch = h.at("epoch").get<std::string>();

    const std::size_t n = h.at("n_params").get<std::size_t>();
    if (n != out.header.dims.n_params()) throw DataError("weights file: n_params inconsistent with dims");
    if (bytes.size() != 8 + hlen + 8 * n) throw DataError("weights file: payload size mismatch");

    out.weights = ModelWeights(out.header.dims);
    for (std::size_t i = 0; i < n; ++i) {
        out.weights.values[i] = read_f64_le(bytes, 8 + hlen + 8 * i);
    }
    return out;
}

void save_weights(const std::filesystem::path& path, const ModelWeights& weights,
                  const WeightsHeader& header) {
    atomic_write_file(path, serialize_weights(weights, header));
}

LoadedWeights load_weights(const std::filesystem::path& path) {
    return deserialize_weights(read_file(path));
}

std::string weights_digest(const ModelWeights& weights) {
    std::string payload;
    payload.reserve(8 * weights.n_params());
    for (double v : weights.values) {
        const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
        for (int i = 0; i < 8; ++i) payload.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
    }
    return hex64(fnv1a64(payload));
}

}  // namespace seedstab::textmodel
