#include "checklist/evaluate.hpp"

#include <unordered_map>

#include <nlohmann/json.hpp>

#include "common/errors.hpp"

namespace seedstab::checklist {

using nlohmann::json;

std::string to_string(DirDirection d) {
    switch (d) {
        case DirDirection::up: return "up";
        case DirDirection::down: return "down";
        case DirDirection::within_tolerance: return "within-tolerance";
    }
    return "within-tolerance";
}

EvalOutput evaluate_model(const ForwardFn& forward,
                          const std::vector<Capability>& capabilities,
                          const std::vector<TestInstance>& instances,
                          double dir_tolerance) {
    std::unordered_map<std::string, const Capability*> caps;
    for (const auto& cap : capabilities) caps[cap.slug] = &cap;

    struct OriginalState {
        int pred = 0;
        double confidence = 0.0;
    };
    std::unordered_map<std::string, OriginalState> originals;
    std::unordered_map<std::string, std::size_t> case_index;

    EvalOutput out;
    out.records.reserve(instances.size());

    for (const auto& inst : instances) {
        auto cap_it = caps.find(inst.capability);
        if (cap_it == caps.end())
            throw EvalError("instance " + inst.instance_id + " references unknown capability \"" +
                            inst.capability + "\"");
        const Capability& cap = *cap_it->second;

        auto [pred, confidence] = forward(inst.text);
        EvalRecord rec;
        rec.instance_id = inst.instance_id;
        rec.case_id = inst.case_id;
        rec.capability = inst.capability;
        rec.pred = pred;
        rec.confidence = confidence;

        switch (cap.test_type) {
            case TestType::mft:
                if (inst.expected_label < 0)
                    throw EvalError("MFT instance " + inst.instance_id + " has no expected label");
                rec.has_mft_failed = true;
                rec.mft_failed = pred != inst.expected_label;
                break;
            case TestType::inv:
                if (!inst.perturbed) {
                    originals[inst.case_id] = {pred, confidence};
                } else {
                    auto orig = originals.find(inst.case_id);
                    if (orig == originals.end())
                        throw EvalError("instance " + inst.instance_id + ": case " +
                                        inst.case_id + " has no original");
                    rec.has_flipped = true;
                    rec.flipped = pred != orig->second.pred;
                }
                break;
            case TestType::dir:
                if (!inst.perturbed) {
                    originals[inst.case_id] = {pred, confidence};
                } else {
                    auto orig = originals.find(inst.case_id);
                    if (orig == originals.end())
                        throw EvalError("instance " + inst.instance_id + ": case " +
                                        inst.case_id + " has no original");
                    double delta = confidence - orig->second.confidence;
                    rec.has_dir = true;
                    if (delta > dir_tolerance) rec.dir_direction = DirDirection::up;
                    else if (delta < -dir_tolerance) rec.dir_direction = DirDirection::down;
                    else rec.dir_direction = DirDirection::within_tolerance;
                    rec.dir_failed =
                        (cap.direction == Direction::positive_up &&
                         rec.dir_direction == DirDirection::down) ||
                        (cap.direction == Direction::negative_up &&
                         rec.dir_direction == DirDirection::up);
                }
                break;
        }

        auto idx_it = case_index.find(inst.case_id);
        if (idx_it == case_index.end()) {
            idx_it = case_index.emplace(inst.case_id, out.cases.size()).first;
            out.cases.push_back({inst.case_id, inst.capability, false, {}});
        }
        if (rec.failed()) {
            auto& result = out.cases[idx_it->second];
            result.failed = true;
            result.failing_instance_ids.push_back(rec.instance_id);
        }
        out.records.push_back(std::move(rec));
    }
    return out;
}

std::string eval_records_to_jsonl(const std::vector<EvalRecord>& records,
                                  int seed, const std::string& variant) {
    std::string body;
    for (const auto& rec : records) {
        json j;
        j["seed"] = seed;
        j["variant"] = variant;
        j["instance_id"] = rec.instance_id;
        j["case_id"] = rec.case_id;
        j["capability"] = rec.capability;
        j["pred"] = rec.pred;
        j["confidence"] = rec.confidence;
        json flags = json::object();
        if (rec.has_mft_failed) flags["mft_failed"] = rec.mft_failed;
        if (rec.has_flipped) flags["flipped"] = rec.flipped;
        if (rec.has_dir) {
            flags["dir_direction"] = to_string(rec.dir_direction);
            flags["dir_failed"] = rec.dir_failed;
        }
        j["flags"] = std::move(flags);
        body += j.dump();
        body += '\n';
    }
    return body;
}

std::vector<EvalRecord> eval_records_from_jsonl(const std::string& body) {
    std::vector<EvalRecord> out;
    std::size_t start = 0, line_no = 0;
    while (start < body.size()) {
        std::size_t nl = body.find('\n', start);
        if (nl == std::string::npos) nl = body.size();
        ++line_no;
        std::string_view line(body.data() + start, nl - start);
        start = nl + 1;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw DataError("eval jsonl line " + std::to_string(line_no) + ": bad json");
        EvalRecord rec;
        rec.instance_id = j.at("instance_id").get<std::string>();
        rec.case_id = j.at("case_id").get<std::string>();
        rec.capability = j.at("capability").get<std::string>();
        rec.pred = j.at("pred").get<int>();
        rec.confidence = j.at("confidence").get<double>();
        const auto& flags = j.at("flags");
        if (flags.contains("mft_failed")) {
            rec.has_mft_failed = true;
            rec.mft_failed = flags["mft_failed"].get<bool>();
        }
        if (flags.contains("flipped")) {
            rec.has_flipped = true;
            rec.flipped = flags["flipped"].get<bool>();
        }
        if (flags.contains("dir_direction")) {
            rec.has_dir = true;
            const auto dir = flags["dir_direction"].get<std::string>();
            if (dir == "up") rec.dir_direction = DirDirection::up;
            else if (dir == "down") rec.dir_direction = DirDirection::down;
            else rec.dir_direction = DirDirection::within_tolerance;
            rec.dir_failed = flags.value("dir_failed", false);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace seedstab::checklist
