#include "data/corpus.hpp"

#include <nlohmann/json.hpp>

#include "common/errors.hpp"
#include "common/fsio.hpp"

namespace seedstab::data {

namespace {

// Splits a TSV row; SST-2 text can contain anything except tab/newline.
std::vector<std::string> split_tab(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

int parse_label(const std::string& field, const std::filesystem::path& path, std::size_t line_no) {
    if (field == "0") return 0;
    if (field == "1") return 1;
    throw DataError(path.string() + ":" + std::to_string(line_no) +
                    ": label must be 0 or 1, got \"" + field + "\"");
}

}  // namespace

std::vector<LabeledInstance> load_tsv(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    if (lines.empty()) throw DataError(path.string() + ": empty file");

    auto header = split_tab(lines[0]);
    if (header.size() != 2 || header[0] != "sentence" || header[1] != "label")
        throw DataError(path.string() + ":1: expected header \"sentence\\tlabel\"");

    std::vector<LabeledInstance> out;
    out.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() && i + 1 == lines.size()) break;  // trailing newline
        auto fields = split_tab(lines[i]);
        if (fields.size() != 2)
            throw DataError(path.string() + ":" + std::to_string(i + 1) +
                            ": expected 2 tab-separated fields, got " +
                            std::to_string(fields.size()));
        LabeledInstance inst;
        inst.id = std::to_string(i);  // 1-based data row number
        inst.text = fields[0];
        inst.label = parse_label(fields[1], path, i + 1);
        if (inst.text.empty())
            throw DataError(path.string() + ":" + std::to_string(i + 1) + ": empty sentence");
        out.push_back(std::move(inst));
    }
    if (out.empty()) throw DataError(path.string() + ": no data rows");
    return out;
}

std::vector<std::string> load_unlabeled_tsv(const std::filesystem::path& path) {
    auto lines = read_lines(path);
    if (lines.empty()) throw DataError(path.string() + ": empty file");

    auto header = split_tab(lines[0]);
    int sentence_col = -1;
    for (std::size_t c = 0; c < header.size(); ++c)
        if (header[c] == "sentence") sentence_col = static_cast<int>(c);
    if (sentence_col < 0)
        throw DataError(path.string() + ":1: header has no \"sentence\" column");

    std::vector<std::string> out;
    out.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty() && i + 1 == lines.size()) break;
        auto fields = split_tab(lines[i]);
        if (static_cast<int>(fields.size()) <= sentence_col)
            throw DataError(path.string() + ":" + std::to_string(i + 1) +
                            ": missing sentence column");
        out.push_back(fields[static_cast<std::size_t>(sentence_col)]);
    }
    if (out.empty()) throw DataError(path.string() + ": no data rows");
    return out;
}

std::string to_jsonl(const std::vector<LabeledInstance>& instances) {
    std::string body;
    for (const auto& inst : instances) {
        nlohmann::json j;
        j["id"] = inst.id;
        j["label"] = inst.label;
        j["text"] = inst.text;
        body += j.dump();
        body += '\n';
    }
    return body;
}

std::vector<LabeledInstance> from_jsonl(const std::string& body) {
    std::vector<LabeledInstance> out;
    std::size_t start = 0;
    std::size_t line_no = 0;
    while (start < body.size()) {
        std::size_t nl = body.find('\n', start);
        if (nl == std::string::npos) nl = body.size();
        ++line_no;
        std::string_view line(body.data() + start, nl - start);
        start = nl + 1;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("id") ||
            !j.contains("label") || !j.contains("text"))
            throw DataError("jsonl line " + std::to_string(line_no) +
                            ": expected object with id, label, text");
        LabeledInstance inst;
        inst.id = j["id"].get<std::string>();
        inst.label = j["label"].get<int>();
        inst.text = j["text"].get<std::string>();
        if (inst.label != 0 && inst.label != 1)
            throw DataError("jsonl line " + std::to_string(line_no) + ": label must be 0 or 1");
        out.push_back(std::move(inst));
    }
    return out;
}

void save_jsonl(const std::filesystem::path& path, const std::vector<LabeledInstance>& instances) {
    atomic_write_file(path, to_jsonl(instances));
}

std::vector<LabeledInstance> load_jsonl(const std::filesystem::path& path) {
    return from_jsonl(read_file(path));
}

}  // namespace seedstab::data
