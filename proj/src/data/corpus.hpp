#ifndef SEEDSTAB_DATA_CORPUS_HPP
#define SEEDSTAB_DATA_CORPUS_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace seedstab::data {

struct LabeledInstance {
    std::string id;
    std::string text;
    int label = 0;  // 0 negative, 1 positive
};

// GLUE SST-2 training format: header "sentence<TAB>label", one instance per
// row, ids assigned as 1-based data row numbers. Labels outside {0,1} and
// malformed rows raise DataError naming the line.
std::vector<LabeledInstance> load_tsv(const std::filesystem::path& path);

// GLUE test format ("index<TAB>sentence" or a bare "sentence" column);
// returns the sentences in file order.
std::vector<std::string> load_unlabeled_tsv(const std::filesystem::path& path);

// JSONL round-trip: {"id": ..., "label": ..., "text": ...} per line.
std::string to_jsonl(const std::vector<LabeledInstance>& instances);
std::vector<LabeledInstance> from_jsonl(const std::string& body);

void save_jsonl(const std::filesystem::path& path, const std::vector<LabeledInstance>& instances);
std::vector<LabeledInstance> load_jsonl(const std::filesystem::path& path);

}  // namespace seedstab::data

#endif
