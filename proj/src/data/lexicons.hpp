#ifndef SEEDSTAB_DATA_LEXICONS_HPP
#define SEEDSTAB_DATA_LEXICONS_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace seedstab::data {

// Named word/phrase lists feeding the corpus generator and the behavioral
// suite. Entries are single tokens unless the list name says "phrases" or
// "hedges". The first entry of "industries" is the pivot for the
// industry-swap test.
struct LexiconSet {
    std::map<std::string, std::vector<std::string>> lists;

    bool has(const std::string& name) const { return lists.count(name) != 0; }
    // Throws ConfigError naming the lexicon when absent or empty.
    const std::vector<std::string>& get(const std::string& name) const;

    static LexiconSet builtin();

    // One <name>.txt per list, one entry per line, written atomically.
    void save_dir(const std::filesystem::path& dir) const;
    // Reads every *.txt in dir; missing dir -> ConfigError.
    static LexiconSet load_dir(const std::filesystem::path& dir);
};

}  // namespace seedstab::data

#endif
