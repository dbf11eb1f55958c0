#include "common/fsio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "common/errors.hpp"

namespace seedstab {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void atomic_write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write file: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw DataError("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::vector<std::string> read_lines(const fs::path& path) {
    std::vector<std::string> lines;
    std::string body = read_file(path);
    std::string cur;
    for (char c : body) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

void write_lines(const fs::path& path, const std::vector<std::string>& lines) {
    std::string body;
    for (const auto& l : lines) {
        body += l;
        body += '\n';
    }
    atomic_write_file(path, body);
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace seedstab
