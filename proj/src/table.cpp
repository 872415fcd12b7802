#include "isacsim/table.hpp"

#include <cstdio>
#include <fstream>

#include "isacsim/errors.hpp"

namespace isacsim {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw ConfigError("ResultTable: no columns");
}

void ResultTable::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_.size())
        throw ConfigError("ResultTable: row width does not match header");
    rows_.push_back(cells);
}

ResultTable::RowBuilder& ResultTable::RowBuilder::str(const std::string& s) {
    cells_.push_back(s);
    return *this;
}
ResultTable::RowBuilder& ResultTable::RowBuilder::num(double v) {
    cells_.push_back(format_double(v));
    return *this;
}
ResultTable::RowBuilder& ResultTable::RowBuilder::integer(std::uint64_t v) {
    cells_.push_back(std::to_string(v));
    return *this;
}
void ResultTable::RowBuilder::done() { table_.add_row(cells_); }

std::string ResultTable::to_csv(std::uint64_t seed, std::uint64_t config_hash) const {
    std::string out;
    out += "# tool_version=";
    out += kToolVersion;
    out += "\n# seed=" + std::to_string(seed) + "\n";
    out += "# config_hash=" + hex64(config_hash) + "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += ',';
        out += columns_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

void ResultTable::write_csv(const std::string& path, std::uint64_t seed,
                            std::uint64_t config_hash) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open for writing: " + path);
    f << to_csv(seed, config_hash);
}

} // namespace isacsim
