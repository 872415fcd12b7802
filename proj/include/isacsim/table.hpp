#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace isacsim {

inline constexpr const char* kToolVersion = "0.1.0";

// Rectangular result table. Cells are stored as their final CSV text
// (numbers rendered with %.17g at insertion), so emission is byte-stable.
class ResultTable {
public:
    explicit ResultTable(std::vector<std::string> columns);

    void add_row(const std::vector<std::string>& cells);

    class RowBuilder {
    public:
        explicit RowBuilder(ResultTable& t) : table_(t) {}
        RowBuilder& str(const std::string& s);
        RowBuilder& num(double v);
        RowBuilder& integer(std::uint64_t v);
        void done();

    private:
        ResultTable& table_;
        std::vector<std::string> cells_;
    };
    RowBuilder row() { return RowBuilder(*this); }

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    /// CSV with '#'-prefixed provenance comments, LF endings, '.' decimals.
    std::string to_csv(std::uint64_t seed, std::uint64_t config_hash) const;
    void write_csv(const std::string& path, std::uint64_t seed, std::uint64_t config_hash) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

std::string format_double(double v);

/// FNV-1a 64-bit over a string; used for config hashes in provenance lines.
std::uint64_t fnv1a64(const std::string& s);

std::string hex64(std::uint64_t v);

} // namespace isacsim
