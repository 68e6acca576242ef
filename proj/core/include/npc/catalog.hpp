#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "npc/linear_code.hpp"

namespace npc {

/// Explicit generator matrices bundled with the catalog (canonical text
/// form).  The [15,8] matrix is the catalog's only source for that code; the
/// [15,11] one doubles as a fixture that the BCH construction must reproduce.
extern const char* const kGenerator15_11;
extern const char* const kGenerator15_8;

/// One bundled protection-code record.  Entries labeled Hamming/BCH carry a
/// constructible matrix; rows whose construction the tables do not specify
/// ship as parameter-only records (no matrix is ever fabricated for them).
struct CatalogEntry {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::string type;    // label as printed in the source table
    std::string tables;  // which tables list the code, e.g. "I" or "I,III"
    std::string note;    // bookkeeping discrepancies recorded verbatim

    enum class MatrixSource { None, Bch, Explicit };
    MatrixSource matrix_source = MatrixSource::None;
    std::size_t bch_designed_d = 0;  // when matrix_source == Bch
    std::string explicit_rows;       // when matrix_source == Explicit

    std::size_t m() const { return n - k; }
    std::size_t t() const { return d - 1; }
    bool has_matrix() const { return matrix_source != MatrixSource::None; }

    /// Materializes the code (constructing or parsing the generator).
    LinearCode code() const;

    std::string params() const {
        return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
    }
};

class Catalog {
public:
    /// The compiled-in catalog of the bundled code tables.
    static const Catalog& builtin();

    /// Loads a user catalog file: one record per line,
    ///   n k d_min provenance [generator rows inline | '-']
    /// with rows in the canonical '0'/'1' text form.
    static Catalog load(const std::string& path);
    static Catalog parse(std::istream& in);

    void save(std::ostream& out) const;

    const std::vector<CatalogEntry>& entries() const { return entries_; }

    /// Entries with the given length.
    std::vector<CatalogEntry> query_n(std::size_t n) const;
    /// Entries protecting exactly t failures (d_min = t + 1).
    std::vector<CatalogEntry> query_t(std::size_t t) const;
    /// Combined filter; unset fields match everything.
    std::vector<CatalogEntry> query(std::optional<std::size_t> n,
                                    std::optional<std::size_t> t) const;

private:
    std::vector<CatalogEntry> entries_;
};

}  // namespace npc
