#include "npc/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "npc/bch.hpp"

namespace npc {

const char* const kGenerator15_11 =
    "100000000001100\n"
    "010000000000110\n"
    "001000000000011\n"
    "000100000001101\n"
    "000010000001010\n"
    "000001000000101\n"
    "000000100001110\n"
    "000000010000111\n"
    "000000001001111\n"
    "000000000101011\n"
    "000000000011001\n";

const char* const kGenerator15_8 =
    "100000001101000\n"
    "010000000110100\n"
    "001000000011010\n"
    "000100000001101\n"
    "000010001101110\n"
    "000001000110111\n"
    "000000101110011\n"
    "000000011010001\n";

LinearCode CatalogEntry::code() const {
    switch (matrix_source) {
        case MatrixSource::Bch:
            return construct_bch(n, bch_designed_d);
        case MatrixSource::Explicit: {
            BitMatrix g = BitMatrix::from_string(explicit_rows);
            if (g.rows() != k || g.cols() != n)
                throw Error("catalog entry " + params() + " has a generator of the wrong shape");
            SystematicForm sf = systematic_form(g);
            return code_from_systematic(sf.gsys, d, "catalog-table");
        }
        case MatrixSource::None:
            break;
    }
    throw Error("catalog entry " + params() + " is parameter-only (no generator available)");
}

namespace {

CatalogEntry param_entry(std::size_t n, std::size_t k, std::size_t d, std::string type,
                         std::string tables, std::string note = "") {
    CatalogEntry e;
    e.n = n;
    e.k = k;
    e.d = d;
    e.type = std::move(type);
    e.tables = std::move(tables);
    e.note = std::move(note);
    return e;
}

CatalogEntry bch_entry(std::size_t n, std::size_t k, std::size_t d, std::string type,
                       std::string tables, std::string note = "") {
    CatalogEntry e = param_entry(n, k, d, std::move(type), std::move(tables), std::move(note));
    e.matrix_source = CatalogEntry::MatrixSource::Bch;
    e.bch_designed_d = d;
    return e;
}

std::vector<CatalogEntry> builtin_entries() {
    std::vector<CatalogEntry> v;

    // Single and double link failures (t = 2).
    v.push_back(bch_entry(7, 4, 3, "Hamming code", "I"));
    v.push_back(param_entry(10, 6, 3, "Linear code", "I"));
    v.push_back(bch_entry(15, 11, 3, "Hamming code", "I,III"));
    v.push_back(param_entry(19, 12, 3, "Extension construction", "I"));
    v.push_back(param_entry(23, 15, 3, "Extension construction", "I"));
    v.push_back(param_entry(25, 20, 3, "Linear code", "I"));
    v.push_back(bch_entry(31, 26, 3, "Hamming code", "I,III"));
    v.push_back(param_entry(39, 31, 3, "Extension construction", "I"));
    v.push_back(param_entry(47, 38, 3, "Extension construction", "I"));
    v.push_back(bch_entry(63, 57, 3, "Hamming code", "I"));
    v.push_back(param_entry(71, 63, 3, "Matrix construction", "I"));
    v.push_back(param_entry(79, 70, 3, "Extension construction", "I"));
    v.push_back(param_entry(95, 85, 3, "Extension construction", "I"));
    v.push_back(bch_entry(127, 120, 3, "Hamming code", "I"));

    // Up to four link failures (t = 4).
    v.push_back(param_entry(15, 8, 5, "Hamming code", "II",
                            "as printed; the label conflicts with the BCH [15,7,5]"));
    v.push_back(param_entry(19, 11, 5, "Lengthening Hamming-Preparata code", "II"));
    v.push_back(param_entry(20, 9, 5, "Lengthening Hamming-Preparata code", "II"));
    v.push_back(param_entry(23, 14, 5, "Linear code", "II"));
    v.push_back(bch_entry(31, 21, 5, "BCH code", "II,III"));
    v.push_back(param_entry(33, 23, 5, "Linear code", "II"));
    v.push_back(param_entry(35, 22, 5, "Shorting Preparata code", "II"));
    v.push_back(param_entry(63, 52, 5, "Preparata code", "II"));
    v.push_back(param_entry(70, 58, 5, "Lengthening Hamming-Preparata code", "II"));
    v.push_back(param_entry(81, 68, 5, "Linear code", "II"));
    v.push_back(param_entry(128, 114, 5, "BCH code", "II",
                            "even length; not constructible as a cyclic code, shipped as printed"));
    v.push_back(param_entry(135, 117, 5, "Shorting Preparata code", "II"));

    // BCH families with arbitrary designed distance.
    {
        CatalogEntry e = param_entry(15, 8, 4, "BCH code", "III");
        e.matrix_source = CatalogEntry::MatrixSource::Explicit;
        e.explicit_rows = kGenerator15_8;
        v.push_back(std::move(e));
    }
    v.push_back(bch_entry(15, 7, 5, "BCH code", "III"));
    v.push_back(bch_entry(31, 16, 7, "BCH code", "III"));
    v.push_back(bch_entry(31, 11, 11, "BCH code", "III"));
    v.push_back(bch_entry(31, 6, 15, "BCH code", "III"));
    v.push_back(bch_entry(127, 113, 5, "BCH code", "III"));
    v.push_back(bch_entry(127, 106, 7, "BCH code", "III"));
    v.push_back(bch_entry(127, 78, 15, "BCH code", "III"));
    v.push_back(bch_entry(127, 50, 27, "BCH code", "III",
                          "printed as [127,77,27] with m = 50; k and m taken from the construction"));

    std::stable_sort(v.begin(), v.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.k != b.k) return a.k > b.k;
        return a.d < b.d;
    });
    return v;
}

std::string to_token(const std::string& label) {
    std::string t = label;
    for (char& c : t)
        if (c == ' ') c = '-';
    return t;
}

std::string from_token(const std::string& token) {
    std::string t = token;
    for (char& c : t)
        if (c == '-') c = ' ';
    return t;
}

}  // namespace

const Catalog& Catalog::builtin() {
    static const Catalog c = [] {
        Catalog cat;
        cat.entries_ = builtin_entries();
        return cat;
    }();
    return c;
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open catalog file '" + path + "'");
    return parse(in);
}

Catalog Catalog::parse(std::istream& in) {
    Catalog cat;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        CatalogEntry e;
        std::string prov;
        if (!(ls >> e.n >> e.k >> e.d >> prov))
            throw ParseError(lineno, "expected 'n k d provenance ...'");
        if (e.k == 0 || e.n <= e.k || e.d == 0 || e.d > e.n)
            throw ParseError(lineno, "inconsistent parameters " + e.params());
        e.type = from_token(prov);
        std::vector<std::string> rows;
        std::string tok;
        while (ls >> tok) rows.push_back(tok);
        if (rows.size() == 1 && rows[0] == "-") {
            e.matrix_source = CatalogEntry::MatrixSource::None;
        } else if (!rows.empty()) {
            if (rows.size() != e.k)
                throw ParseError(lineno, "expected " + std::to_string(e.k) + " generator rows");
            std::string text;
            for (const std::string& r : rows) {
                if (r.size() != e.n)
                    throw ParseError(lineno, "generator row of length " + std::to_string(r.size()) +
                                                 ", expected " + std::to_string(e.n));
                text += r;
                text += '\n';
            }
            e.matrix_source = CatalogEntry::MatrixSource::Explicit;
            e.explicit_rows = std::move(text);
        } else {
            throw ParseError(lineno, "record needs generator rows or '-'");
        }
        cat.entries_.push_back(std::move(e));
    }
    return cat;
}

void Catalog::save(std::ostream& out) const {
    for (const CatalogEntry& e : entries_) {
        out << e.n << ' ' << e.k << ' ' << e.d << ' ' << to_token(e.type);
        if (e.has_matrix()) {
            const BitMatrix g = e.code().generator;
            for (std::size_t r = 0; r < g.rows(); ++r) {
                out << ' ';
                for (std::size_t c = 0; c < g.cols(); ++c) out << (g.get(r, c) ? '1' : '0');
            }
        } else {
            out << " -";
        }
        out << '\n';
    }
}

std::vector<CatalogEntry> Catalog::query_n(std::size_t n) const {
    return query(n, std::nullopt);
}

std::vector<CatalogEntry> Catalog::query_t(std::size_t t) const {
    return query(std::nullopt, t);
}

std::vector<CatalogEntry> Catalog::query(std::optional<std::size_t> n,
                                         std::optional<std::size_t> t) const {
    std::vector<CatalogEntry> out;
    for (const CatalogEntry& e : entries_) {
        if (n && e.n != *n) continue;
        if (t && e.t() != *t) continue;
        out.push_back(e);
    }
    return out;
}

}  // namespace npc
