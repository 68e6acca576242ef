#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "npc/errors.hpp"

namespace npc {

/// Vector over GF(2), bits packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : length_(length), words_((length + 63) / 64, 0) {}

    static BitVector from_string(const std::string& bits);

    std::size_t size() const { return length_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void xor_assign(const BitVector& other);
    std::size_t weight() const;
    bool is_zero() const;

    std::string str() const;

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.length_ == b.length_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitVector& a, const BitVector& b) { return !(a == b); }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Codewords are plain GF(2) vectors whose length is the code length n.
using CodewordVector = BitVector;

/// Dense matrix over GF(2), row-major, bits packed into 64-bit words.
/// Addition is XOR; a matrix is its own additive inverse.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
          words_(rows * stride_, 0) {
        if (rows == 0 || cols == 0) throw Error("BitMatrix dimensions must be positive");
    }

    static BitMatrix identity(std::size_t n);

    /// Parses the canonical text form: one row of '0'/'1' characters per line.
    static BitMatrix from_string(const std::string& text);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (c & 63);
        std::uint64_t& w = words_[r * stride_ + (c >> 6)];
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }

    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);

    BitMatrix transposed() const;

    /// C = A * B^T; entry (i,j) is the GF(2) inner product of row i of A and
    /// row j of B.  G * H^T is the common use.
    static BitMatrix mult_transpose(const BitMatrix& a, const BitMatrix& b);

    /// y = x * M for a row vector x of length rows().
    BitVector mult_left(const BitVector& x) const;

    bool is_zero() const;

    /// Canonical text form: rows of '0'/'1' characters, one row per line,
    /// trailing newline after each row.
    std::string str() const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitMatrix& a, const BitMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> words_;

    friend struct RrefResult;
};

struct RrefResult {
    BitMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form over GF(2).  Row space is preserved.
RrefResult rref(const BitMatrix& m);

struct SystematicForm {
    BitMatrix gsys;                 // [I_k | P]
    std::vector<std::size_t> perm;  // gsys column j came from input column perm[j]
};

/// Brings a full-row-rank generator matrix into systematic form [I_k | P] by
/// row reduction and a column permutation.  Pivot columns are chosen leftmost
/// first, so an already systematic matrix comes back unchanged with the
/// identity permutation.  Throws if the input is rank deficient.
SystematicForm systematic_form(const BitMatrix& g);

/// H = [P^T | I_{n-k}] for a systematic G = [I_k | P]; G * H^T = 0.
/// Throws if the input is not in systematic form.
BitMatrix parity_check_from_generator(const BitMatrix& gsys);

/// Recovers the unique codeword that agrees with `received` on the non-erased
/// positions.  The bits of `received` at erased positions are ignored.
/// Decoding restricts H to the erased columns and solves the resulting linear
/// system with the syndrome of the known positions as right-hand side; it is
/// exact, not probabilistic.  Throws UnrecoverableErasure when the erased
/// columns of H are linearly dependent (or there are more erasures than
/// parity rows).
CodewordVector solve_erasures(const BitMatrix& h, const CodewordVector& received,
                              const std::vector<std::size_t>& erased);

struct DistanceReport {
    bool exact = false;
    std::size_t value = 0;  // d_min when exact, otherwise a lower bound: d_min >= value
};

/// Exact minimum distance by enumerating all 2^k - 1 nonzero codewords of a
/// full-rank generator matrix (Gray-code order, one row XOR per step).
/// Refuses k > 24.
std::size_t min_distance_exact(const BitMatrix& g);

/// Minimum distance via bounded-weight search against H: scans error patterns
/// of weight 1..search_cap and reports the first weight whose pattern lies in
/// the code (exact), or the lower bound search_cap + 1.  Stops early when the
/// number of inspected patterns would exceed `pattern_budget`, reporting the
/// bound reached so far.
DistanceReport min_distance_bounded(const BitMatrix& h, std::size_t search_cap,
                                    std::uint64_t pattern_budget = 2'000'000);

}  // namespace npc
