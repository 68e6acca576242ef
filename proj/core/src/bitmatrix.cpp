#include "npc/bitmatrix.hpp"

#include <algorithm>
#include <bit>

namespace npc {

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw Error("bit string may contain only '0' and '1'");
    }
    return v;
}

void BitVector::xor_assign(const BitVector& other) {
    if (other.length_ != length_) throw Error("BitVector length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVector::is_zero() const {
    for (std::uint64_t word : words_)
        if (word) return false;
    return true;
}

std::string BitVector::str() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_string(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty()) lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    if (lines.empty()) throw Error("empty matrix text");
    BitMatrix m(lines.size(), lines[0].size());
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (lines[r].size() != m.cols_) throw Error("ragged matrix text");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (lines[r][c] == '1')
                m.set(r, c, true);
            else if (lines[r][c] != '0')
                throw Error("matrix text may contain only '0' and '1'");
        }
    }
    return m;
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    std::uint64_t* d = &words_[dst * stride_];
    const std::uint64_t* s = &words_[src * stride_];
    for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(words_.begin() + a * stride_, words_.begin() + (a + 1) * stride_,
                     words_.begin() + b * stride_);
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) v.set(c, true);
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw Error("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, v.get(c));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

BitMatrix BitMatrix::mult_transpose(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.cols_) throw Error("mult_transpose dimension mismatch");
    BitMatrix c(a.rows_, b.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        const std::uint64_t* ra = &a.words_[i * a.stride_];
        for (std::size_t j = 0; j < b.rows_; ++j) {
            const std::uint64_t* rb = &b.words_[j * b.stride_];
            std::uint64_t acc = 0;
            for (std::size_t w = 0; w < a.stride_; ++w) acc ^= ra[w] & rb[w];
            if (std::popcount(acc) & 1) c.set(i, j, true);
        }
    }
    return c;
}

BitVector BitMatrix::mult_left(const BitVector& x) const {
    if (x.size() != rows_) throw Error("mult_left dimension mismatch");
    BitVector y(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (x.get(r)) y.xor_assign(row(r));
    return y;
}

bool BitMatrix::is_zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

std::string BitMatrix::str() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res{m, 0, {}};
    BitMatrix& a = res.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && !a.get(pivot, c)) ++pivot;
        if (pivot == a.rows()) continue;
        a.swap_rows(r, pivot);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, c)) a.xor_row(i, r);
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

SystematicForm systematic_form(const BitMatrix& g) {
    RrefResult rr = rref(g);
    if (rr.rank < g.rows()) throw Error("not a generator matrix: rank deficient");

    const std::size_t k = g.rows(), n = g.cols();
    std::vector<std::size_t> perm;
    perm.reserve(n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    for (std::size_t c : rr.pivots) perm.push_back(c);
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) perm.push_back(c);

    BitMatrix gsys(k, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t src = perm[j];
        for (std::size_t i = 0; i < k; ++i)
            if (rr.reduced.get(i, src)) gsys.set(i, j, true);
    }
    return SystematicForm{std::move(gsys), std::move(perm)};
}

BitMatrix parity_check_from_generator(const BitMatrix& gsys) {
    const std::size_t k = gsys.rows(), n = gsys.cols();
    if (k >= n) throw Error("systematic generator requires k < n");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (gsys.get(i, j) != (i == j))
                throw Error("generator is not in systematic form [I_k | P]");

    const std::size_t m = n - k;
    BitMatrix h(m, n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i < k; ++i)
            if (gsys.get(i, k + r)) h.set(r, i, true);  // P^T
        h.set(r, k + r, true);                          // I_{n-k}
    }
    return h;
}

CodewordVector solve_erasures(const BitMatrix& h, const CodewordVector& received,
                              const std::vector<std::size_t>& erased) {
    const std::size_t n = h.cols(), m = h.rows();
    if (received.size() != n) throw Error("received word length mismatch");
    const std::size_t t = erased.size();
    if (t > m) throw UnrecoverableErasure(erased);

    std::vector<bool> is_erased(n, false);
    for (std::size_t p : erased) {
        if (p >= n) throw Error("erased position out of range");
        is_erased[p] = true;
    }

    // Syndrome of the known part: s_r = sum over known j of H[r][j] * c_j.
    BitVector syndrome(m);
    for (std::size_t r = 0; r < m; ++r) {
        bool s = false;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_erased[j] && h.get(r, j) && received.get(j)) s = !s;
        syndrome.set(r, s);
    }

    // Gaussian elimination on the m x t submatrix of erased columns,
    // augmented with the syndrome (column t).
    BitMatrix sys(m, t + 1);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < t; ++j)
            if (h.get(r, erased[j])) sys.set(r, j, true);
        sys.set(r, t, syndrome.get(r));
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col(t, 0);
    for (std::size_t c = 0; c < t && rank < m; ++c) {
        std::size_t pivot = rank;
        while (pivot < m && !sys.get(pivot, c)) ++pivot;
        if (pivot == m) throw UnrecoverableErasure(erased);  // dependent columns
        sys.swap_rows(rank, pivot);
        for (std::size_t i = 0; i < m; ++i)
            if (i != rank && sys.get(i, c)) sys.xor_row(i, rank);
        pivot_col[c] = rank;
        ++rank;
    }

    CodewordVector out = received;
    for (std::size_t j = 0; j < t; ++j) out.set(erased[j], sys.get(pivot_col[j], t));
    return out;
}

std::size_t min_distance_exact(const BitMatrix& g) {
    const std::size_t k = g.rows();
    if (k > 24) throw Error("min_distance_exact limited to k <= 24");
    std::vector<BitVector> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) rows.push_back(g.row(i));

    BitVector acc(g.cols());
    std::size_t best = g.cols() + 1;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t m = 1; m < total; ++m) {
        acc.xor_assign(rows[static_cast<std::size_t>(std::countr_zero(m))]);
        std::size_t w = acc.weight();
        if (w < best && w > 0) best = w;
    }
    return best;
}

namespace {

// Advances idx through weight-w combinations of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t w = idx.size();
    std::size_t i = w;
    while (i-- > 0) {
        if (idx[i] < n - (w - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

DistanceReport min_distance_bounded(const BitMatrix& h, std::size_t search_cap,
                                    std::uint64_t pattern_budget) {
    const std::size_t n = h.cols();
    std::vector<BitVector> cols(n, BitVector(h.rows()));
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (h.get(r, c)) cols[c].set(r, true);

    std::uint64_t inspected = 0;
    for (std::size_t w = 1; w <= search_cap && w <= n; ++w) {
        std::vector<std::size_t> idx(w);
        for (std::size_t i = 0; i < w; ++i) idx[i] = i;
        do {
            if (++inspected > pattern_budget) return DistanceReport{false, w};
            BitVector s(h.rows());
            for (std::size_t i : idx) s.xor_assign(cols[i]);
            if (s.is_zero()) return DistanceReport{true, w};  // weight-w codeword
        } while (next_combination(idx, n));
    }
    return DistanceReport{false, search_cap + 1};
}

}  // namespace npc
