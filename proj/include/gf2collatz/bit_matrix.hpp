#pragma once

#include <cstdint>
#include <vector>

#include "gf2collatz/errors.hpp"

namespace gf2collatz {

// Dense row-major bit matrix.
class BitMatrix {
public:
    BitMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          w_(static_cast<std::size_t>(rows * words_per_row_), 0) {
        if (rows < 1 || cols < 1) throw Error("bit matrix must have positive shape");
    }

    long rows() const noexcept { return rows_; }
    long cols() const noexcept { return cols_; }

    int get(long i, long j) const {
        check(i, j);
        return static_cast<int>((w_[word_index(i, j)] >> (j % 64)) & 1);
    }

    void set(long i, long j, int v) {
        check(i, j);
        const std::uint64_t bit = 1ULL << (j % 64);
        if (v) w_[word_index(i, j)] |= bit;
        else w_[word_index(i, j)] &= ~bit;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.w_ == b.w_;
    }

private:
    void check(long i, long j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("bit matrix index out of range");
    }
    std::size_t word_index(long i, long j) const noexcept {
        return static_cast<std::size_t>(i * words_per_row_ + j / 64);
    }

    long rows_;
    long cols_;
    long words_per_row_;
    std::vector<std::uint64_t> w_;
};

} // namespace gf2collatz
