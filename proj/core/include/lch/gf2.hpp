#pragma once

#include <cstdint>
#include <vector>

namespace lch {

// Dense matrix over GF(2), rows packed into 64-bit blocks.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return (data_[r][c >> 6] >> (c & 63)) & 1u; }
    void set(std::size_t r, std::size_t c, bool v);
    void flip(std::size_t r, std::size_t c) { data_[r][c >> 6] ^= std::uint64_t{1} << (c & 63); }

    bool is_zero() const;
    std::size_t rank() const;
    BitMatrix sub(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::uint64_t>> data_;
};

}  // namespace lch
