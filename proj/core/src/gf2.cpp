#include "lch/gf2.hpp"

#include "lch/error.hpp"

namespace lch {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, std::vector<std::uint64_t>((cols + 63) / 64, 0)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    auto bit = std::uint64_t{1} << (c & 63);
    if (v)
        data_[r][c >> 6] |= bit;
    else
        data_[r][c >> 6] &= ~bit;
}

bool BitMatrix::is_zero() const {
    for (const auto& row : data_)
        for (auto b : row)
            if (b) return false;
    return true;
}

std::size_t BitMatrix::rank() const {
    auto m = data_;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t blk = c >> 6;
        auto bit = std::uint64_t{1} << (c & 63);
        std::size_t piv = r;
        while (piv < rows_ && !(m[piv][blk] & bit)) ++piv;
        if (piv == rows_) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && (m[i][blk] & bit))
                for (std::size_t k = blk; k < m[i].size(); ++k) m[i][k] ^= m[r][k];
        ++r;
    }
    return r;
}

BitMatrix BitMatrix::sub(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    BitMatrix out(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (get(rs[i], cs[j])) out.set(i, j, true);
    return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
    BitMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a.get(i, k))
                for (std::size_t w = 0; w < out.data_[i].size(); ++w) out.data_[i][w] ^= b.data_[k][w];
    return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix dimension mismatch");
    BitMatrix out = a;
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t w = 0; w < out.data_[i].size(); ++w) out.data_[i][w] ^= b.data_[i][w];
    return out;
}

}  // namespace lch
