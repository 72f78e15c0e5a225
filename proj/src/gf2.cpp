#include "leray/gf2.hpp"

#include <algorithm>

#include "leray/errors.hpp"

namespace leray {

namespace {
constexpr int kWordBits = 64;

int words_for(int bits) { return (bits + kWordBits - 1) / kWordBits; }

void check_nonnegative(int rows, int cols) {
    if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be non-negative");
}
}  // namespace

Gf2Vector::Gf2Vector(int len) : len_(len) {
    if (len < 0) throw InputError("vector length must be non-negative");
    words_.assign(static_cast<std::size_t>(words_for(len)), 0);
}

bool Gf2Vector::get(int i) const {
    if (i < 0 || i >= len_) throw InputError("vector index out of range");
    return (words_[static_cast<std::size_t>(i / kWordBits)] >> (i % kWordBits)) & 1;
}

void Gf2Vector::set(int i, bool value) {
    if (i < 0 || i >= len_) throw InputError("vector index out of range");
    std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    auto& w = words_[static_cast<std::size_t>(i / kWordBits)];
    w = value ? (w | mask) : (w & ~mask);
}

void Gf2Vector::flip(int i) { set(i, !get(i)); }

bool Gf2Vector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& o) {
    if (len_ != o.len_) throw InputError("vector length mismatch");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
}

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_nonnegative(rows, cols);
    words_per_row_ = words_for(cols);
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(words_per_row_), 0);
}

bool Gf2Matrix::get(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InputError("matrix index out of range");
    std::size_t idx = static_cast<std::size_t>(r) * words_per_row_ + c / kWordBits;
    return (data_[idx] >> (c % kWordBits)) & 1;
}

void Gf2Matrix::set(int r, int c, bool value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw InputError("matrix index out of range");
    std::size_t idx = static_cast<std::size_t>(r) * words_per_row_ + c / kWordBits;
    std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    data_[idx] = value ? (data_[idx] | mask) : (data_[idx] & ~mask);
}

bool Gf2Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix shape mismatch in product");
    Gf2Matrix out(rows_, o.cols_);
    // Row-by-row: out[r] = XOR of o's rows selected by this[r]'s bits.
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            if (!get(r, k)) continue;
            std::size_t dst = static_cast<std::size_t>(r) * out.words_per_row_;
            std::size_t src = static_cast<std::size_t>(k) * o.words_per_row_;
            for (int w = 0; w < out.words_per_row_; ++w) out.data_[dst + w] ^= o.data_[src + w];
        }
    }
    return out;
}

Gf2Vector Gf2Matrix::column(int c) const {
    if (c < 0 || c >= cols_) throw InputError("matrix index out of range");
    Gf2Vector v(rows_);
    for (int r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r, true);
    return v;
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& x) const {
    if (x.length() != cols_) throw InputError("vector length mismatch in product");
    Gf2Vector out(rows_);
    for (int c = 0; c < cols_; ++c)
        if (x.get(c)) out ^= column(c);
    return out;
}

void Gf2Matrix::xor_row(int dst, int src) {
    std::size_t d = static_cast<std::size_t>(dst) * words_per_row_;
    std::size_t s = static_cast<std::size_t>(src) * words_per_row_;
    for (int w = 0; w < words_per_row_; ++w) data_[d + w] ^= data_[s + w];
}

int rank(Gf2Matrix m) {
    int r = 0;
    for (int c = 0; c < m.cols_ && r < m.rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows_; ++i) {
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            std::size_t a = static_cast<std::size_t>(pivot) * m.words_per_row_;
            std::size_t b = static_cast<std::size_t>(r) * m.words_per_row_;
            for (int w = 0; w < m.words_per_row_; ++w) std::swap(m.data_[a + w], m.data_[b + w]);
        }
        for (int i = r + 1; i < m.rows_; ++i)
            if (m.get(i, c)) m.xor_row(i, r);
        ++r;
    }
    return r;
}

bool in_column_space(const Gf2Matrix& m, const Gf2Vector& v) {
    if (v.length() != m.rows()) throw InputError("dimension mismatch: v must have one entry per matrix row");
    // rank([m | v]) == rank(m), eliminated in one pass on the augmented matrix.
    Gf2Matrix aug(m.rows_, m.cols_ + 1);
    for (int r = 0; r < m.rows_; ++r) {
        for (int w = 0; w < m.words_per_row_; ++w)
            aug.data_[static_cast<std::size_t>(r) * aug.words_per_row_ + w] =
                m.data_[static_cast<std::size_t>(r) * m.words_per_row_ + w];
        if (v.get(r)) aug.set(r, m.cols_, true);
    }
    int r = 0;
    for (int c = 0; c < m.cols_ && r < aug.rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < aug.rows_; ++i) {
            if (aug.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            std::size_t a = static_cast<std::size_t>(pivot) * aug.words_per_row_;
            std::size_t b = static_cast<std::size_t>(r) * aug.words_per_row_;
            for (int w = 0; w < aug.words_per_row_; ++w) std::swap(aug.data_[a + w], aug.data_[b + w]);
        }
        for (int i = r + 1; i < aug.rows_; ++i)
            if (aug.get(i, c)) aug.xor_row(i, r);
        ++r;
    }
    // Inconsistent iff some remaining row is zero on m's columns but 1 in the
    // augmented column.
    for (int i = r; i < aug.rows_; ++i)
        if (aug.get(i, m.cols_)) return false;
    return true;
}

}  // namespace leray
