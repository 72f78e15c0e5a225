#ifndef LERAY_GF2_HPP
#define LERAY_GF2_HPP

#include <cstdint>
#include <vector>

namespace leray {

// Dense vector over GF(2), bit-packed 64 entries per word.
class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(int len);

    int length() const { return len_; }
    bool get(int i) const;
    void set(int i, bool value);
    void flip(int i);
    bool is_zero() const;

    // XOR-accumulate another vector of the same length.
    Gf2Vector& operator^=(const Gf2Vector& o);
    bool operator==(const Gf2Vector&) const = default;

private:
    friend class Gf2Matrix;
    int len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense matrix over GF(2), row-major, rows bit-packed into 64-bit words.
// Degenerate shapes (0 x k, k x 0) are valid.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const;
    void set(int r, int c, bool value);

    bool is_zero() const;
    Gf2Matrix transposed() const;
    Gf2Matrix operator*(const Gf2Matrix& o) const;

    // Column c as a vector of length rows().
    Gf2Vector column(int c) const;
    // Matrix-vector product; x.length() must equal cols().
    Gf2Vector apply(const Gf2Vector& x) const;

private:
    friend int rank(Gf2Matrix m);
    friend bool in_column_space(const Gf2Matrix& m, const Gf2Vector& v);

    void xor_row(int dst, int src);

    int rows_ = 0;
    int cols_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

// Rank via Gaussian elimination with word-parallel row XOR. Takes a copy.
int rank(Gf2Matrix m);

// Whether v lies in the span of m's columns, i.e. m x = v is solvable.
// Decided by rank(m) == rank([m | v]); v.length() must equal m.rows().
bool in_column_space(const Gf2Matrix& m, const Gf2Vector& v);

}  // namespace leray

#endif
