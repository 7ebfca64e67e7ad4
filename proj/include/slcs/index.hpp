#pragma once

// Index conventions: an odd half-integer index in <l:h> is stored as the
// integer (index - 1/2 - l) in [0, h-l). Integer indices are stored as is.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace slcs {

inline constexpr int ABSENT = -1;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class PermutationMatrix {
public:
    PermutationMatrix() = default;
    explicit PermutationMatrix(int n) : PermutationMatrix(n, n) {}
    PermutationMatrix(int rows, int cols);
    static PermutationMatrix from_rows(std::vector<int> row_to_col);
    static PermutationMatrix from_rows(std::vector<int> row_to_col, int cols);
    static PermutationMatrix from_pairs(int n, const std::vector<std::pair<int, int>>& nz);
    static PermutationMatrix from_pairs(int rows, int cols, const std::vector<std::pair<int, int>>& nz);
    static PermutationMatrix identity(int n);

    int size() const { return static_cast<int>(row_to_col_.size()); }
    int n_rows() const { return static_cast<int>(row_to_col_.size()); }
    int n_cols() const { return static_cast<int>(col_to_row_.size()); }
    bool square() const { return n_rows() == n_cols(); }
    int col(int r) const { return row_to_col_[r]; }
    int row(int c) const { return col_to_row_[c]; }
    const std::vector<int>& rows() const { return row_to_col_; }
    const std::vector<int>& cols() const { return col_to_row_; }

    void set(int r, int c);
    void clear_row(int r);
    int nonzeros() const;
    bool is_full() const;
    std::vector<std::pair<int, int>> pairs() const;

    bool operator==(const PermutationMatrix&) const = default;

private:
    std::vector<int> row_to_col_;
    std::vector<int> col_to_row_;
};

// Extended integers for dense oracles.
using Ext = std::int64_t;
inline constexpr Ext POS_INF = std::numeric_limits<Ext>::max() / 4;
inline constexpr Ext NEG_INF = -POS_INF;
Ext ext_add(Ext a, Ext b);

class ExplicitMatrix {
public:
    ExplicitMatrix() = default;
    ExplicitMatrix(int rows, int cols, Ext fill = 0, int row_lo = 0, int col_lo = 0);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int row_lo() const { return row_lo_; }
    int col_lo() const { return col_lo_; }
    Ext& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    Ext at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool operator==(const ExplicitMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0, row_lo_ = 0, col_lo_ = 0;
    std::vector<Ext> data_;
};

// Counts nonzeros with stored row >= i and stored column < j.
int distribution_value(const PermutationMatrix& p, int i, int j);
ExplicitMatrix distribution_matrix(const PermutationMatrix& p);

// Density at the cell between integer rows r, r+1 and columns c, c+1.
Ext density_value(const ExplicitMatrix& a, int r, int c);
ExplicitMatrix density_matrix(const ExplicitMatrix& a);
bool is_monge(const ExplicitMatrix& a);
bool is_simple(const ExplicitMatrix& a);
bool is_simple_unit_monge(const ExplicitMatrix& a);
// (A^density)^distribution, for any matrix whose leftmost column and bottom row are zero.
ExplicitMatrix distribution_of(const ExplicitMatrix& density);
PermutationMatrix to_permutation(const ExplicitMatrix& density);

PermutationMatrix rotate(const PermutationMatrix& p);
PermutationMatrix transpose(const PermutationMatrix& p);
PermutationMatrix rotate_half(const PermutationMatrix& p);

enum class Axis { rows, cols };
// Keeps the listed lines (sorted, distinct), then drops the zero lines of the other axis.
PermutationMatrix induced(const PermutationMatrix& p, Axis axis, const std::vector<int>& keep);
// Window [r0,r1) x [c0,c1) with no compaction.
PermutationMatrix window(const PermutationMatrix& p, int r0, int r1, int c0, int c1);

PermutationMatrix elementary(int n, int t);

void write_tsv(std::ostream& os, const PermutationMatrix& p);
PermutationMatrix read_tsv(std::istream& is, int n);

}  // namespace slcs
