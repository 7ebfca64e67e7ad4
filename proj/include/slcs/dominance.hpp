#pragma once

#include "slcs/index.hpp"

#include <vector>

namespace slcs {

// Range tree over rows; every node keeps the sorted columns of its nonzeros.
class DominanceCounter {
public:
    DominanceCounter() = default;
    explicit DominanceCounter(const PermutationMatrix& p);

    int n_rows() const { return rows_; }
    int n_cols() const { return cols_; }
    int query(int i, int j) const;

private:
    int rows_ = 0, cols_ = 0, leaves_ = 1;
    std::vector<std::vector<int>> tree_;
};

enum class Step { row_next, row_prev, col_next, col_prev };

// P^Sigma at the cell adjacent to (i,j), given its value at (i,j).
int step(const PermutationMatrix& p, int i, int j, int known, Step dir);

enum class Line { row, column, diagonal };

// Values along a line, starting at (i0,j0) and advancing `count` times.
// Row: (i0, j0+k); column: (i0+k, j0); diagonal: (i0+k, j0+k).
std::vector<int> batch(const PermutationMatrix& p, const DominanceCounter& c, Line line, int i0, int j0, int count);

// Walks to any target cell from its last position using unit steps.
class StepCursor {
public:
    StepCursor(const PermutationMatrix& p, int i, int j, int value) : p_(&p), i_(i), j_(j), v_(value) {}
    explicit StepCursor(const PermutationMatrix& p);
    int at(int i, int j);
    int i() const { return i_; }
    int j() const { return j_; }

private:
    const PermutationMatrix* p_;
    int i_, j_, v_;
};

}  // namespace slcs
