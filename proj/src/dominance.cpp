#include "slcs/dominance.hpp"

#include <algorithm>

namespace slcs {

DominanceCounter::DominanceCounter(const PermutationMatrix& p) : rows_(p.n_rows()), cols_(p.n_cols()) {
    while (leaves_ < rows_) leaves_ *= 2;
    tree_.assign(static_cast<std::size_t>(2 * leaves_), {});
    for (int r = 0; r < rows_; ++r)
        if (p.col(r) != ABSENT) tree_[leaves_ + r].push_back(p.col(r));
    for (int v = leaves_ - 1; v >= 1; --v) {
        auto& a = tree_[2 * v];
        auto& b = tree_[2 * v + 1];
        tree_[v].resize(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), tree_[v].begin());
    }
}

int DominanceCounter::query(int i, int j) const {
    if (i < 0 || i > rows_ || j < 0 || j > cols_) throw Error("query index out of range");
    int count = 0;
    auto take = [&](int v) {
        const auto& s = tree_[v];
        count += static_cast<int>(std::lower_bound(s.begin(), s.end(), j) - s.begin());
    };
    // rows [i, leaves_)
    int lo = i + leaves_, hi = 2 * leaves_;
    while (lo < hi) {
        if (lo & 1) take(lo++);
        if (hi & 1) take(--hi);
        lo >>= 1;
        hi >>= 1;
    }
    return count;
}

int step(const PermutationMatrix& p, int i, int j, int v, Step dir) {
    switch (dir) {
    case Step::row_next: {
        if (i >= p.n_rows()) throw Error("step outside matrix");
        int c = p.col(i);
        return v - (c != ABSENT && c < j ? 1 : 0);
    }
    case Step::row_prev: {
        if (i <= 0) throw Error("step outside matrix");
        int c = p.col(i - 1);
        return v + (c != ABSENT && c < j ? 1 : 0);
    }
    case Step::col_next: {
        if (j >= p.n_cols()) throw Error("step outside matrix");
        int r = p.row(j);
        return v + (r != ABSENT && r >= i ? 1 : 0);
    }
    case Step::col_prev: {
        if (j <= 0) throw Error("step outside matrix");
        int r = p.row(j - 1);
        return v - (r != ABSENT && r >= i ? 1 : 0);
    }
    }
    return v;
}

std::vector<int> batch(const PermutationMatrix& p, const DominanceCounter& c, Line line, int i0, int j0, int count) {
    const int di = line == Line::row ? 0 : 1;
    const int dj = line == Line::column ? 0 : 1;
    if (count < 0 || i0 < 0 || j0 < 0 || i0 + di * count > p.n_rows() || j0 + dj * count > p.n_cols())
        throw Error("batch span out of range");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    int i = i0, j = j0, v = c.query(i0, j0);
    out.push_back(v);
    for (int k = 0; k < count; ++k) {
        if (di) v = step(p, i++, j, v, Step::row_next);
        if (dj) v = step(p, i, j++, v, Step::col_next);
        out.push_back(v);
    }
    return out;
}

StepCursor::StepCursor(const PermutationMatrix& p) : p_(&p), i_(p.n_rows()), j_(0), v_(0) {}

int StepCursor::at(int i, int j) {
    while (i_ < i) v_ = step(*p_, i_++, j_, v_, Step::row_next);
    while (i_ > i) v_ = step(*p_, i_--, j_, v_, Step::row_prev);
    while (j_ < j) v_ = step(*p_, i_, j_++, v_, Step::col_next);
    while (j_ > j) v_ = step(*p_, i_, j_--, v_, Step::col_prev);
    return v_;
}

}  // namespace slcs
