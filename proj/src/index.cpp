#include "slcs/index.hpp"
#include "slcs/text.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace slcs {

PermutationMatrix::PermutationMatrix(int rows, int cols)
    : row_to_col_(static_cast<std::size_t>(rows), ABSENT), col_to_row_(static_cast<std::size_t>(cols), ABSENT) {
    if (rows < 0 || cols < 0) throw Error("negative matrix size");
}

PermutationMatrix PermutationMatrix::from_rows(std::vector<int> row_to_col) {
    const int n = static_cast<int>(row_to_col.size());
    return from_rows(std::move(row_to_col), n);
}

PermutationMatrix PermutationMatrix::from_rows(std::vector<int> row_to_col, int cols) {
    PermutationMatrix p(static_cast<int>(row_to_col.size()), cols);
    for (int r = 0; r < p.n_rows(); ++r)
        if (row_to_col[r] != ABSENT) p.set(r, row_to_col[r]);
    return p;
}

PermutationMatrix PermutationMatrix::from_pairs(int n, const std::vector<std::pair<int, int>>& nz) {
    return from_pairs(n, n, nz);
}

PermutationMatrix PermutationMatrix::from_pairs(int rows, int cols, const std::vector<std::pair<int, int>>& nz) {
    PermutationMatrix p(rows, cols);
    for (auto [r, c] : nz) p.set(r, c);
    return p;
}

PermutationMatrix PermutationMatrix::identity(int n) {
    PermutationMatrix p(n);
    for (int i = 0; i < n; ++i) p.set(i, i);
    return p;
}

void PermutationMatrix::set(int r, int c) {
    if (r < 0 || r >= n_rows() || c < 0 || c >= n_cols()) throw Error("nonzero out of range");
    if (row_to_col_[r] != ABSENT || col_to_row_[c] != ABSENT) throw Error("duplicate nonzero in row or column");
    row_to_col_[r] = c;
    col_to_row_[c] = r;
}

void PermutationMatrix::clear_row(int r) {
    int c = row_to_col_[r];
    if (c == ABSENT) return;
    row_to_col_[r] = ABSENT;
    col_to_row_[c] = ABSENT;
}

int PermutationMatrix::nonzeros() const {
    return static_cast<int>(std::count_if(row_to_col_.begin(), row_to_col_.end(), [](int c) { return c != ABSENT; }));
}

bool PermutationMatrix::is_full() const { return square() && nonzeros() == n_rows(); }

std::vector<std::pair<int, int>> PermutationMatrix::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < n_rows(); ++r)
        if (row_to_col_[r] != ABSENT) out.emplace_back(r, row_to_col_[r]);
    return out;
}

Ext ext_add(Ext a, Ext b) {
    if (a >= POS_INF || b >= POS_INF) {
        if (a <= NEG_INF || b <= NEG_INF) throw Error("undefined sum of infinities");
        return POS_INF;
    }
    if (a <= NEG_INF || b <= NEG_INF) return NEG_INF;
    return a + b;
}

ExplicitMatrix::ExplicitMatrix(int rows, int cols, Ext fill, int row_lo, int col_lo)
    : rows_(rows), cols_(cols), row_lo_(row_lo), col_lo_(col_lo),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

int distribution_value(const PermutationMatrix& p, int i, int j) {
    if (i < 0 || i > p.n_rows() || j < 0 || j > p.n_cols()) throw Error("distribution index out of range");
    int count = 0;
    for (int r = i; r < p.n_rows(); ++r)
        if (p.col(r) != ABSENT && p.col(r) < j) ++count;
    return count;
}

ExplicitMatrix distribution_matrix(const PermutationMatrix& p) {
    const int R = p.n_rows(), C = p.n_cols();
    ExplicitMatrix a(R + 1, C + 1);
    for (int i = R - 1; i >= 0; --i) {
        for (int j = 0; j <= C; ++j) a.at(i, j) = a.at(i + 1, j);
        if (p.col(i) != ABSENT)
            for (int j = p.col(i) + 1; j <= C; ++j) ++a.at(i, j);
    }
    return a;
}

Ext density_value(const ExplicitMatrix& a, int r, int c) {
    if (r < 0 || c < 0 || r + 1 >= a.rows() || c + 1 >= a.cols()) throw Error("density index out of range");
    return a.at(r + 1, c) - a.at(r, c) - a.at(r + 1, c + 1) + a.at(r, c + 1);
}

ExplicitMatrix density_matrix(const ExplicitMatrix& a) {
    ExplicitMatrix d(std::max(a.rows() - 1, 0), std::max(a.cols() - 1, 0));
    for (int r = 0; r < d.rows(); ++r)
        for (int c = 0; c < d.cols(); ++c) d.at(r, c) = density_value(a, r, c);
    return d;
}

bool is_monge(const ExplicitMatrix& a) {
    for (int r = 0; r + 1 < a.rows(); ++r)
        for (int c = 0; c + 1 < a.cols(); ++c)
            if (density_value(a, r, c) < 0) return false;
    return true;
}

bool is_simple(const ExplicitMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return true;
    for (int r = 0; r < a.rows(); ++r)
        if (a.at(r, 0) != 0) return false;
    for (int c = 0; c < a.cols(); ++c)
        if (a.at(a.rows() - 1, c) != 0) return false;
    return true;
}

bool is_simple_unit_monge(const ExplicitMatrix& a) {
    if (a.rows() != a.cols() || !is_simple(a) || !is_monge(a)) return false;
    ExplicitMatrix d = density_matrix(a);
    for (int r = 0; r < d.rows(); ++r) {
        Ext s = 0;
        for (int c = 0; c < d.cols(); ++c) {
            if (d.at(r, c) != 0 && d.at(r, c) != 1) return false;
            s += d.at(r, c);
        }
        if (s != 1) return false;
    }
    for (int c = 0; c < d.cols(); ++c) {
        Ext s = 0;
        for (int r = 0; r < d.rows(); ++r) s += d.at(r, c);
        if (s != 1) return false;
    }
    return true;
}

ExplicitMatrix distribution_of(const ExplicitMatrix& d) {
    ExplicitMatrix a(d.rows() + 1, d.cols() + 1);
    for (int i = d.rows() - 1; i >= 0; --i)
        for (int j = 1; j <= d.cols(); ++j)
            a.at(i, j) = a.at(i + 1, j) + a.at(i, j - 1) - a.at(i + 1, j - 1) + d.at(i, j - 1);
    return a;
}

PermutationMatrix to_permutation(const ExplicitMatrix& d) {
    PermutationMatrix p(d.rows(), d.cols());
    for (int r = 0; r < d.rows(); ++r)
        for (int c = 0; c < d.cols(); ++c) {
            if (d.at(r, c) == 1) p.set(r, c);
            else if (d.at(r, c) != 0) throw Error("density is not a permutation matrix");
        }
    return p;
}

PermutationMatrix rotate(const PermutationMatrix& p) {
    const int n = p.size();
    if (!p.square()) throw Error("rotate needs a square matrix");
    PermutationMatrix q(n);
    for (auto [r, c] : p.pairs()) q.set(n - 1 - c, r);
    return q;
}

PermutationMatrix transpose(const PermutationMatrix& p) {
    PermutationMatrix q(p.n_cols(), p.n_rows());
    for (auto [r, c] : p.pairs()) q.set(c, r);
    return q;
}

PermutationMatrix rotate_half(const PermutationMatrix& p) {
    PermutationMatrix q(p.n_rows(), p.n_cols());
    for (auto [r, c] : p.pairs()) q.set(p.n_rows() - 1 - r, p.n_cols() - 1 - c);
    return q;
}

PermutationMatrix induced(const PermutationMatrix& p, Axis axis, const std::vector<int>& keep) {
    const int lim = axis == Axis::rows ? p.n_rows() : p.n_cols();
    for (std::size_t k = 0; k < keep.size(); ++k)
        if (keep[k] < 0 || keep[k] >= lim || (k && keep[k] <= keep[k - 1])) throw Error("induced: bad index subset");
    const int other = axis == Axis::rows ? p.n_cols() : p.n_rows();
    std::vector<char> used(static_cast<std::size_t>(other), 0);
    for (int k : keep) {
        int o = axis == Axis::rows ? p.col(k) : p.row(k);
        if (o != ABSENT) used[o] = 1;
    }
    std::vector<int> rank(static_cast<std::size_t>(other), ABSENT);
    int cnt = 0;
    for (int o = 0; o < other; ++o)
        if (used[o]) rank[o] = cnt++;
    const int kk = static_cast<int>(keep.size());
    PermutationMatrix q = axis == Axis::rows ? PermutationMatrix(kk, cnt) : PermutationMatrix(cnt, kk);
    for (int k = 0; k < kk; ++k) {
        int o = axis == Axis::rows ? p.col(keep[k]) : p.row(keep[k]);
        if (o == ABSENT) continue;
        if (axis == Axis::rows) q.set(k, rank[o]);
        else q.set(rank[o], k);
    }
    return q;
}

PermutationMatrix window(const PermutationMatrix& p, int r0, int r1, int c0, int c1) {
    if (r0 < 0 || r1 > p.n_rows() || r0 > r1 || c0 < 0 || c1 > p.n_cols() || c0 > c1) throw Error("window out of range");
    PermutationMatrix q(r1 - r0, c1 - c0);
    for (int r = r0; r < r1; ++r) {
        int c = p.col(r);
        if (c != ABSENT && c >= c0 && c < c1) q.set(r - r0, c - c0);
    }
    return q;
}

PermutationMatrix elementary(int n, int t) {
    if (t < 1 || t > n - 1) throw Error("elementary: t out of range");
    std::vector<int> rc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rc[i] = i;
    std::swap(rc[t - 1], rc[t]);
    return PermutationMatrix::from_rows(rc);
}

void write_tsv(std::ostream& os, const PermutationMatrix& p) {
    for (auto [r, c] : p.pairs()) os << r << '\t' << c << '\n';
}

PermutationMatrix read_tsv(std::istream& is, int n) {
    PermutationMatrix p(n);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int r, c;
        if (!(ls >> r >> c)) throw Error("malformed permutation line: " + line);
        p.set(r, c);
    }
    return p;
}

Text encode(std::string_view s, bool literal) {
    Text t;
    t.reserve(s.size());
    for (unsigned char ch : s) {
        if (!literal && ch == '?') t.push_back(WILDCARD);
        else if (!literal && ch == '$') t.push_back(DOLLAR);
        else t.push_back(static_cast<Symbol>(ch));
    }
    return t;
}

std::string decode(const Text& t) {
    std::string s;
    s.reserve(t.size());
    for (Symbol x : t) {
        if (x == WILDCARD) s.push_back('?');
        else if (x == DOLLAR) s.push_back('$');
        else if (x >= 0 && x < 256) s.push_back(static_cast<char>(x));
        else s.push_back('#');
    }
    return s;
}

}  // namespace slcs
