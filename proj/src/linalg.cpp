#include <symtens/linalg.hpp>

#include <algorithm>

namespace symtens {

void Mat::append_rows(const Mat& other) {
    if (rows_ == 0 && cols_ == 0) {
        *this = other;
        return;
    }
    if (other.cols_ != cols_) throw internal_error("Mat::append_rows: column mismatch");
    v_.insert(v_.end(), other.v_.begin(), other.v_.end());
    rows_ += other.rows_;
}

namespace {

bool all_rational(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_rational()) return false;
    return true;
}

// Bareiss fraction-free elimination on an integer copy (rows scaled by their
// denominator lcm, which preserves rank).
int rank_bareiss(const Mat& m) {
    const int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
    for (int i = 0; i < nr; ++i) {
        Integer l = 1;
        for (int j = 0; j < nc; ++j) lcm(l, l, m(i, j).rational().get_den());
        for (int j = 0; j < nc; ++j) {
            const Rational& q = m(i, j).rational();
            a[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (sgn(a[i][c]) != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = c + 1; j < nc; ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

int rank_field(Mat m) {
    const int nr = m.rows(), nc = m.cols();
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (!m(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < nc; ++j) std::swap(m(piv, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (int i = r + 1; i < nr; ++i) {
            if (m(i, c).is_zero()) continue;
            Scalar f = m(i, c) * inv;
            for (int j = c; j < nc; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace

int rank(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (all_rational(m)) return rank_bareiss(m);
    return rank_field(m);
}

std::vector<Scalar> solve(const Mat& a, const std::vector<Scalar>& b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw internal_error("solve: shape mismatch");
    Mat m(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = b[i];
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) throw internal_error("solve: singular system");
        if (piv != c)
            for (int j = c; j <= n; ++j) std::swap(m(piv, j), m(c, j));
        Scalar inv = m(c, c).inverse();
        for (int j = c; j <= n; ++j) m(c, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (int j = c; j <= n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    std::vector<Scalar> x(n);
    for (int i = 0; i < n; ++i) x[i] = m(i, n);
    return x;
}

std::vector<std::vector<Scalar>> kernel(const Mat& a) {
    const int nr = a.rows(), nc = a.cols();
    Mat m = a;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (!m(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < nc; ++j) std::swap(m(piv, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (int j = c; j < nc; ++j) m(r, j) *= inv;
        for (int i = 0; i < nr; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (int j = c; j < nc; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<Scalar>> basis;
    std::vector<bool> is_pivot(nc, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(nc, Scalar(0));
        v[c] = Scalar(1);
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -m(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool same_row_span(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) return false;
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    Mat joint = a;
    joint.append_rows(b);
    return rank(joint) == ra;
}

}  // namespace symtens
