#include "qteich/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace qteich {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_int(const IntMatrix& m) {
    QMatrix out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out(r, c) = Rational(m(r, c));
    return out;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
    QMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a == 0) continue;
            for (int c = 0; c < o.cols_; ++c)
                if (o(k, c) != 0) out(r, c) += a * o(k, c);
        }
    return out;
}

QMatrix QMatrix::operator-() const {
    QMatrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
}

RationalVec QMatrix::apply(const RationalVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("QMatrix: vector length mismatch");
    RationalVec out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool QMatrix::operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<int> QMatrix::rref_in_place() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int piv = -1;
        for (int r = row; r < rows_; ++r)
            if ((*this)(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < cols_; ++c) std::swap((*this)(piv, c), (*this)(row, c));
        Rational inv = 1 / (*this)(row, col);
        for (int c = col; c < cols_; ++c) (*this)(row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || (*this)(r, col) == 0) continue;
            Rational f = (*this)(r, col);
            for (int c = col; c < cols_; ++c) (*this)(r, c) -= f * (*this)(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int QMatrix::rank() const {
    QMatrix tmp = *this;
    return static_cast<int>(tmp.rref_in_place().size());
}

QMatrix QMatrix::kernel() const {
    QMatrix red = *this;
    auto pivots = red.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    QMatrix basis(cols_, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int f = free_cols[k];
        basis(f, static_cast<int>(k)) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], static_cast<int>(k)) = -red(static_cast<int>(r), f);
    }
    return basis;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << '[';
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
        os << "]\n";
    }
    return os.str();
}

QMatrix hcat(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
    QMatrix out(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (int c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

}  // namespace qteich
