#pragma once

// Dense matrices over Q for the log-linear (additive) picture.

#include "qteich/rational.hpp"
#include "qteich/triangulation.hpp"

#include <string>
#include <vector>

namespace qteich {

class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static QMatrix identity(int n);
    static QMatrix from_int(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator-() const;
    RationalVec apply(const RationalVec& v) const;
    bool is_zero() const;
    bool operator==(const QMatrix& o) const;

    /// Reduced row echelon form; returns the pivot columns.
    std::vector<int> rref_in_place();

    int rank() const;
    /// Columns form a basis of the right kernel.
    QMatrix kernel() const;

    std::string to_string() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Horizontal concatenation.
QMatrix hcat(const QMatrix& a, const QMatrix& b);

}  // namespace qteich
