#pragma once

// Square matrices over a field F that stay in monomial form (one nonzero per
// row, columns a permutation) as long as possible:
//   monomial: (M v)[r] = scale[r] * v[col[r]]
// Products and inverses of monomial matrices are O(n); sums with different
// column permutations and anything touching a dense operand go dense.

#include "qteich/fields.hpp"
#include "qteich/kernels.hpp"

#include <type_traits>
#include <vector>

namespace qteich {

template <class F>
class Matrix {
  public:
    using E = typename F::Elem;

    Matrix() = default;

    static Matrix monomial(std::vector<E> scale, std::vector<int> col) {
        Matrix m;
        m.n_ = static_cast<int>(scale.size());
        m.mono_ = true;
        m.scale_ = std::move(scale);
        m.col_ = std::move(col);
        return m;
    }

    static Matrix scalar(const F& f, int n, const E& s) {
        std::vector<int> col(n);
        for (int i = 0; i < n; ++i) col[i] = i;
        (void)f;
        return monomial(std::vector<E>(n, s), std::move(col));
    }

    static Matrix identity(const F& f, int n) { return scalar(f, n, f.one()); }

    static Matrix dense_zero(const F& f, int n) {
        Matrix m;
        m.n_ = n;
        m.mono_ = false;
        m.dense_.assign(static_cast<size_t>(n) * n, f.zero());
        return m;
    }

    int size() const { return n_; }
    bool is_monomial() const { return mono_; }
    const std::vector<E>& scale() const { return scale_; }
    const std::vector<int>& col() const { return col_; }
    const std::vector<E>& dense() const { return dense_; }
    std::vector<E>& dense() { return dense_; }

    E at(const F& f, int r, int c) const {
        if (mono_) return col_[r] == c ? scale_[r] : f.zero();
        return dense_[static_cast<size_t>(r) * n_ + c];
    }

    Matrix to_dense(const F& f) const {
        if (!mono_) return *this;
        Matrix d = dense_zero(f, n_);
        for (int r = 0; r < n_; ++r) d.dense_[static_cast<size_t>(r) * n_ + col_[r]] = scale_[r];
        return d;
    }

  private:
    int n_ = 0;
    bool mono_ = true;
    std::vector<E> scale_;
    std::vector<int> col_;
    std::vector<E> dense_;
};

namespace detail {

template <class F>
void dense_mul_generic(const F& f, const std::vector<typename F::Elem>& A, const std::vector<typename F::Elem>& B,
                       std::vector<typename F::Elem>& C, int n) {
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const auto& a = A[static_cast<size_t>(i) * n + k];
            if (f.is_zero(a)) continue;
            for (int j = 0; j < n; ++j) {
                auto& c = C[static_cast<size_t>(i) * n + j];
                c = f.add(c, f.mul(a, B[static_cast<size_t>(k) * n + j]));
            }
        }
}

template <class F>
bool dense_inverse_generic(const F& f, std::vector<typename F::Elem>& A, int n) {
    using E = typename F::Elem;
    std::vector<E> inv(static_cast<size_t>(n) * n, f.zero());
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(i) * n + i] = f.one();
    auto at = [n](std::vector<E>& m, int r, int c) -> E& { return m[static_cast<size_t>(r) * n + c]; };
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!f.is_zero(at(A, r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        if (piv != col)
            for (int c = 0; c < n; ++c) {
                std::swap(at(A, piv, c), at(A, col, c));
                std::swap(at(inv, piv, c), at(inv, col, c));
            }
        E s = f.inv(at(A, col, col));
        for (int c = 0; c < n; ++c) {
            at(A, col, c) = f.mul(at(A, col, c), s);
            at(inv, col, c) = f.mul(at(inv, col, c), s);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || f.is_zero(at(A, r, col))) continue;
            E factor = at(A, r, col);
            for (int c = 0; c < n; ++c) {
                at(A, r, c) = f.sub(at(A, r, c), f.mul(factor, at(A, col, c)));
                at(inv, r, c) = f.sub(at(inv, r, c), f.mul(factor, at(inv, col, c)));
            }
        }
    }
    A = std::move(inv);
    return true;
}

}  // namespace detail

template <class F>
Matrix<F> multiply(const F& f, const Matrix<F>& A, const Matrix<F>& B) {
    using E = typename F::Elem;
    const int n = A.size();
    if (A.is_monomial() && B.is_monomial()) {
        std::vector<E> s(n);
        std::vector<int> c(n);
        for (int r = 0; r < n; ++r) {
            int k = A.col()[r];
            s[r] = f.mul(A.scale()[r], B.scale()[k]);
            c[r] = B.col()[k];
        }
        return Matrix<F>::monomial(std::move(s), std::move(c));
    }
    Matrix<F> out = Matrix<F>::dense_zero(f, n);
    auto& C = out.dense();
    if (A.is_monomial()) {
        const auto& Bd = B.dense();
        for (int r = 0; r < n; ++r) {
            const E& s = A.scale()[r];
            const size_t src = static_cast<size_t>(A.col()[r]) * n;
            for (int c = 0; c < n; ++c) C[static_cast<size_t>(r) * n + c] = f.mul(s, Bd[src + c]);
        }
        return out;
    }
    if (B.is_monomial()) {
        const auto& Ad = A.dense();
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k)
                C[static_cast<size_t>(r) * n + B.col()[k]] = f.mul(Ad[static_cast<size_t>(r) * n + k], B.scale()[k]);
        return out;
    }
    if constexpr (std::is_same_v<F, PrimeField>) {
        kernels::matmul(A.dense().data(), B.dense().data(), C.data(), n, f.modulus());
    } else {
        detail::dense_mul_generic(f, A.dense(), B.dense(), C, n);
    }
    return out;
}

template <class F>
Matrix<F> add(const F& f, const Matrix<F>& A, const Matrix<F>& B) {
    using E = typename F::Elem;
    const int n = A.size();
    if (A.is_monomial() && B.is_monomial() && A.col() == B.col()) {
        std::vector<E> s(n);
        for (int r = 0; r < n; ++r) s[r] = f.add(A.scale()[r], B.scale()[r]);
        return Matrix<F>::monomial(std::move(s), A.col());
    }
    Matrix<F> out = A.to_dense(f);
    auto& C = out.dense();
    if (B.is_monomial()) {
        for (int r = 0; r < n; ++r) {
            auto& c = C[static_cast<size_t>(r) * n + B.col()[r]];
            c = f.add(c, B.scale()[r]);
        }
    } else {
        const auto& Bd = B.dense();
        for (size_t i = 0; i < C.size(); ++i) C[i] = f.add(C[i], Bd[i]);
    }
    return out;
}

template <class F>
Matrix<F> scale(const F& f, const typename F::Elem& s, const Matrix<F>& A) {
    return multiply(f, Matrix<F>::scalar(f, A.size(), s), A);
}

/// Throws SingularMatrix when A is not invertible.
template <class F>
Matrix<F> inverse(const F& f, const Matrix<F>& A) {
    using E = typename F::Elem;
    const int n = A.size();
    if (A.is_monomial()) {
        std::vector<E> s(n);
        std::vector<int> c(n);
        for (int r = 0; r < n; ++r) {
            if (f.is_zero(A.scale()[r])) throw SingularMatrix("monomial matrix has a zero entry");
            int k = A.col()[r];
            s[k] = f.inv(A.scale()[r]);
            c[k] = r;
        }
        return Matrix<F>::monomial(std::move(s), std::move(c));
    }
    Matrix<F> out = A;
    bool ok;
    if constexpr (std::is_same_v<F, PrimeField>) {
        ok = kernels::inverse(out.dense().data(), n, f.modulus());
    } else {
        ok = detail::dense_inverse_generic(f, out.dense(), n);
    }
    if (!ok) throw SingularMatrix("dense matrix is singular");
    return out;
}

template <class F>
bool equal(const F& f, const Matrix<F>& A, const Matrix<F>& B) {
    if (A.size() != B.size()) return false;
    if (A.is_monomial() && B.is_monomial()) {
        for (int r = 0; r < A.size(); ++r) {
            bool za = f.is_zero(A.scale()[r]), zb = f.is_zero(B.scale()[r]);
            if (za && zb) continue;
            if (za != zb || A.col()[r] != B.col()[r] || !f.eq(A.scale()[r], B.scale()[r])) return false;
        }
        return true;
    }
    auto Ad = A.to_dense(f), Bd = B.to_dense(f);
    for (size_t i = 0; i < Ad.dense().size(); ++i)
        if (!f.eq(Ad.dense()[i], Bd.dense()[i])) return false;
    return true;
}

}  // namespace qteich
