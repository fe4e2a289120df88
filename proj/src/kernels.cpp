#include "qteich/kernels.hpp"

#include <algorithm>
#include <cstring>

namespace qteich::kernels {

namespace {

Word pow_mod(Word a, uint64_t e, Word p) {
    uint64_t r = 1, b = a;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<Word>(r);
}

// Shoup multiplication by a fixed factor f.
struct FixedMul {
    Word f;
    uint64_t f_shoup;
    Word p;
    FixedMul(Word f_, Word p_) : f(f_), f_shoup((static_cast<uint64_t>(f_) << 32) / p_), p(p_) {}
    Word operator()(Word b) const {
        uint64_t q = (f_shoup * b) >> 32;
        uint64_t r = static_cast<uint64_t>(f) * b - q * p;
        return static_cast<Word>(r >= p ? r - p : r);
    }
};

void matmul_row(const Word* A, const Word* B, Word* C, int n, Word p, int i, uint64_t* acc) {
    std::fill(acc, acc + n, 0);
    int pending = 0;
    const Word* a = A + static_cast<size_t>(i) * n;
    for (int k = 0; k < n; ++k) {
        const uint64_t aik = a[k];
        if (aik == 0) continue;
        const Word* b = B + static_cast<size_t>(k) * n;
        for (int j = 0; j < n; ++j) acc[j] += aik * b[j];
        if (++pending == 16) {
            for (int j = 0; j < n; ++j) acc[j] %= p;
            pending = 0;
        }
    }
    Word* c = C + static_cast<size_t>(i) * n;
    for (int j = 0; j < n; ++j) c[j] = static_cast<Word>(acc[j] % p);
}

void eliminate_row(Word* row, const Word* pivot_row, int from, int to, Word factor, Word p) {
    FixedMul mul(factor, p);
    for (int c = from; c < to; ++c) {
        Word x = row[c], y = mul(pivot_row[c]);
        row[c] = x >= y ? x - y : x + p - y;
    }
}

template <bool Parallel>
bool gauss_jordan(Word* A, int n, Word p) {
    const int w = 2 * n;
    std::vector<Word> aug(static_cast<size_t>(n) * w, 0);
    for (int r = 0; r < n; ++r) {
        std::memcpy(&aug[static_cast<size_t>(r) * w], A + static_cast<size_t>(r) * n, sizeof(Word) * n);
        aug[static_cast<size_t>(r) * w + n + r] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (aug[static_cast<size_t>(r) * w + col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        Word* prow = &aug[static_cast<size_t>(col) * w];
        if (piv != col) std::swap_ranges(prow, prow + w, &aug[static_cast<size_t>(piv) * w]);
        FixedMul scale(pow_mod(prow[col], p - 2, p), p);
        for (int c = col; c < w; ++c) prow[c] = scale(prow[c]);

        if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
            for (int r = 0; r < n; ++r) {
                Word* row = &aug[static_cast<size_t>(r) * w];
                if (r != col && row[col] != 0) eliminate_row(row, prow, col, w, row[col], p);
            }
        } else {
            for (int r = 0; r < n; ++r) {
                Word* row = &aug[static_cast<size_t>(r) * w];
                if (r != col && row[col] != 0) eliminate_row(row, prow, col, w, row[col], p);
            }
        }
    }
    for (int r = 0; r < n; ++r)
        std::memcpy(A + static_cast<size_t>(r) * n, &aug[static_cast<size_t>(r) * w + n], sizeof(Word) * n);
    return true;
}

}  // namespace

void matmul_serial(const Word* A, const Word* B, Word* C, int n, Word p) {
    std::vector<uint64_t> acc(n);
    for (int i = 0; i < n; ++i) matmul_row(A, B, C, n, p, i, acc.data());
}

void matmul_parallel(const Word* A, const Word* B, Word* C, int n, Word p) {
#pragma omp parallel
    {
        std::vector<uint64_t> acc(n);
#pragma omp for schedule(static)
        for (int i = 0; i < n; ++i) matmul_row(A, B, C, n, p, i, acc.data());
    }
}

bool inverse_serial(Word* A, int n, Word p) { return gauss_jordan<false>(A, n, p); }

bool inverse_parallel(Word* A, int n, Word p) { return gauss_jordan<true>(A, n, p); }

void matmul(const Word* A, const Word* B, Word* C, int n, Word p) {
    if (n >= kParallelThreshold)
        matmul_parallel(A, B, C, n, p);
    else
        matmul_serial(A, B, C, n, p);
}

bool inverse(Word* A, int n, Word p) {
    return n >= kParallelThreshold ? inverse_parallel(A, n, p) : inverse_serial(A, n, p);
}

}  // namespace qteich::kernels
