#pragma once

// Dense mod-p kernels on row-major n x n matrices with entries in [0, p),
// p < 2^30. Each kernel has a serial reference and an OpenMP version that
// must agree bit for bit.

#include <cstdint>
#include <vector>

namespace qteich::kernels {

using Word = uint32_t;

/// C = A * B.
void matmul_serial(const Word* A, const Word* B, Word* C, int n, Word p);
void matmul_parallel(const Word* A, const Word* B, Word* C, int n, Word p);

/// In-place inverse by Gauss-Jordan elimination. Returns false if singular
/// (A is then left in an unspecified state).
bool inverse_serial(Word* A, int n, Word p);
bool inverse_parallel(Word* A, int n, Word p);

/// Matrices at least this large use the parallel kernels by default.
inline constexpr int kParallelThreshold = 96;

void matmul(const Word* A, const Word* B, Word* C, int n, Word p);
bool inverse(Word* A, int n, Word p);

}  // namespace qteich::kernels
