#pragma once

// Small numeric core shared by every module: complex alias, dB helpers,
// parallel combination, and dense LU solvers sized for the conversion-matrix
// and nodal systems this library produces (a few hundred unknowns at most).

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfr {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double inf = std::numeric_limits<double>::infinity();

// 4-phase N-path scaling factor relating the baseband feedback impedance to
// the RF-side impedance.
inline constexpr double gamma_4phase = 2.0 / (std::numbers::pi * std::numbers::pi);

inline double db20(double x) { return 20.0 * std::log10(x); }
inline double db20(const cplx& x) { return 20.0 * std::log10(std::abs(x)); }
inline double db10(double x) { return 10.0 * std::log10(x); }
inline double from_db10(double db) { return std::pow(10.0, db / 10.0); }
inline double from_db20(double db) { return std::pow(10.0, db / 20.0); }

inline double ghz(double f_hz) { return f_hz * 1e-9; }
inline double hz_from_ghz(double f_ghz) { return f_ghz * 1e9; }

// Parallel combination; infinite branches drop out.
inline double parallel(double a, double b) {
    if (std::isinf(a)) return b;
    if (std::isinf(b)) return a;
    return a * b / (a + b);
}

inline cplx parallel(const cplx& a, const cplx& b) {
    if (std::isinf(a.real()) || std::isinf(a.imag())) return b;
    if (std::isinf(b.real()) || std::isinf(b.imag())) return a;
    return a * b / (a + b);
}

inline bool approx_rel(double a, double b, double rel) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rel * std::max(scale, 1e-300);
}

// Dense column-major-free matrix with row-major storage; only what the nodal
// solvers need.
template <typename T>
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    void set_zero() { std::fill(data_.begin(), data_.end(), T{}); }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// In-place partial-pivot LU solve of A x = b. A is overwritten. Throws on a
// numerically singular pivot.
template <typename T>
std::vector<T> lu_solve(DenseMatrix<T> a, std::vector<T> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw std::invalid_argument("lu_solve: dimension mismatch");

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double m = std::abs(a(r, k));
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (best < 1e-300)
            throw std::runtime_error("lu_solve: singular matrix at pivot " +
                                     std::to_string(k));
        if (piv != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(piv, c));
            std::swap(b[k], b[piv]);
        }
        const T d = a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const T f = a(r, k) / d;
            if (f == T{}) continue;
            a(r, k) = f;
            for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
            b[r] -= f * b[k];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        T s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * b[c];
        b[i] = s / a(i, i);
    }
    return b;
}

}  // namespace mfr
