#pragma once

#include <complex>
#include <stdexcept>
#include <variant>

#include <Eigen/Dense>

#include "fadespec/dist/wigner.hpp"
#include "fadespec/numerics/random.hpp"

namespace fadespec::rmt {

// A draw from one of the three Gaussian ensembles. `n` counts distinct
// levels; the stored GSE matrix is the 2n x 2n complex Hermitian embedding
// of the n x n quaternion self-dual form, so its spectrum is doubly
// degenerate (Kramers pairs).
struct GaussianMatrixSample {
    dist::EnsembleKind kind;
    int n;
    std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> entries;

    bool is_real() const { return std::holds_alternative<Eigen::MatrixXd>(entries); }
    const Eigen::MatrixXd& real_matrix() const { return std::get<Eigen::MatrixXd>(entries); }
    const Eigen::MatrixXcd& complex_matrix() const {
        return std::get<Eigen::MatrixXcd>(entries);
    }
};

namespace detail {

inline Eigen::MatrixXd gaussian_real_matrix(numerics::RandomStream& stream, int n) {
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a(i, j) = numerics::standard_normal(stream);
        }
    }
    return a;
}

inline Eigen::MatrixXcd gaussian_complex_matrix(numerics::RandomStream& stream, int n) {
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double re = numerics::standard_normal(stream);
            const double im = numerics::standard_normal(stream);
            a(i, j) = std::complex<double>(re, im);
        }
    }
    return a;
}

}  // namespace detail

/// Draw one ensemble member. GOE: H = (A + A^T)/2 with real N(0,1) entries.
/// GUE: H = (A + A^+)/2 with complex N(0,1) + i N(0,1) entries. GSE: blocks
/// A = (C + C^+)/2, B = (D - D^T)/2 assembled as [[A, B], [-conj(B), conj(A)]].
/// The symmetry of the result is exact by construction, not up to rounding.
inline GaussianMatrixSample sample_matrix(numerics::RandomStream& stream,
                                          dist::EnsembleKind kind, int n) {
    if (n < 2) {
        throw std::domain_error("sample_matrix: matrix dimension must be >= 2");
    }
    switch (kind) {
        case dist::EnsembleKind::GOE: {
            const Eigen::MatrixXd a = detail::gaussian_real_matrix(stream, n);
            Eigen::MatrixXd h(n, n);
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                    const double value = 0.5 * (a(i, j) + a(j, i));
                    h(i, j) = value;
                    h(j, i) = value;
                }
            }
            return {kind, n, std::move(h)};
        }
        case dist::EnsembleKind::GUE: {
            const Eigen::MatrixXcd a = detail::gaussian_complex_matrix(stream, n);
            Eigen::MatrixXcd h(n, n);
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                    const std::complex<double> value = 0.5 * (a(i, j) + std::conj(a(j, i)));
                    h(i, j) = value;
                    h(j, i) = std::conj(value);
                }
            }
            return {kind, n, std::move(h)};
        }
        case dist::EnsembleKind::GSE: {
            const Eigen::MatrixXcd c = detail::gaussian_complex_matrix(stream, n);
            const Eigen::MatrixXcd d = detail::gaussian_complex_matrix(stream, n);
            Eigen::MatrixXcd upper_left(n, n);   // Hermitian block A
            Eigen::MatrixXcd upper_right(n, n);  // antisymmetric block B
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                    const std::complex<double> a_ij = 0.5 * (c(i, j) + std::conj(c(j, i)));
                    upper_left(i, j) = a_ij;
                    upper_left(j, i) = std::conj(a_ij);
                    const std::complex<double> b_ij = 0.5 * (d(i, j) - d(j, i));
                    upper_right(i, j) = b_ij;
                    upper_right(j, i) = -b_ij;
                }
            }
            Eigen::MatrixXcd h(2 * n, 2 * n);
            h.topLeftCorner(n, n) = upper_left;
            h.topRightCorner(n, n) = upper_right;
            h.bottomLeftCorner(n, n) = -upper_right.conjugate();
            h.bottomRightCorner(n, n) = upper_left.conjugate();
            return {kind, n, std::move(h)};
        }
    }
    throw std::domain_error("sample_matrix: invalid EnsembleKind");
}

}  // namespace fadespec::rmt
