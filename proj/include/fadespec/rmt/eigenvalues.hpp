#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "fadespec/error.hpp"
#include "fadespec/rmt/matrix_sampling.hpp"

namespace fadespec::rmt {

// Relative tolerances for the self-adjointness precondition and for
// recognizing a Kramers pair in a GSE spectrum.
inline constexpr double kSelfAdjointRelTol = 1e-10;
inline constexpr double kKramersRelTol = 1e-8;

namespace detail {

template <class Matrix>
void require_self_adjoint(const Matrix& h) {
    if (h.rows() != h.cols()) {
        throw std::domain_error("eigenvalues_hermitian: matrix must be square");
    }
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    const double asymmetry = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (asymmetry > kSelfAdjointRelTol * scale) {
        throw std::domain_error("eigenvalues_hermitian: matrix is not self-adjoint");
    }
}

template <class Matrix>
std::vector<double> solve_ascending(const Matrix& h) {
    require_self_adjoint(h);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw numeric_error("eigenvalues_hermitian: eigensolver did not converge");
    }
    const auto& values = solver.eigenvalues();
    return std::vector<double>(values.data(), values.data() + values.size());
}

}  // namespace detail

/// Full real spectrum of a self-adjoint matrix, ascending.
inline std::vector<double> eigenvalues_hermitian(const Eigen::MatrixXd& h) {
    return detail::solve_ascending(h);
}

inline std::vector<double> eigenvalues_hermitian(const Eigen::MatrixXcd& h) {
    return detail::solve_ascending(h);
}

// Ascending distinct levels of a sample: the raw spectrum for GOE/GUE, the
// Kramers-deduplicated spectrum (n values from n degenerate pairs) for GSE.
struct SpectralData {
    std::vector<double> eigenvalues;
};

inline SpectralData spectrum(const GaussianMatrixSample& sample) {
    std::vector<double> values = sample.is_real()
                                     ? eigenvalues_hermitian(sample.real_matrix())
                                     : eigenvalues_hermitian(sample.complex_matrix());
    if (sample.kind != dist::EnsembleKind::GSE) {
        return {std::move(values)};
    }
    std::vector<double> deduplicated;
    deduplicated.reserve(sample.n);
    for (int i = 0; i < sample.n; ++i) {
        const double lo = values[2 * i];
        const double hi = values[2 * i + 1];
        const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
        if (std::abs(hi - lo) > kKramersRelTol * scale) {
            throw numeric_error(
                "spectrum: GSE eigenvalues do not form degenerate Kramers pairs");
        }
        deduplicated.push_back(0.5 * (lo + hi));
    }
    return {std::move(deduplicated)};
}

}  // namespace fadespec::rmt
