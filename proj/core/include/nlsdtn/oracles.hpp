#pragma once

// Independent reference values: closed-form Neumann branches, soliton
// fields, the published two-exponential coefficient table and the Floquet
// monodromy of the background t-part.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nlsdtn/fourier_core.hpp"

namespace nlsdtn {

// ------------------------------------------------------------------ solitons

struct StationarySolitonSpec {
    double omega = 1.0;
    double gamma = 0.0;
    void validate() const;
};

/// sqrt(omega) e^{i omega t} / cosh(x sqrt(omega) - gamma)
cplx one_soliton_field(const StationarySolitonSpec& spec, double x, double t);

struct SolitonSpec {
    std::vector<cplx> eigenvalues;  // Im > 0, pairwise distinct
    std::vector<cplx> norming;      // nonzero
    void validate() const;
};

/// det R / det M for the focusing N-soliton family.
cplx n_soliton_field(const SolitonSpec& spec, double x, double t);

/// u_x(x, t) by the five-point central difference with step h.
cplx n_soliton_derivative(const SolitonSpec& spec, double x, double t, double h = 1e-3);

/// The two-soliton family with eigenvalues {i, 2i} and norming constants -i*eps.
SolitonSpec two_soliton_spec(double epsilon);

struct SolitonExpansion {
    GradedCoefficients dirichlet;  // a_{N,n}, N in {1, 3}
    GradedCoefficients neumann;    // c_{N,n}, N in {1, 3}
    double condition_number = 0.0;
    double max_fit_residual = 0.0;  // relative to the dominant sampled harmonic
};

struct ExpansionOptions {
    int samples_per_period = 64;
    int harmonic_min = -8;
    int harmonic_max = 12;
    std::vector<int> fitted_powers{1, 3, 5, 7};
    int max_reported_order = 3;
    /// Entries below this fraction of the largest fitted entry are dropped.
    double drop_fraction = 1e-7;
    double max_residual = 1e-8;
    double fd_step = 1e-3;
};

/// Samples u(0,t), u_x(0,t) of the {i, 2i} two-soliton over one period for
/// each epsilon, extracts harmonics by DFT and fits odd powers of epsilon.
SolitonExpansion two_soliton_expansion(std::span<const double> epsilons,
                                       const ExpansionOptions& opt = {});

// ------------------------------------------------------- closed-form branches

enum class Branch { FocusingA, FocusingB, PerturbativeSum };

/// c for the exact pairs (alpha e^{i w t}, c e^{i w t}):
///   FocusingA:        sign * alpha sqrt(omega - alpha^2), omega >= alpha^2
///   FocusingB:        i alpha sqrt(|omega| + 2 alpha^2),  omega <= -6 alpha^2
///   PerturbativeSum:  -alpha sqrt(omega + lambda alpha^2)
cplx closed_form_branch(double alpha, double omega, Branch branch, int lambda = 1, int sign = -1);

// ----------------------------------------------------- published c table

/// Closed-form c_{N,n}, N <= 7, for the Dirichlet datum eps (alpha e^{iwt} + beta e^{-iwt}).
GradedCoefficients paper_c_table(cplx alpha, cplx beta, double omega, int lambda);

// ------------------------------------------------------------------ Floquet

struct FloquetOptions {
    double abs_tol = 1e-13;
    double rel_tol = 1e-13;
    std::size_t max_steps = 2'000'000;
};

struct FloquetResult {
    Eigen::Matrix2cd monodromy;  // Z(k) = psi(tau, k)
    cplx discriminant;           // G(k) = (tr Z)^2 - 4
    std::size_t steps = 0;
};

/// Integrates psi_t + 2ik^2 sigma_3 psi = V^b psi over one period tau = 2 pi / omega
/// from psi(0) = I, with g0^b, g1^b the partial sums of the graded series at epsilon.
FloquetResult floquet_monodromy(const GradedCoefficients& g0b, const GradedCoefficients& g1b,
                                double epsilon, double omega, int lambda, cplx k,
                                const FloquetOptions& opt = {});

}  // namespace nlsdtn
