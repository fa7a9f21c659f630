#pragma once

// Order-by-order construction of the periodic Neumann coefficients c_{N,n}
// and the auxiliary rational functions d_{N,n}(k) from Dirichlet data a_{N,n}.

#include <map>
#include <span>
#include <string>

#include "nlsdtn/fourier_core.hpp"
#include "nlsdtn/rational_k.hpp"

namespace nlsdtn {

struct ProblemSpec {
    double omega = 1.0;
    int lambda = 1;
    int order_max = 1;
    GradedCoefficients dirichlet;

    /// Throws DomainError on omega <= 0, lambda not in {+1,-1}, order_max < 1,
    /// or any nonzero a_{N,0} (mean-zero violation).
    void validate() const;
};

struct HierarchyOptions {
    RationalOptions rational{};
    /// A c_{M,0} or F_{M,0} whose magnitude exceeds this fraction of the row
    /// scale is reported as a mean-zero violation.
    double mean_zero_tol = 1e-12;
};

using RationalTable = GradedSeries<RationalK>;

struct HierarchySolution {
    ProblemSpec spec;
    GradedCoefficients neumann;  // c_{N,n}
    RationalTable d_table;       // d_{N,n}(k)
    int completed_order = 0;
};

/// Raised when an order/harmonic step cannot be completed. Carries (M, n).
class HierarchyError : public NumericalError {
public:
    HierarchyError(int order, int harmonic, const std::string& what)
        : NumericalError(what), order_(order), harmonic_(harmonic) {}
    int order() const noexcept { return order_; }
    int harmonic() const noexcept { return harmonic_; }

private:
    int order_;
    int harmonic_;
};

/// Root of 4k^2 + n omega = 0 on the boundary of the first quadrant.
cplx k1(int n, double omega);

struct OrderRow {
    std::map<int, cplx> c;
    std::map<int, RationalK> d;
};

OrderRow first_order(const ProblemSpec& spec, const HierarchyOptions& opt = {});

/// F_{M,n}(k) for every harmonic reachable at order M from rows < M.
std::map<int, RationalK> assemble_F_row(int order, const HierarchySolution& state);

/// F_{M,n}(k) for a single harmonic (zero if unreachable).
RationalK assemble_F(int order, int harmonic, const HierarchySolution& state);

/// Computes row `order` from the completed rows below it.
HierarchySolution step_order(int order, HierarchySolution state, const HierarchyOptions& opt = {});

HierarchySolution solve(const ProblemSpec& spec, const HierarchyOptions& opt = {});

/// Maximum modulus over the harmonics of row `order` and the given k samples
/// of the order-`order` coefficient of the algebraic system satisfied by
/// (a, c, d). Vanishes identically for an exact solution.
double riccati_residual(const HierarchySolution& solution, std::span<const cplx> k_samples,
                        int order);

/// Maximum of riccati_residual over orders 1..completed_order.
double riccati_residual_all(const HierarchySolution& solution, std::span<const cplx> k_samples);

}  // namespace nlsdtn
