#pragma once

// Rational functions of the spectral parameter k with complex coefficients.
//
// Denominators are kept as a product of monic factors with multiplicities.
// Sums are assembled over the least common multiple of the two factor lists,
// matched structurally; no numerical GCD is ever attempted, so shared factors
// between numerator and denominator survive until deflate() removes them.

#include <complex>
#include <string>
#include <vector>

#include "nlsdtn/error.hpp"

namespace nlsdtn {

using cplx = std::complex<double>;

/// Raised when an operation would push a numerator or denominator past the
/// configured degree cap.
class DegreeCapError : public NumericalError {
public:
    explicit DegreeCapError(const std::string& what) : NumericalError(what) {}
};

/// Raised by evaluate() when the denominator vanishes at the requested point,
/// and by deflate() when the singularity is not removable.
class SingularityError : public NumericalError {
public:
    enum class Kind { PoleOrRemovable, GenuinePole, HigherOrder };

    SingularityError(Kind kind, double magnitude, const std::string& what)
        : NumericalError(what), kind_(kind), magnitude_(magnitude) {}

    Kind kind() const noexcept { return kind_; }
    /// |den(k)| for PoleOrRemovable, |num(k0)| for GenuinePole, |den'(k0)| for HigherOrder.
    double magnitude() const noexcept { return magnitude_; }

private:
    Kind kind_;
    double magnitude_;
};

struct PolynomialDivision;

class PolynomialK {
public:
    /// Leading coefficients with |c| <= kTrimRelative * max|c| are dropped.
    static constexpr double kTrimRelative = 1e-12;

    PolynomialK() = default;
    explicit PolynomialK(std::vector<cplx> coeffs);

    static PolynomialK constant(cplx c);
    /// k - root
    static PolynomialK linear(cplx root);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
    cplx leading() const { return coeffs_.empty() ? cplx{} : coeffs_.back(); }

    cplx operator()(cplx k) const;

    double max_abs_coeff() const;
    double sum_abs_coeff() const;
    /// sum_j |c_j| max(1,|k|)^j: the natural scale of |p(k)| under Horner evaluation.
    double magnitude_bound(cplx k) const;

    /// Synthetic (Horner) division by (k - root).
    PolynomialDivision deflate(cplx root) const;

    PolynomialK& operator+=(const PolynomialK& rhs);
    PolynomialK& operator-=(const PolynomialK& rhs);
    PolynomialK& operator*=(cplx s);

    friend PolynomialK operator+(PolynomialK a, const PolynomialK& b) { return a += b; }
    friend PolynomialK operator-(PolynomialK a, const PolynomialK& b) { return a -= b; }
    friend PolynomialK operator*(PolynomialK a, cplx s) { return a *= s; }
    friend PolynomialK operator*(cplx s, PolynomialK a) { return a *= s; }
    friend PolynomialK operator*(const PolynomialK& a, const PolynomialK& b);

    /// Structural equality up to a relative tolerance on every coefficient.
    bool approx_equal(const PolynomialK& other, double rel_tol) const;

private:
    void trim();
    std::vector<cplx> coeffs_;
};

struct PolynomialDivision {
    PolynomialK quotient;
    cplx remainder;
};

struct DenominatorFactor {
    PolynomialK poly;  // monic, degree >= 1
    int multiplicity;
};

struct RationalOptions {
    int degree_cap = 64;
    /// deflate(): |num(k0)| <= removability_tol * num.magnitude_bound(k0)
    double removability_tol = 1e-8;
    /// evaluate(): |den(k)| <= pole_tol * den.magnitude_bound(k) is treated as a zero.
    double pole_tol = 1e-13;
};

class RationalK {
public:
    /// The zero function.
    RationalK() = default;
    explicit RationalK(PolynomialK num, int degree_cap = RationalOptions{}.degree_cap);
    /// num / den with an arbitrary (unfactored) denominator.
    RationalK(PolynomialK num, const PolynomialK& den,
              int degree_cap = RationalOptions{}.degree_cap);

    /// c / (k - root)
    static RationalK simple_pole(cplx c, cplx root,
                                 int degree_cap = RationalOptions{}.degree_cap);

    const PolynomialK& num() const noexcept { return num_; }
    /// Expanded denominator polynomial.
    PolynomialK den() const;
    const std::vector<DenominatorFactor>& den_factors() const noexcept { return factors_; }
    int den_degree() const noexcept;
    int degree_cap() const noexcept { return cap_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    /// Denominator value as a product of its factors.
    cplx den_at(cplx k) const;

    /// num(k) / den(k). Throws SingularityError(PoleOrRemovable) when the
    /// denominator vanishes at k to within `pole_tol`.
    cplx evaluate(cplx k, const RationalOptions& opt = {}) const;

    /// Removes a simple removable singularity at k0: divides the numerator
    /// and the denominator by (k - k0). Throws SingularityError(GenuinePole)
    /// when num(k0) is not small, SingularityError(HigherOrder) when k0 is a
    /// multiple root of the denominator.
    RationalK deflate(cplx k0, const RationalOptions& opt = {}) const;

    /// Limit value at a removable singularity: evaluate(deflate(k0), k0).
    cplx evaluate_deflated(cplx k0, const RationalOptions& opt = {}) const;

    /// Divide by (k - root).
    RationalK& divide_by_linear(cplx root);
    RationalK& multiply_by(const PolynomialK& p);

    RationalK& operator+=(const RationalK& rhs);
    RationalK& operator-=(const RationalK& rhs);
    RationalK& operator*=(const RationalK& rhs);
    RationalK& operator*=(cplx s);

    friend RationalK operator+(RationalK a, const RationalK& b) { return a += b; }
    friend RationalK operator-(RationalK a, const RationalK& b) { return a -= b; }
    friend RationalK operator*(RationalK a, const RationalK& b) { return a *= b; }
    friend RationalK operator*(RationalK a, cplx s) { return a *= s; }
    friend RationalK operator*(cplx s, RationalK a) { return a *= s; }

private:
    void add_factor(PolynomialK monic, int multiplicity);
    void check_cap(const char* op) const;

    PolynomialK num_;
    std::vector<DenominatorFactor> factors_;
    int cap_ = RationalOptions{}.degree_cap;
};

}  // namespace nlsdtn
