#include "nlsdtn/rational_k.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nlsdtn {

namespace {

// Factors produced by the hierarchy are built from identical k1 values, so
// matching is essentially bitwise; the slack only absorbs -0.0 style noise.
constexpr double kFactorMatchTol = 1e-13;

PolynomialK power(const PolynomialK& p, int m) {
    PolynomialK out = PolynomialK::constant(1.0);
    for (int i = 0; i < m; ++i) out = out * p;
    return out;
}

std::string format_k(cplx k) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << k.real() << (k.imag() < 0 ? "" : "+") << k.imag() << "i)";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- PolynomialK

PolynomialK::PolynomialK(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolynomialK PolynomialK::constant(cplx c) { return PolynomialK(std::vector<cplx>{c}); }

PolynomialK PolynomialK::linear(cplx root) { return PolynomialK(std::vector<cplx>{-root, 1.0}); }

void PolynomialK::trim() {
    const double scale = max_abs_coeff();
    if (scale == 0.0) {
        coeffs_.clear();
        return;
    }
    const double cut = kTrimRelative * scale;
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cut) coeffs_.pop_back();
}

cplx PolynomialK::operator()(cplx k) const {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
    return acc;
}

double PolynomialK::max_abs_coeff() const {
    double m = 0.0;
    for (const cplx& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double PolynomialK::sum_abs_coeff() const {
    double s = 0.0;
    for (const cplx& c : coeffs_) s += std::abs(c);
    return s;
}

double PolynomialK::magnitude_bound(cplx k) const {
    const double r = std::max(1.0, std::abs(k));
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

PolynomialDivision PolynomialK::deflate(cplx root) const {
    if (coeffs_.empty()) return {PolynomialK{}, cplx{}};
    const std::size_t deg = coeffs_.size() - 1;
    std::vector<cplx> q(deg);
    cplx carry = coeffs_.back();
    for (std::size_t j = deg; j-- > 0;) {
        q[j] = carry;
        carry = coeffs_[j] + carry * root;
    }
    return {PolynomialK(std::move(q)), carry};
}

PolynomialK& PolynomialK::operator+=(const PolynomialK& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    trim();
    return *this;
}

PolynomialK& PolynomialK::operator-=(const PolynomialK& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    trim();
    return *this;
}

PolynomialK& PolynomialK::operator*=(cplx s) {
    if (s == cplx{}) {
        coeffs_.clear();
        return *this;
    }
    for (cplx& c : coeffs_) c *= s;
    return *this;
}

PolynomialK operator*(const PolynomialK& a, const PolynomialK& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<cplx> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolynomialK(std::move(out));
}

bool PolynomialK::approx_equal(const PolynomialK& other, double rel_tol) const {
    if (coeffs_.size() != other.coeffs_.size()) return false;
    const double scale = std::max({1.0, max_abs_coeff(), other.max_abs_coeff()});
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (std::abs(coeffs_[j] - other.coeffs_[j]) > rel_tol * scale) return false;
    }
    return true;
}

// ------------------------------------------------------------------ RationalK

RationalK::RationalK(PolynomialK num, int degree_cap) : num_(std::move(num)), cap_(degree_cap) {
    check_cap("construct");
}

RationalK::RationalK(PolynomialK num, const PolynomialK& den, int degree_cap)
    : num_(std::move(num)), cap_(degree_cap) {
    if (den.is_zero()) throw DomainError("rational function with identically zero denominator");
    const cplx lead = den.leading();
    num_ *= 1.0 / lead;
    if (den.degree() > 0 && !num_.is_zero()) add_factor(den * (1.0 / lead), 1);
    check_cap("construct");
}

RationalK RationalK::simple_pole(cplx c, cplx root, int degree_cap) {
    RationalK r(PolynomialK::constant(c), degree_cap);
    r.divide_by_linear(root);
    return r;
}

PolynomialK RationalK::den() const {
    PolynomialK out = PolynomialK::constant(1.0);
    for (const auto& f : factors_) out = out * power(f.poly, f.multiplicity);
    return out;
}

int RationalK::den_degree() const noexcept {
    int d = 0;
    for (const auto& f : factors_) d += f.poly.degree() * f.multiplicity;
    return d;
}

cplx RationalK::den_at(cplx k) const {
    cplx v{1.0, 0.0};
    for (const auto& f : factors_) {
        const cplx fk = f.poly(k);
        for (int i = 0; i < f.multiplicity; ++i) v *= fk;
    }
    return v;
}

void RationalK::add_factor(PolynomialK monic, int multiplicity) {
    for (auto& f : factors_) {
        if (f.poly.approx_equal(monic, kFactorMatchTol)) {
            f.multiplicity += multiplicity;
            return;
        }
    }
    factors_.push_back({std::move(monic), multiplicity});
}

void RationalK::check_cap(const char* op) const {
    const int dn = num_.degree();
    const int dd = den_degree();
    if (dn > cap_ || dd > cap_) {
        std::ostringstream os;
        os << "degree cap " << cap_ << " exceeded in " << op << " (numerator degree " << dn
           << ", denominator degree " << dd << ")";
        throw DegreeCapError(os.str());
    }
}

cplx RationalK::evaluate(cplx k, const RationalOptions& opt) const {
    if (num_.is_zero()) return {};
    cplx den_value{1.0, 0.0};
    double den_scale = 1.0;
    for (const auto& f : factors_) {
        const cplx fk = f.poly(k);
        const double bound = f.poly.magnitude_bound(k);
        for (int i = 0; i < f.multiplicity; ++i) {
            den_value *= fk;
            den_scale *= bound;
        }
    }
    if (std::abs(den_value) <= opt.pole_tol * den_scale) {
        throw SingularityError(SingularityError::Kind::PoleOrRemovable, std::abs(den_value),
                               "pole or removable singularity at k = " + format_k(k) +
                                   ": |den(k)| = " + std::to_string(std::abs(den_value)));
    }
    return num_(k) / den_value;
}

RationalK RationalK::deflate(cplx k0, const RationalOptions& opt) const {
    RationalK out = *this;
    if (out.num_.is_zero()) return out;

    // Locate the factor vanishing at k0.
    std::size_t hit = out.factors_.size();
    double best = 0.0;
    for (std::size_t i = 0; i < out.factors_.size(); ++i) {
        const auto& f = out.factors_[i];
        const double scale = f.poly.magnitude_bound(k0);
        const double rel = std::abs(f.poly(k0)) / scale;
        if (rel <= opt.removability_tol && (hit == out.factors_.size() || rel < best)) {
            hit = i;
            best = rel;
        }
    }
    if (hit == out.factors_.size()) {
        throw DomainError("deflate: denominator does not vanish at k = " + format_k(k0));
    }

    auto& f = out.factors_[hit];
    if (f.multiplicity > 1) {
        throw SingularityError(SingularityError::Kind::HigherOrder, 0.0,
                               "higher-order singularity at k = " + format_k(k0) +
                                   " (multiplicity " + std::to_string(f.multiplicity) + ")");
    }

    const auto num_div = out.num_.deflate(k0);
    const double num_scale = out.num_.magnitude_bound(k0);
    if (std::abs(num_div.remainder) > opt.removability_tol * num_scale) {
        throw SingularityError(SingularityError::Kind::GenuinePole, std::abs(num_div.remainder),
                               "genuine pole at k = " + format_k(k0) + ": |num(k0)| = " +
                                   std::to_string(std::abs(num_div.remainder)));
    }

    if (f.poly.degree() == 1) {
        out.factors_.erase(out.factors_.begin() + static_cast<std::ptrdiff_t>(hit));
    } else {
        auto q = f.poly.deflate(k0).quotient;
        f.poly = std::move(q);
    }
    out.num_ = num_div.quotient;

    // A second root at (or numerically at) k0 would leave the denominator vanishing.
    const cplx rest = out.den_at(k0);
    double rest_scale = 1.0;
    for (const auto& g : out.factors_) {
        for (int i = 0; i < g.multiplicity; ++i) rest_scale *= g.poly.magnitude_bound(k0);
    }
    if (std::abs(rest) <= opt.removability_tol * rest_scale) {
        throw SingularityError(SingularityError::Kind::HigherOrder, std::abs(rest),
                               "higher-order singularity at k = " + format_k(k0));
    }
    return out;
}

cplx RationalK::evaluate_deflated(cplx k0, const RationalOptions& opt) const {
    if (num_.is_zero()) return {};
    double den_scale = 1.0;
    for (const auto& f : factors_) {
        for (int i = 0; i < f.multiplicity; ++i) den_scale *= f.poly.magnitude_bound(k0);
    }
    if (std::abs(den_at(k0)) > opt.pole_tol * den_scale) return evaluate(k0, opt);
    return deflate(k0, opt).evaluate(k0, opt);
}

RationalK& RationalK::divide_by_linear(cplx root) {
    if (num_.is_zero()) return *this;
    add_factor(PolynomialK::linear(root), 1);
    check_cap("divide");
    return *this;
}

RationalK& RationalK::multiply_by(const PolynomialK& p) {
    num_ = num_ * p;
    if (num_.is_zero()) factors_.clear();
    check_cap("multiply");
    return *this;
}

RationalK& RationalK::operator+=(const RationalK& rhs) {
    cap_ = std::min(cap_, rhs.cap_);
    if (rhs.num_.is_zero()) return *this;
    if (num_.is_zero()) {
        num_ = rhs.num_;
        factors_ = rhs.factors_;
        check_cap("add");
        return *this;
    }

    // Least common multiple of the two factor lists.
    std::vector<DenominatorFactor> lcm = factors_;
    PolynomialK lhs_mult = PolynomialK::constant(1.0);
    PolynomialK rhs_mult = PolynomialK::constant(1.0);
    std::vector<bool> used(factors_.size(), false);
    for (const auto& g : rhs.factors_) {
        bool matched = false;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (used[i] || !factors_[i].poly.approx_equal(g.poly, kFactorMatchTol)) continue;
            used[i] = true;
            matched = true;
            const int diff = g.multiplicity - factors_[i].multiplicity;
            if (diff > 0) {
                lhs_mult = lhs_mult * power(g.poly, diff);
                lcm[i].multiplicity = g.multiplicity;
            } else if (diff < 0) {
                rhs_mult = rhs_mult * power(g.poly, -diff);
            }
            break;
        }
        if (!matched) {
            lhs_mult = lhs_mult * power(g.poly, g.multiplicity);
            lcm.push_back(g);
        }
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (!used[i]) rhs_mult = rhs_mult * power(factors_[i].poly, factors_[i].multiplicity);
    }

    num_ = num_ * lhs_mult + rhs.num_ * rhs_mult;
    if (num_.is_zero()) {
        factors_.clear();
    } else {
        factors_ = std::move(lcm);
    }
    check_cap("add");
    return *this;
}

RationalK& RationalK::operator-=(const RationalK& rhs) { return *this += rhs * cplx{-1.0, 0.0}; }

RationalK& RationalK::operator*=(const RationalK& rhs) {
    cap_ = std::min(cap_, rhs.cap_);
    if (num_.is_zero() || rhs.num_.is_zero()) {
        num_ = PolynomialK{};
        factors_.clear();
        return *this;
    }
    num_ = num_ * rhs.num_;
    for (const auto& g : rhs.factors_) add_factor(g.poly, g.multiplicity);
    check_cap("multiply");
    return *this;
}

RationalK& RationalK::operator*=(cplx s) {
    num_ *= s;
    if (num_.is_zero()) factors_.clear();
    return *this;
}

}  // namespace nlsdtn
