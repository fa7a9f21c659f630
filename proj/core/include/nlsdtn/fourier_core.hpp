#pragma once

// Bilateral Fourier series whose coefficients are additionally graded by a
// perturbation order:  a(t) = sum_{N>=1} sum_n a_{N,n} eps^N e^{i n omega t}.

#include <complex>
#include <compare>
#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nlsdtn/error.hpp"

namespace nlsdtn {

using cplx = std::complex<double>;

struct GradedKey {
    int order;     // N >= 1
    int harmonic;  // n

    auto operator<=>(const GradedKey&) const = default;
};

/// Sparse (order, harmonic) -> value map. Absent keys are zero.
/// T is cplx for coefficient tables and RationalK for the d_{N,n}(k) table.
template <class T>
class GradedSeries {
public:
    using map_type = std::map<GradedKey, T>;

    GradedSeries() = default;
    explicit GradedSeries(double omega) : omega_(omega) {}

    double omega() const noexcept { return omega_; }
    void set_omega(double omega) noexcept { omega_ = omega; }

    void set(int order, int harmonic, T value) {
        if (order < 1) {
            throw DomainError("graded series: order must be >= 1, got " + std::to_string(order));
        }
        entries_.insert_or_assign(GradedKey{order, harmonic}, std::move(value));
    }

    const T* find(int order, int harmonic) const {
        auto it = entries_.find(GradedKey{order, harmonic});
        return it == entries_.end() ? nullptr : &it->second;
    }

    bool contains(int order, int harmonic) const { return find(order, harmonic) != nullptr; }

    void erase(int order, int harmonic) { entries_.erase(GradedKey{order, harmonic}); }

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    const map_type& entries() const noexcept { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    int max_order() const {
        int m = 0;
        for (const auto& [key, value] : entries_) m = std::max(m, key.order);
        return m;
    }

    /// Entries at a single order, as (harmonic, value) pairs in ascending harmonic.
    std::vector<std::pair<int, const T*>> row(int order) const {
        std::vector<std::pair<int, const T*>> out;
        auto it = entries_.lower_bound(GradedKey{order, std::numeric_limits<int>::min()});
        for (; it != entries_.end() && it->first.order == order; ++it) {
            out.emplace_back(it->first.harmonic, &it->second);
        }
        return out;
    }

private:
    map_type entries_;
    double omega_ = 1.0;
};

using GradedCoefficients = GradedSeries<cplx>;

/// Entrywise complex conjugate; the harmonic index is kept (the e^{-ilwt}
/// factor is accounted for by the n+l-m bookkeeping of the convolutions).
GradedCoefficients conjugate_grade(const GradedCoefficients& a);

/// Index patterns admitted by graded_bilinear_convolution.
enum class IndexRule {
    Cauchy,        // x_l y_m with l + m = n
    ConjugateTriple // xbar_l y_m z_{n+l-m}; first argument already conjugated
};

/// Coefficient of eps^order e^{i harmonic omega t} of x*y (Cauchy rule).
cplx graded_bilinear_convolution(const GradedCoefficients& x, const GradedCoefficients& y,
                                 int target_order, int target_harmonic);

/// Coefficient of eps^order e^{i harmonic omega t} of sum_{l,m} xbar_l y_m z_{n+l-m}.
/// `xbar` must already be conjugated (see conjugate_grade).
cplx graded_triple_convolution(const GradedCoefficients& xbar, const GradedCoefficients& y,
                               const GradedCoefficients& z, int target_order,
                               int target_harmonic);

/// Dispatching form. For IndexRule::Cauchy `z` is ignored and may be null.
cplx graded_convolution(IndexRule rule, const GradedCoefficients& x, const GradedCoefficients& y,
                        const GradedCoefficients* z, int target_order, int target_harmonic);

/// Partial sum sum_{N,n} a_{N,n} eps^N e^{i n omega t} over the stored keys.
cplx evaluate_series(const GradedCoefficients& a, double epsilon, double t);

/// Maximum |n| stored at the given order (0 if the row is empty).
int harmonic_radius(const GradedCoefficients& a, int order);

/// Whole-row triple product: for every reachable harmonic n returns
/// sum over N1+N2+N3 = order of xbar_{N1,l} y_{N2,m} z_{N3,n+l-m}.
/// Generic over the value types so that RationalK tables can be combined with
/// scalar coefficients; `Mul` must be a callable (X, Y, Z) -> R and R must
/// support +=.
template <class R, class X, class Y, class Z, class Mul>
std::map<int, R> triple_product_row(const GradedSeries<X>& xbar, const GradedSeries<Y>& y,
                                    const GradedSeries<Z>& z, int order, Mul&& mul) {
    std::map<int, R> out;
    for (const auto& [kx, vx] : xbar) {
        if (kx.order >= order) continue;
        for (const auto& [ky, vy] : y) {
            const int rest = order - kx.order - ky.order;
            if (rest < 1) continue;
            for (const auto& [p, vz] : z.row(rest)) {
                // p = n + l - m  =>  n = p - l + m
                const int n = p - kx.harmonic + ky.harmonic;
                auto term = mul(vx, vy, *vz);
                auto it = out.find(n);
                if (it == out.end()) {
                    out.emplace(n, std::move(term));
                } else {
                    it->second += term;
                }
            }
        }
    }
    return out;
}

}  // namespace nlsdtn
