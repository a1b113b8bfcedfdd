#pragma once

// Profiles: bounded functions on the p-power rationals Z(p^inf) in [0,1)
// whose Laurent coefficients generate the scaling-covariant map family.
//
// Evaluation is exact for the digit-table kinds (Digit, DigitNormalized,
// Truncated, Tabulated); the Exponential kind rounds at ulp scale.  The
// Exponential kind is (e^{2 pi i t} - 1)/2: the 1/2 keeps sup|phi| <= 1,
// which every tail bound in the map layer relies on, and gives the
// separation constant sin(pi/p) directly.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padiclab/rational.hpp"

namespace padiclab {

using cplx = std::complex<double>;

enum class ProfileKind { Digit, DigitNormalized, Exponential, Truncated, Tabulated };

// Incrementally maintained fractional argument {x / p^(n+1)} for series
// loops: push(d) maps q -> (q + d)/p.  Tracks the top `win_len` digits
// exactly as an integer plus a rounded full value.
struct FracCursor {
    int base = 2;
    int win_len = 0;            // top digits tracked exactly
    std::int64_t win_num = 0;   // those digits as an integer in [0, base^win_len)
    std::int64_t win_den = 1;   // base^win_len
    double approx = 0.0;

    FracCursor(int b, int wl) : base(b), win_len(wl) {
        for (int i = 0; i < wl; ++i) win_den *= b;
    }
    void push(std::uint32_t digit) {
        if (win_len > 0)
            win_num = win_num / base + static_cast<std::int64_t>(digit) * (win_den / base);
        approx = (approx + static_cast<double>(digit)) / static_cast<double>(base);
    }
    bool is_zero() const { return win_num == 0 && approx == 0.0; }
};

class Profile {
public:
    static Profile digit(int p);              // phi(q) = top fractional digit
    static Profile digit_normalized(int p);   // top digit / (p-1)
    static Profile exponential(int p);        // (e^{2 pi i q} - 1)/2
    static Profile truncated(const Profile& inner, int m);
    // Complete value table on denominators up to p^M (slot i holds phi(i/p^M)).
    static Profile tabulated(int p, int m, std::vector<cplx> table);
    static Profile tabulated_from_csv(int p, const std::string& path);
    static Profile by_name(const std::string& name, int p);  // "digit"|"digitnorm"|"exp"

    int base() const { return p_; }
    ProfileKind kind() const { return kind_; }
    // Digit-dependence depth; nullopt = infinite (Exponential).
    std::optional<int> depth() const;
    int cursor_window() const;  // exact digits a FracCursor must carry
    double sup_bound() const { return sup_bound_; }
    double oscillation() const { return osc_; }
    cplx phi_zero() const;
    std::string name() const;

    // q must lie in [0,1) with a denominator dividing a power of p.
    cplx eval(const Rational& q) const;
    cplx eval_cursor(const FracCursor& c) const;
    // Period-1 extension to the reals (used by the solenoid series).
    cplx eval_real(double t) const;

private:
    Profile() = default;

    // Value at q = num / p^m for the digit-table kinds.
    cplx eval_top_digits(std::int64_t num, int m) const;

    ProfileKind kind_ = ProfileKind::Digit;
    int p_ = 2;
    int m_ = 0;  // depth for Truncated/Tabulated
    double sup_bound_ = 1.0;
    double osc_ = 1.0;
    std::shared_ptr<const Profile> inner_;
    std::shared_ptr<const std::vector<cplx>> table_;
};

// Separation constant: inf over a = 1..p-1 and tau in Z(p^inf) of
// |phi(a/p + tau) - phi(tau)| (tau enumerated to `depth` digits).
struct NuResult {
    double value = 0.0;
    double uncertainty = 0.0;       // 0 when the enumeration is exhaustive
    bool exact = false;             // enumeration covered the full digit dependence
    std::optional<Rational> exact_value;  // set when phi takes rational real values
};
NuResult separation_constant(const Profile& phi, int depth);
NuResult separation_constant(const Profile& phi);  // profile's own exactness depth

// Embedding radius nu/(1+nu).
struct SigmaResult {
    double value = 0.0;
    std::optional<Rational> exact_value;
};
SigmaResult embedding_radius(const Profile& phi, int depth);
SigmaResult embedding_radius(const Profile& phi);

// sup |phi - [phi]_m| over Z(p^inf): sampled lower bound plus, when the
// profile admits one, an analytic upper bound.
struct TruncationGap {
    double sampled = 0.0;                  // sup over probed points
    std::optional<double> analytic_upper;  // certified bound when available
    double upper_or_sampled() const { return analytic_upper.value_or(sampled); }
};
TruncationGap truncation_gap(const Profile& phi, int m, int probe_depth = -1);

// [q]^m = p^-m [p^m q]: the top m fractional digits of q.
Rational truncate_rational(const Rational& q, int p, int m);

}  // namespace padiclab
