#pragma once

// Finite-precision digit words over the p-adic numbers (the base may be any
// integer >= 2, primality is never used), plus balls and Haar-measure
// enumeration over them.
//
// A DigitWord stores digits on a window [v0, v0+N): digits below the window
// are zero, digits above it are unknown.  Every operation consumes only
// digits inside the window it was handed, which is what keeps downstream
// truncation bounds certifiable.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "padiclab/rational.hpp"

namespace padiclab {

class DigitWord {
public:
    DigitWord(int base, int v0, std::vector<std::uint32_t> digits);

    static DigitWord zero(int base, int v0, int n_digits);
    // Euclidean residue of value mod base^n_digits, shifted to start at v0.
    // Negative values wrap the usual way (-1 becomes all (base-1) digits).
    static DigitWord from_integer(int base, std::int64_t value, int n_digits, int v0 = 0);
    static DigitWord random(std::mt19937_64& rng, int base, int v0, int n_digits);

    int base() const { return base_; }
    int v0() const { return v0_; }
    int size() const { return static_cast<int>(digits_.size()); }
    int window_end() const { return v0_ + size(); }
    bool window_covers(int index_end) const { return index_end <= window_end(); }

    // 0 outside the window (unknown digits above the window read as the
    // zero-extension; callers that care track window_end themselves).
    std::uint32_t digit_at(int index) const;

    const std::vector<std::uint32_t>& digits() const { return digits_; }

    bool operator==(const DigitWord& other) const;
    std::string to_string() const;

private:
    int base_;
    int v0_;
    std::vector<std::uint32_t> digits_;
};

// Index of the lowest nonzero digit; nullopt for the all-zero word.
std::optional<int> valuation(const DigitWord& x);

// base^(-valuation); 0 for the zero word.
double norm(const DigitWord& x);

// Digits below index 0 as an exact rational in [0,1).  Requires v0 > -64.
Rational frac_part(const DigitWord& x);

// Digits at indices >= 0 (window preserved above 0).
DigitWord integer_part(const DigitWord& x);

// Re-index digits by +k: multiplies the word by base^k.
DigitWord shift(const DigitWord& x, int k);

// Digit n of x goes to output index 2n, digit n of y to 2n+1.
DigitWord interleave(const DigitWord& x, const DigitWord& y);
std::pair<DigitWord, DigitWord> deinterleave(const DigitWord& z);

// Digit n -> index k*n, k >= 1 (the index-dilation map Theta_K).
DigitWord dilate_indices(const DigitWord& x, int k);

// m-fold iterated exponent to base p of n (p^p^...^n).  Throws on overflow
// past max_index.
std::int64_t iterated_exp(int base, int m, int n, std::int64_t max_index);

// Digit n -> index iterated_exp(base, m, n).  Only nonnegative indices may
// carry nonzero digits; an output index past max_index is an error that
// names the offending input index.
DigitWord spread_iterexp(const DigitWord& x, int m, int max_index = 4096);

// Truncated-window arithmetic: results are exact mod base^(min window end).
// No general multiplication or division is provided.
DigitWord add(const DigitWord& x, const DigitWord& y);
DigitWord sub(const DigitWord& x, const DigitWord& y);
DigitWord negate(const DigitWord& x);

// Closed ball {x : |x - center|_p <= p^(-level)}; membership depends only on
// digits at indices < level.
struct Ball {
    DigitWord center;
    int level;

    Ball(DigitWord c, int lvl) : center(std::move(c)), level(lvl) {}
    bool contains(const DigitWord& x) const;
};

// Finite disjoint union of balls.  unit_ball(p) is Z_p; lambda_ball(p, N)
// is {|x|_p <= p^N}.
using Region = std::vector<Ball>;

Ball unit_ball(int base);
Ball lambda_ball(int base, int N);

Rational haar_volume(const Ball& b);
Rational haar_volume(const Region& r);

// Splits each ball of the region into its base^depth sub-balls at level
// (ball.level + depth) and hands each to visit together with its exact Haar
// weight.  Weights sum to the region volume exactly.
void enumerate_prefixes(const Region& region, int depth,
                        const std::function<void(const Ball&, const Rational&)>& visit);

}  // namespace padiclab
