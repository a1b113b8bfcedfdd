#pragma once

// Mixed-radix generalization of Z_p: sequences {x_n} with x_n < a_n, the
// partial products a^(n) = a_0 * ... * a_n and the truncated place values
// (x)^n = sum_{k<=n} x_k a^(k-1) that drive the solenoid series.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "padiclab/rational.hpp"

namespace padiclab {

class ASequence {
public:
    static ASequence constant(int p);
    // a_k = (k+2)!  (2, 6, 24, ...)
    static ASequence factorial_shifted();
    static ASequence custom(std::vector<std::int64_t> radices);

    std::int64_t radix(int k) const;

    // a^(n) as a double; a^(-1) = 1.  Monotone increasing, each radix >= 2.
    double partial_product(int n) const;
    BigInt partial_product_exact(int n) const;

private:
    enum class Kind { Constant, FactorialShifted, Custom };
    Kind kind_;
    std::int64_t p_ = 0;
    std::vector<std::int64_t> radices_;
    mutable std::vector<double> pp_cache_;
};

// Finite prefix of an a-adic integer: digits x_0..x_{N-1} with x_k < a_k.
class AWord {
public:
    AWord(ASequence seq, std::vector<std::int64_t> digits);

    static AWord zero(const ASequence& seq, int n_digits);

    const ASequence& seq() const { return seq_; }
    int size() const { return static_cast<int>(digits_.size()); }
    std::int64_t digit_at(int k) const;

    // Index of the lowest nonzero digit; nullopt when all stored digits are 0.
    std::optional<int> valuation() const;

    // (x)^n = sum_{k=0..n} x_k a^(k-1), exact.
    BigInt place_value_exact(int n) const;

    // ((x)^n) / a^(n) in [0, 1), evaluated in floating point by the stable
    // recursion u_n = (u_{n-1} + x_n) / a_n.
    double scaled_place_value(int n) const;

    AWord add_integer(std::uint64_t m) const;

private:
    ASequence seq_;
    std::vector<std::int64_t> digits_;
};

// Sub-prefix enumeration with exact weights 1/a^(depth-1), mirroring the
// p-adic prefix enumeration.
void enumerate_a_prefixes(const ASequence& seq, int depth,
                          const std::function<void(const AWord&, const Rational&)>& visit);

}  // namespace padiclab
