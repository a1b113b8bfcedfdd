#include "padiclab/a_adic.hpp"

#include <functional>

namespace padiclab {

ASequence ASequence::constant(int p) {
    if (p < 2) throw std::invalid_argument("ASequence: radix must be >= 2");
    ASequence s;
    s.kind_ = Kind::Constant;
    s.p_ = p;
    return s;
}

ASequence ASequence::factorial_shifted() {
    ASequence s;
    s.kind_ = Kind::FactorialShifted;
    return s;
}

ASequence ASequence::custom(std::vector<std::int64_t> radices) {
    for (auto r : radices)
        if (r < 2) throw std::invalid_argument("ASequence: radix must be >= 2");
    ASequence s;
    s.kind_ = Kind::Custom;
    s.radices_ = std::move(radices);
    return s;
}

std::int64_t ASequence::radix(int k) const {
    if (k < 0) throw std::invalid_argument("ASequence: negative index");
    switch (kind_) {
        case Kind::Constant:
            return p_;
        case Kind::FactorialShifted: {
            // (k+2)! saturates int64 around k = 18; callers never get there
            // because the partial products overflow double long before.
            std::int64_t f = 1;
            for (std::int64_t j = 2; j <= k + 2; ++j) f *= j;
            return f;
        }
        case Kind::Custom:
            if (k >= static_cast<int>(radices_.size()))
                throw std::out_of_range("ASequence: index past custom radix list");
            return radices_[static_cast<std::size_t>(k)];
    }
    throw std::logic_error("ASequence: bad kind");
}

double ASequence::partial_product(int n) const {
    if (n < 0) return 1.0;
    while (static_cast<int>(pp_cache_.size()) <= n) {
        int k = static_cast<int>(pp_cache_.size());
        double prev = k == 0 ? 1.0 : pp_cache_.back();
        pp_cache_.push_back(prev * static_cast<double>(radix(k)));
    }
    return pp_cache_[static_cast<std::size_t>(n)];
}

BigInt ASequence::partial_product_exact(int n) const {
    BigInt r = 1;
    for (int k = 0; k <= n; ++k) r *= radix(k);
    return r;
}

AWord::AWord(ASequence seq, std::vector<std::int64_t> digits)
    : seq_(std::move(seq)), digits_(std::move(digits)) {
    for (int k = 0; k < static_cast<int>(digits_.size()); ++k) {
        auto d = digits_[static_cast<std::size_t>(k)];
        if (d < 0 || d >= seq_.radix(k))
            throw std::invalid_argument("AWord: digit out of range at index " + std::to_string(k));
    }
}

AWord AWord::zero(const ASequence& seq, int n_digits) {
    return AWord(seq, std::vector<std::int64_t>(static_cast<std::size_t>(n_digits), 0));
}

std::int64_t AWord::digit_at(int k) const {
    if (k < 0 || k >= size()) return 0;
    return digits_[static_cast<std::size_t>(k)];
}

std::optional<int> AWord::valuation() const {
    for (int k = 0; k < size(); ++k)
        if (digit_at(k) != 0) return k;
    return std::nullopt;
}

BigInt AWord::place_value_exact(int n) const {
    BigInt acc = 0;
    BigInt place = 1;  // a^(k-1)
    for (int k = 0; k <= n; ++k) {
        acc += place * digit_at(k);
        place *= seq_.radix(k);
    }
    return acc;
}

double AWord::scaled_place_value(int n) const {
    // u_k = (u_{k-1} + x_k) / a_k telescopes to (x)^n / a^(n).
    double u = 0.0;
    for (int k = 0; k <= n; ++k)
        u = (u + static_cast<double>(digit_at(k))) / static_cast<double>(seq_.radix(k));
    return u;
}

AWord AWord::add_integer(std::uint64_t m) const {
    std::vector<std::int64_t> ds = digits_;
    boost::multiprecision::cpp_int carry = m;
    for (int k = 0; k < size() && carry != 0; ++k) {
        boost::multiprecision::cpp_int t = carry + ds[static_cast<std::size_t>(k)];
        boost::multiprecision::cpp_int r = t % seq_.radix(k);
        ds[static_cast<std::size_t>(k)] = r.convert_to<std::int64_t>();
        carry = t / seq_.radix(k);
    }
    // Carry past the window is dropped, matching the truncated p-adic ops.
    return AWord(seq_, std::move(ds));
}

void enumerate_a_prefixes(const ASequence& seq, int depth,
                          const std::function<void(const AWord&, const Rational&)>& visit) {
    if (depth < 0) throw std::invalid_argument("enumerate_a_prefixes: negative depth");
    Rational w(1, seq.partial_product_exact(depth - 1));
    std::vector<std::int64_t> digits(static_cast<std::size_t>(depth), 0);
    while (true) {
        visit(AWord(seq, digits), w);
        int pos = 0;
        while (pos < depth && ++digits[static_cast<std::size_t>(pos)] == seq.radix(pos)) {
            digits[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == depth) break;
    }
}

}  // namespace padiclab
