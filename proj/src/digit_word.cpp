#include "padiclab/digit_word.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace padiclab {

DigitWord::DigitWord(int base, int v0, std::vector<std::uint32_t> digits)
    : base_(base), v0_(v0), digits_(std::move(digits)) {
    if (base < 2) throw std::invalid_argument("DigitWord: base must be >= 2");
    for (auto d : digits_) {
        if (d >= static_cast<std::uint32_t>(base))
            throw std::invalid_argument("DigitWord: digit out of range for base");
    }
}

DigitWord DigitWord::zero(int base, int v0, int n_digits) {
    return DigitWord(base, v0, std::vector<std::uint32_t>(static_cast<std::size_t>(n_digits), 0));
}

DigitWord DigitWord::from_integer(int base, std::int64_t value, int n_digits, int v0) {
    std::vector<std::uint32_t> ds(static_cast<std::size_t>(n_digits), 0);
    const std::int64_t b = base;
    for (int k = 0; k < n_digits; ++k) {
        std::int64_t r = value % b;
        if (r < 0) r += b;
        ds[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(r);
        value = (value - r) / b;
    }
    return DigitWord(base, v0, std::move(ds));
}

DigitWord DigitWord::random(std::mt19937_64& rng, int base, int v0, int n_digits) {
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(base - 1));
    std::vector<std::uint32_t> ds(static_cast<std::size_t>(n_digits));
    for (auto& d : ds) d = dist(rng);
    return DigitWord(base, v0, std::move(ds));
}

std::uint32_t DigitWord::digit_at(int index) const {
    if (index < v0_ || index >= window_end()) return 0;
    return digits_[static_cast<std::size_t>(index - v0_)];
}

bool DigitWord::operator==(const DigitWord& other) const {
    if (base_ != other.base_) return false;
    int lo = std::min(v0_, other.v0_);
    int hi = std::max(window_end(), other.window_end());
    for (int i = lo; i < hi; ++i)
        if (digit_at(i) != other.digit_at(i)) return false;
    return true;
}

std::string DigitWord::to_string() const {
    std::ostringstream os;
    os << "base" << base_ << "[";
    for (int i = window_end() - 1; i >= v0_; --i) {
        os << digit_at(i);
        if (i == 0 && v0_ < 0) os << ".";
        if (i > v0_) os << " ";
    }
    os << "]@" << v0_;
    return os.str();
}

std::optional<int> valuation(const DigitWord& x) {
    for (int i = x.v0(); i < x.window_end(); ++i)
        if (x.digit_at(i) != 0) return i;
    return std::nullopt;
}

double norm(const DigitWord& x) {
    auto v = valuation(x);
    if (!v) return 0.0;
    return std::pow(static_cast<double>(x.base()), -static_cast<double>(*v));
}

Rational frac_part(const DigitWord& x) {
    if (x.v0() <= -64) throw std::invalid_argument("frac_part: window extends below index -63");
    Rational q = 0;
    for (int i = x.v0(); i < std::min(0, x.window_end()); ++i)
        q += Rational(x.digit_at(i)) * pow_rational(x.base(), i);
    return q;
}

DigitWord integer_part(const DigitWord& x) {
    int lo = std::max(0, x.v0());
    int n = std::max(0, x.window_end() - lo);
    std::vector<std::uint32_t> ds(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ds[static_cast<std::size_t>(i)] = x.digit_at(lo + i);
    return DigitWord(x.base(), lo, std::move(ds));
}

DigitWord shift(const DigitWord& x, int k) {
    return DigitWord(x.base(), x.v0() + k, x.digits());
}

DigitWord interleave(const DigitWord& x, const DigitWord& y) {
    if (x.base() != y.base()) throw std::invalid_argument("interleave: mixed bases");
    int lo = std::min(2 * x.v0(), 2 * y.v0() + 1);
    int hi = std::max(2 * (x.window_end() - 1) + 1, 2 * (y.window_end() - 1) + 2);
    hi = std::max(hi, lo);
    std::vector<std::uint32_t> ds(static_cast<std::size_t>(hi - lo), 0);
    for (int n = x.v0(); n < x.window_end(); ++n)
        ds[static_cast<std::size_t>(2 * n - lo)] = x.digit_at(n);
    for (int n = y.v0(); n < y.window_end(); ++n)
        ds[static_cast<std::size_t>(2 * n + 1 - lo)] = y.digit_at(n);
    return DigitWord(x.base(), lo, std::move(ds));
}

std::pair<DigitWord, DigitWord> deinterleave(const DigitWord& z) {
    // x gets even indices, y odd ones; windows chosen to cover all of z.
    int xlo = static_cast<int>(std::floor(z.v0() / 2.0));
    int xhi = static_cast<int>(std::ceil(z.window_end() / 2.0));
    int ylo = static_cast<int>(std::floor((z.v0() - 1) / 2.0));
    int yhi = static_cast<int>(std::ceil((z.window_end() - 1) / 2.0));
    std::vector<std::uint32_t> xd(static_cast<std::size_t>(std::max(0, xhi - xlo)), 0);
    std::vector<std::uint32_t> yd(static_cast<std::size_t>(std::max(0, yhi - ylo)), 0);
    for (int n = xlo; n < xhi; ++n) xd[static_cast<std::size_t>(n - xlo)] = z.digit_at(2 * n);
    for (int n = ylo; n < yhi; ++n) yd[static_cast<std::size_t>(n - ylo)] = z.digit_at(2 * n + 1);
    return {DigitWord(z.base(), xlo, std::move(xd)), DigitWord(z.base(), ylo, std::move(yd))};
}

DigitWord dilate_indices(const DigitWord& x, int k) {
    if (k < 1) throw std::invalid_argument("dilate_indices: k must be >= 1");
    int lo = k * x.v0();
    int hi = k * (x.window_end() - 1) + 1;
    hi = std::max(hi, lo);
    std::vector<std::uint32_t> ds(static_cast<std::size_t>(hi - lo), 0);
    for (int n = x.v0(); n < x.window_end(); ++n)
        ds[static_cast<std::size_t>(k * n - lo)] = x.digit_at(n);
    return DigitWord(x.base(), lo, std::move(ds));
}

std::int64_t iterated_exp(int base, int m, int n, std::int64_t max_index) {
    if (m < 1) throw std::invalid_argument("iterated_exp: m must be >= 1");
    long double e = n;
    for (int i = 0; i < m; ++i) {
        if (e > 62.0L / std::log2(static_cast<long double>(base)) && e > max_index)
            throw std::overflow_error("iterated_exp: index overflow");
        e = std::pow(static_cast<long double>(base), e);
        if (e > static_cast<long double>(max_index))
            throw std::overflow_error("iterated_exp: index overflow");
    }
    return static_cast<std::int64_t>(e);
}

DigitWord spread_iterexp(const DigitWord& x, int m, int max_index) {
    std::int64_t hi = 0;
    std::vector<std::pair<std::int64_t, std::uint32_t>> placed;
    for (int n = x.v0(); n < x.window_end(); ++n) {
        std::uint32_t d = x.digit_at(n);
        if (d == 0) continue;
        if (n < 0)
            throw std::invalid_argument(
                "spread_iterexp: nonzero digit at negative index " + std::to_string(n));
        std::int64_t target;
        try {
            target = iterated_exp(x.base(), m, n, max_index);
        } catch (const std::overflow_error&) {
            throw std::overflow_error(
                "spread_iterexp: output index overflows window at input index " +
                std::to_string(n));
        }
        placed.emplace_back(target, d);
        hi = std::max(hi, target + 1);
    }
    // Window always reaches max(1, ...) so the zero word stays representable.
    hi = std::max<std::int64_t>(hi, 1);
    std::vector<std::uint32_t> ds(static_cast<std::size_t>(hi), 0);
    for (auto [idx, d] : placed) ds[static_cast<std::size_t>(idx)] = d;
    return DigitWord(x.base(), 0, std::move(ds));
}

namespace {

// Common window for truncated arithmetic: [min v0, min window_end).
// Carries only travel upward, so digits below the shared end are exact.
std::pair<int, int> arith_window(const DigitWord& x, const DigitWord& y) {
    int lo = std::min(x.v0(), y.v0());
    int hi = std::min(x.window_end(), y.window_end());
    return {lo, std::max(lo, hi)};
}

}  // namespace

DigitWord add(const DigitWord& x, const DigitWord& y) {
    if (x.base() != y.base()) throw std::invalid_argument("add: mixed bases");
    auto [lo, hi] = arith_window(x, y);
    std::vector<std::uint32_t> ds(static_cast<std::size_t>(hi - lo), 0);
    std::uint32_t carry = 0;
    const std::uint32_t b = static_cast<std::uint32_t>(x.base());
    for (int i = lo; i < hi; ++i) {
        std::uint32_t t = x.digit_at(i) + y.digit_at(i) + carry;
        ds[static_cast<std::size_t>(i - lo)] = t % b;
        carry = t / b;
    }
    return DigitWord(x.base(), lo, std::move(ds));
}

DigitWord negate(const DigitWord& x) {
    std::vector<std::uint32_t> ds(static_cast<std::size_t>(x.size()), 0);
    const std::uint32_t b = static_cast<std::uint32_t>(x.base());
    bool nonzero_seen = false;
    for (int i = x.v0(); i < x.window_end(); ++i) {
        std::uint32_t d = x.digit_at(i);
        std::uint32_t nd;
        if (!nonzero_seen) {
            if (d == 0) {
                nd = 0;
            } else {
                nd = b - d;
                nonzero_seen = true;
            }
        } else {
            nd = b - 1 - d;
        }
        ds[static_cast<std::size_t>(i - x.v0())] = nd;
    }
    return DigitWord(x.base(), x.v0(), std::move(ds));
}

DigitWord sub(const DigitWord& x, const DigitWord& y) {
    if (x.base() != y.base()) throw std::invalid_argument("sub: mixed bases");
    auto [lo, hi] = arith_window(x, y);
    std::vector<std::uint32_t> ds(static_cast<std::size_t>(hi - lo), 0);
    const std::int64_t b = x.base();
    std::int64_t borrow = 0;
    for (int i = lo; i < hi; ++i) {
        std::int64_t t = static_cast<std::int64_t>(x.digit_at(i)) -
                         static_cast<std::int64_t>(y.digit_at(i)) - borrow;
        if (t < 0) {
            t += b;
            borrow = 1;
        } else {
            borrow = 0;
        }
        ds[static_cast<std::size_t>(i - lo)] = static_cast<std::uint32_t>(t);
    }
    return DigitWord(x.base(), lo, std::move(ds));
}

bool Ball::contains(const DigitWord& x) const {
    if (x.base() != center.base()) return false;
    int lo = std::min(x.v0(), center.v0());
    for (int i = lo; i < level; ++i)
        if (x.digit_at(i) != center.digit_at(i)) return false;
    return true;
}

Ball unit_ball(int base) { return Ball(DigitWord::zero(base, 0, 0), 0); }

Ball lambda_ball(int base, int N) { return Ball(DigitWord::zero(base, -N, 0), -N); }

Rational haar_volume(const Ball& b) { return pow_rational(b.center.base(), -b.level); }

Rational haar_volume(const Region& r) {
    Rational v = 0;
    for (const auto& b : r) v += haar_volume(b);
    return v;
}

void enumerate_prefixes(const Region& region, int depth,
                        const std::function<void(const Ball&, const Rational&)>& visit) {
    if (depth < 0) throw std::invalid_argument("enumerate_prefixes: negative depth");
    for (const auto& ball : region) {
        const int base = ball.center.base();
        const int lo = std::min(ball.center.v0(), ball.level);
        const int end = ball.level + depth;
        const Rational w = pow_rational(base, -end);
        std::vector<std::uint32_t> ds(static_cast<std::size_t>(end - lo), 0);
        for (int i = lo; i < ball.level; ++i)
            ds[static_cast<std::size_t>(i - lo)] = ball.center.digit_at(i);

        // Odometer over the digits at indices [level, end).
        const int nfree = depth;
        std::vector<std::uint32_t> free(static_cast<std::size_t>(nfree), 0);
        while (true) {
            for (int i = 0; i < nfree; ++i)
                ds[static_cast<std::size_t>(ball.level - lo + i)] = free[static_cast<std::size_t>(i)];
            visit(Ball(DigitWord(base, lo, ds), end), w);
            int pos = 0;
            while (pos < nfree &&
                   ++free[static_cast<std::size_t>(pos)] == static_cast<std::uint32_t>(base)) {
                free[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == nfree) break;
        }
    }
}

}  // namespace padiclab
