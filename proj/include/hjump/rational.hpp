#ifndef HJUMP_RATIONAL_HPP
#define HJUMP_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hjump {

// Exact nonnegative rational used for densities and edge counts. Values at
// this scale are tiny (|E| over a binomial coefficient), so 64-bit components
// with an overflow guard are enough.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ <= (__int128)b.num_ * a.den_;
    }

private:
    long long num_;
    long long den_;
};

// Exact C(n, k); throws if the value does not fit in long long.
inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > (__int128)0x7fffffffffffffffLL)
            throw std::overflow_error("binomial(" + std::to_string(n) + "," +
                                      std::to_string(k) + ") overflows");
    }
    return static_cast<long long>(acc);
}

}  // namespace hjump

#endif
