#include "hookspecht/arith.hpp"

#include <stdexcept>

namespace hookspecht {

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (long i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

int padic_valuation(long p, long n) {
    if (p < 2) throw std::invalid_argument("padic_valuation: p must be prime");
    if (n <= 0) throw std::invalid_argument("padic_valuation: n must be positive");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

BasePLength base_p_length(long p, long n) {
    if (p < 2) throw std::invalid_argument("base_p_length: p must be prime");
    if (n < 0) throw std::invalid_argument("base_p_length: n must be non-negative");
    if (n == 0) return BasePLength::minus_infinity();
    int i = 0;
    long power = 1;
    while (power <= n) {
        power *= p;
        ++i;
    }
    return BasePLength::of(i);
}

static void check_weakly_decreasing(const std::vector<long>& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1)
            throw std::invalid_argument("garnir content: entries must be >= 1");
        if (i > 0 && a[i] > a[i - 1])
            throw std::invalid_argument("garnir content: sequence must be weakly decreasing");
    }
}

BigInt garnir_content(const std::vector<long>& a) {
    check_weakly_decreasing(a);
    BigInt g = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (long k = 1; k <= a[i + 1] - 1; ++k)
            g = boost::multiprecision::gcd(g, binomial(a[i], k));
    return g;
}

bool p_divides_garnir_content(long p, const std::vector<long>& a) {
    check_weakly_decreasing(a);
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (!at_least(padic_valuation(p, a[i]), base_p_length(p, a[i + 1] - 1)))
            return false;
    return true;
}

} // namespace hookspecht
