#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <vector>

namespace hookspecht {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(long n, long k);

/// nu_p(n) = max{ i : p^i divides n }, for n >= 1.
int padic_valuation(long p, long n);

/// ell_p(n) = min{ i : p^i > n }, extended by ell_p(0) = -infinity.
/// The -infinity value is a tagged state, not a sentinel integer.
struct BasePLength {
    bool neg_infinity = false;
    int value = 0;

    static BasePLength minus_infinity() { return {true, 0}; }
    static BasePLength of(int v) { return {false, v}; }

    friend bool operator==(const BasePLength& a, const BasePLength& b) {
        return a.neg_infinity == b.neg_infinity &&
               (a.neg_infinity || a.value == b.value);
    }
    friend bool operator<(const BasePLength& a, const BasePLength& b) {
        if (a.neg_infinity) return !b.neg_infinity;
        if (b.neg_infinity) return false;
        return a.value < b.value;
    }
    friend bool operator<=(const BasePLength& a, const BasePLength& b) {
        return a < b || a == b;
    }
};

BasePLength base_p_length(long p, long n);

/// Compares an ordinary integer against ell_p(n); -infinity sits below every
/// integer, so nu >= ell_p(0) always holds.
inline bool at_least(int nu, const BasePLength& ell) {
    return ell.neg_infinity || nu >= ell.value;
}

/// Gc(a) = gcd{ C(a_i, k) : 1 <= k <= a_{i+1}-1, 1 <= i <= N-1 }, with
/// gcd of the empty set = 0. Requires a weakly decreasing, entries >= 1.
BigInt garnir_content(const std::vector<long>& a);

/// Valuation criterion: p | Gc(a) iff nu_p(a_i) >= ell_p(a_{i+1}-1) for all i.
/// Agrees with direct divisibility of garnir_content (0 divisible by every p).
bool p_divides_garnir_content(long p, const std::vector<long>& a);

} // namespace hookspecht
