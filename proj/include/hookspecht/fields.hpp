#pragma once

#include "hookspecht/arith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hookspecht {

/// Exact coefficient fields. Elements are plain values; all arithmetic goes
/// through the field object so a prime field can carry its modulus at runtime.
template <typename F>
concept CoefficientField = requires(const F f, const typename F::Elem& a,
                                    const typename F::Elem& b, const BigInt& n) {
    { f.characteristic() } -> std::convertible_to<long>;
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.one() } -> std::same_as<typename F::Elem>;
    { f.from_integer(n) } -> std::same_as<typename F::Elem>;
    { f.add(a, b) } -> std::same_as<typename F::Elem>;
    { f.sub(a, b) } -> std::same_as<typename F::Elem>;
    { f.mul(a, b) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.eq(a, b) } -> std::same_as<bool>;
    { f.to_string(a) } -> std::same_as<std::string>;
};

class Rationals {
public:
    using Elem = boost::multiprecision::cpp_rational;

    long characteristic() const { return 0; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_integer(const BigInt& n) const { return Elem(n); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string to_string(const Elem& a) const { return a.str(); }
};

class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(long p) : p_(p) {
        if (p < 2) throw std::invalid_argument("field characteristic must be prime");
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) throw std::invalid_argument("field characteristic must be prime");
    }

    long characteristic() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_integer(const BigInt& n) const {
        BigInt r = n % p_;
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return (p_ - a) % p_; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // Fermat; p is prime and small.
        Elem out = 1, base = a % p_;
        long exp = p_ - 2;
        while (exp > 0) {
            if (exp & 1) out = mul(out, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return out;
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string to_string(Elem a) const { return std::to_string(a); }

private:
    std::uint64_t p_;
};

static_assert(CoefficientField<Rationals>);
static_assert(CoefficientField<PrimeField>);

} // namespace hookspecht
