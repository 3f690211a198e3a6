#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "nilq/rng.hpp"

namespace nilq {

/// Exact coefficient fields. A field object carries whatever runtime data
/// the arithmetic needs (the modulus for prime fields, nothing for Q) and
/// is stored alongside every matrix, so elements themselves stay plain.
template <class F>
concept ExactField = requires(const F f, typename F::Elem a, typename F::Elem b, long long n,
                              const std::string& s, Rng& rng) {
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.one() } -> std::same_as<typename F::Elem>;
    { f.from_int(n) } -> std::same_as<typename F::Elem>;
    { f.add(a, b) } -> std::same_as<typename F::Elem>;
    { f.sub(a, b) } -> std::same_as<typename F::Elem>;
    { f.mul(a, b) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.eq(a, b) } -> std::convertible_to<bool>;
    { f.str(a) } -> std::same_as<std::string>;
    { f.parse(s) } -> std::same_as<typename F::Elem>;
    { f.random(rng) } -> std::same_as<typename F::Elem>;
    { f.name() } -> std::same_as<std::string>;
};

/// The rational numbers, backed by GMP. Always canonicalized.
class Rationals {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long n) const {
        Elem e;
        e = static_cast<signed long>(n);
        return e;
    }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero in Q");
        return Elem(1) / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.get_str(); }
    Elem parse(const std::string& s) const {
        Elem e(s);  // throws std::invalid_argument on malformed input
        e.canonicalize();
        if (e.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        return e;
    }
    /// Integer entries from a range as wide as the default prime modulus;
    /// genericity over Q needs nothing more.
    Elem random(Rng& rng) const { return from_int(static_cast<long long>(rng.below(1000003))); }
    std::string name() const { return "Q"; }

    bool operator==(const Rationals&) const { return true; }
};

/// The prime field F_p for a runtime prime p < 2^31 (products then fit in
/// 64 bits). Elements are residues in [0, p).
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ULL << 31) || !is_prime(p))
            throw std::invalid_argument("PrimeField: modulus must be a prime < 2^31");
    }

    std::uint64_t p() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return p_ == 1 ? 0 : 1; }
    Elem from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero in F_p");
        // extended Euclid on (a, p)
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a);
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += static_cast<long long>(p_);
        return static_cast<Elem>(t);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string str(Elem a) const { return std::to_string(a); }
    Elem parse(const std::string& s) const {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            Elem num = parse(s.substr(0, slash));
            Elem den = parse(s.substr(slash + 1));
            return mul(num, inv(den));
        }
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad field element: " + s);
        return from_int(v);
    }
    Elem random(Rng& rng) const { return rng.below(p_); }
    std::string name() const { return "F_" + std::to_string(p_); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    static bool is_prime(std::uint64_t n) {
        if (n < 4) return n >= 2;
        if (n % 2 == 0) return false;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    std::uint64_t p_;
};

/// Default sampling modulus: large enough that random draws are generic
/// for every rank condition this library tests at desk scale.
inline constexpr std::uint64_t kDefaultPrime = 1000003;

static_assert(ExactField<Rationals>);
static_assert(ExactField<PrimeField>);

}  // namespace nilq
