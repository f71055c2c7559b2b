#pragma once
// Exact coefficient arithmetic: Laurent polynomials in omega^{1/2} over Z.
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace sl3qt {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}
inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

// value = twice / 2
struct HalfInt {
    i64 twice = 0;
    static HalfInt from_int(i64 v) { return {2 * v}; }
    bool is_integer() const { return twice % 2 == 0; }
    friend bool operator==(HalfInt, HalfInt) = default;
    friend auto operator<=>(HalfInt, HalfInt) = default;
};

// value = thrice / 3
struct ThirdInt {
    i64 thrice = 0;
    static ThirdInt from_int(i64 v) { return {3 * v}; }
    bool is_integer() const { return thrice % 3 == 0; }
    friend bool operator==(ThirdInt, ThirdInt) = default;
    friend auto operator<=>(ThirdInt, ThirdInt) = default;
};

// Reduced fraction num/den as "p/q" or "p".
std::string fraction_string(i64 num, i64 den);
std::string to_string(HalfInt h);
std::string to_string(ThirdInt t);
// Parses "p/q" (q in {1,2}) or an integer into HalfInt; throws std::invalid_argument.
HalfInt parse_half(const std::string& s);

// Element of Z[omega^{1/2}, omega^{-1/2}].  Keys are doubled omega-exponents.
class OmegaPoly {
public:
    OmegaPoly() = default;
    OmegaPoly(i64 c) { if (c) t_[0] = c; }
    static OmegaPoly omega_half(i64 twice_exp, i64 c = 1);  // c * omega^{twice_exp/2}
    static OmegaPoly q_power(i64 k, i64 c = 1) { return omega_half(18 * k, c); }

    const std::map<i64, i64>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    // single term c*omega^m
    bool is_monomial() const { return t_.size() == 1; }
    bool is_signed_unit_monomial() const;
    i64 eval_at_one() const;
    OmegaPoly star() const;
    // multiply by omega^{twice/2}
    OmegaPoly shifted(i64 twice) const;
    // Exact division; returns false if this is not divisible by d.
    bool divide_exact(const OmegaPoly& d, OmegaPoly& quotient) const;

    OmegaPoly& operator+=(const OmegaPoly& o);
    OmegaPoly& operator-=(const OmegaPoly& o);
    friend OmegaPoly operator+(OmegaPoly a, const OmegaPoly& b) { return a += b; }
    friend OmegaPoly operator-(OmegaPoly a, const OmegaPoly& b) { return a -= b; }
    friend OmegaPoly operator-(const OmegaPoly& a) { return OmegaPoly() - a; }
    friend OmegaPoly operator*(const OmegaPoly& a, const OmegaPoly& b);
    friend bool operator==(const OmegaPoly&, const OmegaPoly&) = default;
    friend bool operator<(const OmegaPoly& a, const OmegaPoly& b) { return a.t_ < b.t_; }

    // "w^{7/2}" style, terms in decreasing exponent; "0" for zero.
    std::string render() const;

private:
    std::map<i64, i64> t_;
};

OmegaPoly ring_add(const OmegaPoly& a, const OmegaPoly& b);
OmegaPoly ring_mul(const OmegaPoly& a, const OmegaPoly& b);
// [n]_q = sum_{j=0}^{n-1} q^{n-1-2j}
OmegaPoly quantum_integer(int n);
OmegaPoly coeff_star(const OmegaPoly& a);

}  // namespace sl3qt
