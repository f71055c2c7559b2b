#include "sl3qt/coeff.hpp"

#include <numeric>

namespace sl3qt {

std::string fraction_string(i64 num, i64 den) {
    if (den < 0) { num = -num; den = -den; }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    num /= g; den /= g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string to_string(HalfInt h) { return fraction_string(h.twice, 2); }
std::string to_string(ThirdInt t) { return fraction_string(t.thrice, 3); }

HalfInt parse_half(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return HalfInt::from_int(std::stoll(s));
        i64 p = std::stoll(s.substr(0, slash));
        i64 q = std::stoll(s.substr(slash + 1));
        if (q == 1) return HalfInt::from_int(p);
        if (q == 2) return HalfInt{p};
    } catch (const std::logic_error&) {
    }
    throw std::invalid_argument("not a half-integer: '" + s + "'");
}

OmegaPoly OmegaPoly::omega_half(i64 twice_exp, i64 c) {
    OmegaPoly p;
    if (c) p.t_[twice_exp] = c;
    return p;
}

bool OmegaPoly::is_signed_unit_monomial() const {
    return t_.size() == 1 && (t_.begin()->second == 1 || t_.begin()->second == -1);
}

i64 OmegaPoly::eval_at_one() const {
    i64 s = 0;
    for (auto& [e, c] : t_) s = checked_add(s, c);
    return s;
}

OmegaPoly OmegaPoly::star() const {
    OmegaPoly r;
    for (auto& [e, c] : t_) r.t_[-e] = c;
    return r;
}

OmegaPoly OmegaPoly::shifted(i64 twice) const {
    if (twice == 0) return *this;
    OmegaPoly r;
    for (auto& [e, c] : t_) r.t_[e + twice] = c;
    return r;
}

OmegaPoly& OmegaPoly::operator+=(const OmegaPoly& o) {
    for (auto& [e, c] : o.t_) {
        i64 v = checked_add(t_[e], c);
        if (v == 0) t_.erase(e); else t_[e] = v;
    }
    return *this;
}

OmegaPoly& OmegaPoly::operator-=(const OmegaPoly& o) {
    for (auto& [e, c] : o.t_) {
        i64 v = checked_add(t_[e], -c);
        if (v == 0) t_.erase(e); else t_[e] = v;
    }
    return *this;
}

OmegaPoly operator*(const OmegaPoly& a, const OmegaPoly& b) {
    OmegaPoly r;
    for (auto& [ea, ca] : a.t_)
        for (auto& [eb, cb] : b.t_) {
            i64 v = checked_add(r.t_[ea + eb], checked_mul(ca, cb));
            if (v == 0) r.t_.erase(ea + eb); else r.t_[ea + eb] = v;
        }
    return r;
}

bool OmegaPoly::divide_exact(const OmegaPoly& d, OmegaPoly& quotient) const {
    if (d.is_zero()) throw std::domain_error("division by zero OmegaPoly");
    quotient = OmegaPoly();
    OmegaPoly rem = *this;
    auto [dtop, dc] = *d.t_.rbegin();
    i64 dlow = d.t_.begin()->first;
    i64 low = t_.empty() ? 0 : t_.begin()->first;
    while (!rem.is_zero()) {
        auto [rtop, rc] = *rem.t_.rbegin();
        // the quotient cannot reach below low - dlow
        if (rtop - dtop < low - dlow) return false;
        if (rc % dc != 0) return false;
        OmegaPoly m = omega_half(rtop - dtop, rc / dc);
        quotient += m;
        rem -= m * d;
    }
    return true;
}

std::string OmegaPoly::render() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        i64 c = it->second;
        if (c < 0) s += first ? "-" : " - ";
        else if (!first) s += " + ";
        i64 a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a);
        s += "w^{" + fraction_string(it->first, 2) + "}";
        first = false;
    }
    return s;
}

OmegaPoly ring_add(const OmegaPoly& a, const OmegaPoly& b) { return a + b; }
OmegaPoly ring_mul(const OmegaPoly& a, const OmegaPoly& b) { return a * b; }

OmegaPoly quantum_integer(int n) {
    if (n < 0) throw std::invalid_argument("quantum_integer requires n >= 0");
    OmegaPoly r;
    for (int j = 0; j < n; ++j) r += OmegaPoly::q_power(n - 1 - 2 * j);
    return r;
}

OmegaPoly coeff_star(const OmegaPoly& a) { return a.star(); }

}  // namespace sl3qt
