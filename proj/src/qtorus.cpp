#include "sl3qt/qtorus.hpp"

#include <sstream>

namespace sl3qt {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const OmegaPoly& c) {
    LaurentPoly p(nvars);
    p.add_term(Exps(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exps& e, const OmegaPoly& c) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Exps& e, const OmegaPoly& c) {
    if (e.size() != n_) throw std::logic_error("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (n_ == 0 && t_.empty()) n_ = o.n_;
    for (auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (n_ == 0 && t_.empty()) n_ = o.n_;
    for (auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::scaled(const OmegaPoly& c) const {
    LaurentPoly r(n_);
    for (auto& [e, k] : t_) r.add_term(e, k * c);
    return r;
}

i64 pairing2(const Seed& s, const Exps& a, const Exps& b) {
    i64 r = 0;
    std::size_t n = s.size();
    for (std::size_t v = 0; v < n; ++v) {
        if (!a[v]) continue;
        i64 row = 0;
        for (std::size_t w = 0; w < n; ++w)
            if (b[w]) row += s.eps2(v, w) * b[w];
        r = checked_add(r, checked_mul(a[v], row));
    }
    return r;
}

ThirdInt commutation_exponent(const Seed& s, std::size_t u, const Exps& a) {
    i64 twice = 0;
    for (std::size_t v = 0; v < s.size(); ++v) twice += s.eps2(u, v) * a[v];
    if (twice % 2 != 0) throw std::domain_error("commutation exponent not in (1/3)Z at node " + s.node(u));
    return {twice / 2};
}

WeylMonomial mono_mul(const Seed& s, const WeylMonomial& x, const WeylMonomial& y) {
    Exps e(x.exps.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = x.exps[i] + y.exps[i];
    return {(x.coeff * y.coeff).shifted(pairing2(s, x.exps, y.exps)), e};
}

LaurentPoly poly_mul(const Seed& s, const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.nvars());
    Exps e(a.nvars());
    for (auto& [ea, ca] : a.terms())
        for (auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, (ca * cb).shifted(pairing2(s, ea, eb)));
        }
    return r;
}

LaurentPoly classical_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.nvars());
    Exps e(a.nvars());
    for (auto& [ea, ca] : a.terms())
        for (auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly poly_pow(const Seed& s, const LaurentPoly& a, int k) {
    if (k < 0) throw std::invalid_argument("poly_pow: negative power");
    LaurentPoly r = LaurentPoly::constant(a.nvars(), OmegaPoly(1));
    for (int i = 0; i < k; ++i) r = poly_mul(s, r, a);
    return r;
}

LaurentPoly star(const LaurentPoly& p) {
    LaurentPoly r(p.nvars());
    for (auto& [e, c] : p.terms()) r.add_term(e, c.star());
    return r;
}

LaurentPoly classicalize(const LaurentPoly& p) {
    LaurentPoly r(p.nvars());
    for (auto& [e, c] : p.terms()) r.add_term(e, OmegaPoly(c.eval_at_one()));
    return r;
}

LaurentPoly weyl_quantize(const LaurentPoly& classical) {
    for (auto& [e, c] : classical.terms())
        if (c.terms().size() != 1 || c.terms().begin()->first != 0)
            throw std::invalid_argument("weyl_quantize expects integer coefficients");
    return classical;
}

bool is_multiplicity_free(const LaurentPoly& p) {
    for (auto& [e, c] : p.terms())
        if (!c.is_signed_unit_monomial()) return false;
    return true;
}

std::optional<WeylMonomial> highest_term(const LaurentPoly& p) {
    for (auto& [e, c] : p.terms()) {
        bool dominates = true;
        for (auto& [f, d] : p.terms()) {
            for (std::size_t i = 0; i < e.size() && dominates; ++i)
                if (f[i] > e[i]) dominates = false;
            if (!dominates) break;
        }
        if (dominates) return WeylMonomial{c, e};
    }
    return std::nullopt;
}

LaurentPoly x_hat(std::size_t nvars, std::size_t u, int power) {
    Exps e(nvars, 0);
    e[u] = 3 * power;
    return LaurentPoly::monomial(e);
}

LaurentPoly binomial(std::size_t nvars, std::size_t u, const OmegaPoly& c) {
    LaurentPoly r = LaurentPoly::constant(nvars, OmegaPoly(1));
    Exps e(nvars, 0);
    e[u] = 3;
    r.add_term(e, c);
    return r;
}

LaurentPoly reindex(const LaurentPoly& p, const Seed& from, const Seed& to) {
    std::vector<std::size_t> map(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) map[i] = to.index(from.node(i));
    LaurentPoly r(to.size());
    for (auto& [e, c] : p.terms()) {
        Exps f(to.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[map[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

std::string render_exps(const Seed& s, const Exps& e, RenderStyle style) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!out.empty()) out += " ";
        if (style == RenderStyle::canonical)
            out += "X" + s.node(i) + "^{" + fraction_string(e[i], 3) + "}";
        else
            out += "\\hat{X}_{" + s.node(i) + "}^{" + fraction_string(e[i], 3) + "}";
    }
    return out;
}

std::string render(const Seed& s, const LaurentPoly& p, RenderStyle style) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [e, c] : p.terms()) {
        std::string x = render_exps(s, e, style);
        for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
            i64 k = it->second;
            std::string term = k < 0 ? "-" : "+";
            if (k != 1 && k != -1) term += std::to_string(k < 0 ? -k : k);
            if (style == RenderStyle::canonical) {
                term += "w^{" + fraction_string(it->first, 2) + "}";
                if (!x.empty()) term += " " + x;
            } else {
                term += "\\omega^{" + fraction_string(it->first, 2) + "}[" + x + "]_{Weyl}";
            }
            if (!out.empty()) out += " ";
            out += term;
        }
    }
    return out;
}

}  // namespace sl3qt
