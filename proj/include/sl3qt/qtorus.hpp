#pragma once
// The cube-root quantum torus over a seed.  Exponents are stored in integer
// Z-hat units (X-hat = Z-hat^3); Weyl-ordered monomials carry no hidden phase.
#include <optional>
#include <string>
#include <vector>

#include "sl3qt/coeff.hpp"
#include "sl3qt/quiver.hpp"

namespace sl3qt {

using Exps = std::vector<i64>;  // indexed by the seed's canonical node order

struct WeylMonomial {
    OmegaPoly coeff;  // +-omega^m
    Exps exps;
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : n_(nvars) {}
    static LaurentPoly constant(std::size_t nvars, const OmegaPoly& c);
    static LaurentPoly monomial(const Exps& e, const OmegaPoly& c = OmegaPoly(1));

    std::size_t nvars() const { return n_; }
    const std::map<Exps, OmegaPoly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    void add_term(const Exps& e, const OmegaPoly& c);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly scaled(const OmegaPoly& c) const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::size_t n_ = 0;
    std::map<Exps, OmegaPoly> t_;
};

// <a,b> = sum eps_vw a_v b_w, returned doubled (omega^{result/2}).
i64 pairing2(const Seed& s, const Exps& a, const Exps& b);
// alpha = sum_v eps_uv a_v in X-hat units; throws if not in (1/3)Z.
ThirdInt commutation_exponent(const Seed& s, std::size_t u, const Exps& a);

WeylMonomial mono_mul(const Seed& s, const WeylMonomial& x, const WeylMonomial& y);
LaurentPoly poly_mul(const Seed& s, const LaurentPoly& a, const LaurentPoly& b);
// Commutative (omega = 1) product.
LaurentPoly classical_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_pow(const Seed& s, const LaurentPoly& a, int k);

LaurentPoly star(const LaurentPoly& p);
LaurentPoly classicalize(const LaurentPoly& p);
LaurentPoly weyl_quantize(const LaurentPoly& classical);
bool is_multiplicity_free(const LaurentPoly& p);
std::optional<WeylMonomial> highest_term(const LaurentPoly& p);

// X-hat_u = [Z_u^3] and its powers
LaurentPoly x_hat(std::size_t nvars, std::size_t u, int power = 1);
// 1 + c X-hat_u
LaurentPoly binomial(std::size_t nvars, std::size_t u, const OmegaPoly& c);

// Re-indexes exponent vectors between seeds sharing node names.
LaurentPoly reindex(const LaurentPoly& p, const Seed& from, const Seed& to);

enum class RenderStyle { canonical, latex_like };
std::string render(const Seed& s, const LaurentPoly& p, RenderStyle style = RenderStyle::canonical);
std::string render_exps(const Seed& s, const Exps& e, RenderStyle style = RenderStyle::canonical);

}  // namespace sl3qt
