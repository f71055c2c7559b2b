#include "sl3qt/mutation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sl3qt {

HalfInt BinomialFactor::qexp() const {
    if (omega2 % 9 != 0) throw std::domain_error("binomial factor coefficient is not a half-integral q-power");
    return {omega2 / 9};
}

QuantumRational QuantumRational::from_laurent(const LaurentPoly& p) {
    QuantumRational r;
    r.nvars = p.nvars();
    if (!p.is_zero()) r.terms.push_back({p, {}});
    return r;
}

std::pair<std::vector<BinomialFactor>, std::vector<BinomialFactor>> fq_factors(std::size_t u, i64 alpha) {
    std::vector<BinomialFactor> pos, neg;
    for (i64 r = 1; r <= (alpha < 0 ? -alpha : alpha); ++r) {
        if (alpha > 0) pos.push_back({u, 18 * (2 * r - 1)});
        else neg.push_back({u, -18 * (2 * r - 1)});
    }
    return {pos, neg};
}

LaurentPoly factor_poly(std::size_t nvars, const BinomialFactor& f) {
    return binomial(nvars, f.node, OmegaPoly::omega_half(f.omega2));
}

LaurentPoly nu_prime(const Seed& pre, std::size_t u, const LaurentPoly& post) {
    LaurentPoly r(post.nvars());
    for (auto& [e, c] : post.terms()) r.add_term(transform_exponents(pre, u, e), c);
    return r;
}

static i64 integral_alpha(const Seed& pre, std::size_t u, const Exps& e) {
    ThirdInt a = commutation_exponent(pre, u, e);
    if (!a.is_integer())
        throw std::domain_error("monomial is not balanced at node " + pre.node(u) + " (alpha = " + to_string(a) + ")");
    return a.thrice / 3;
}

QuantumRational nu_sharp(const Seed& pre, std::size_t u, const LaurentPoly& p) {
    QuantumRational r;
    r.nvars = p.nvars();
    std::size_t n = p.nvars();
    for (auto& [e, c] : p.terms()) {
        i64 alpha = integral_alpha(pre, u, e);
        auto [pos, neg] = fq_factors(u, alpha);
        LaurentPoly num = LaurentPoly::monomial(e, c);
        for (auto& f : pos) num = poly_mul(pre, num, factor_poly(n, f));
        r.terms.push_back({num, neg});
    }
    return r;
}

QuantumRational nu_omega(const Seed& pre, std::size_t u, const LaurentPoly& post) {
    return nu_sharp(pre, u, nu_prime(pre, u, post));
}

QuantumRational nu_omega(const Seed& pre, std::size_t u, const QuantumRational& post) {
    QuantumRational r;
    r.nvars = post.nvars;
    std::size_t n = post.nvars;
    for (auto& term : post.terms) {
        LaurentPoly shift = LaurentPoly::constant(n, OmegaPoly(1));
        std::vector<BinomialFactor> extra;
        for (auto& f : term.denom) {
            if (f.node == u) {
                // (1 + c X_u^{-1})^{-1} = c^{-1} X_u (1 + c^{-1} X_u)^{-1}
                shift = poly_mul(pre, shift, x_hat(n, u).scaled(OmegaPoly::omega_half(-f.omega2)));
                extra.push_back({u, -f.omega2});
            } else if (pre.eps2(u, f.node) == 0) {
                extra.push_back(f);
            } else {
                throw NormalizationIncomplete("cannot transport denominator in X" + pre.node(f.node) +
                                              " through the mutation at " + pre.node(u));
            }
        }
        QuantumRational img = nu_omega(pre, u, term.numerator);
        for (auto& t : img.terms) {
            RationalTerm nt{poly_mul(pre, t.numerator, shift), t.denom};
            nt.denom.insert(nt.denom.end(), extra.begin(), extra.end());
            r.terms.push_back(std::move(nt));
        }
    }
    return r;
}

std::optional<LaurentPoly> right_divide(const Seed& s, const LaurentPoly& N, const LaurentPoly& D) {
    if (D.is_zero()) throw std::domain_error("right_divide by zero");
    std::size_t n = D.nvars();
    if (N.is_zero()) return LaurentPoly(n);
    Exps lo(n), hi(n);
    auto bounds = [n](const LaurentPoly& p, Exps& mn, Exps& mx) {
        mn = p.terms().begin()->first;
        mx = mn;
        for (auto& [e, c] : p.terms())
            for (std::size_t i = 0; i < n; ++i) {
                mn[i] = std::min(mn[i], e[i]);
                mx[i] = std::max(mx[i], e[i]);
            }
    };
    Exps nmin, nmax, dmin, dmax;
    bounds(N, nmin, nmax);
    bounds(D, dmin, dmax);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = nmin[i] - dmin[i];
        hi[i] = nmax[i] - dmax[i];
        if (lo[i] > hi[i]) return std::nullopt;
    }
    const auto& [dl, dc] = *D.terms().rbegin();
    LaurentPoly R = N, Q(n);
    Exps delta(n);
    while (!R.is_zero()) {
        const auto& [rl, rc] = *R.terms().rbegin();
        for (std::size_t i = 0; i < n; ++i) {
            delta[i] = rl[i] - dl[i];
            if (delta[i] < lo[i] || delta[i] > hi[i]) return std::nullopt;
        }
        OmegaPoly target = rc.shifted(-pairing2(s, delta, dl)), q;
        if (!target.divide_exact(dc, q)) return std::nullopt;
        LaurentPoly m = LaurentPoly::monomial(delta, q);
        Q += m;
        R -= poly_mul(s, m, D);
    }
    return Q;
}

static bool commuting(const Seed& s, const BinomialFactor& a, const BinomialFactor& b) {
    return a.node == b.node || s.eps2(a.node, b.node) == 0;
}

QuantumRational normalize(const Seed& s, const QuantumRational& r) {
    std::size_t n = r.nvars;
    // common denominator: per factor, the maximal multiplicity over terms
    std::map<BinomialFactor, int> common;
    for (auto& t : r.terms) {
        std::map<BinomialFactor, int> m;
        for (auto& f : t.denom) ++m[f];
        for (auto& [f, k] : m) common[f] = std::max(common[f], k);
    }
    for (auto& [f, k] : common)
        for (auto& [g, l] : common)
            if (!commuting(s, f, g))
                throw NormalizationIncomplete("denominators in X" + s.node(f.node) + " and X" + s.node(g.node) +
                                              " do not commute");
    LaurentPoly S(n);
    for (auto& t : r.terms) {
        std::map<BinomialFactor, int> m;
        for (auto& f : t.denom) ++m[f];
        LaurentPoly num = t.numerator;
        for (auto& [f, k] : common)
            for (int i = m[f]; i < k; ++i) num = poly_mul(s, num, factor_poly(n, f));
        S += num;
    }
    std::vector<BinomialFactor> rem;
    for (auto& [f, k] : common)
        for (int i = 0; i < k; ++i) rem.push_back(f);
    bool progress = true;
    while (progress && !rem.empty() && !S.is_zero()) {
        progress = false;
        for (std::size_t i = 0; i < rem.size(); ++i) {
            if (auto q = right_divide(s, S, factor_poly(n, rem[i]))) {
                S = *q;
                rem.erase(rem.begin() + static_cast<long>(i));
                progress = true;
                break;
            }
        }
    }
    QuantumRational out;
    out.nvars = n;
    if (!S.is_zero()) out.terms.push_back({S, S.is_zero() ? std::vector<BinomialFactor>{} : rem});
    return out;
}

std::optional<LaurentPoly> is_laurent(const QuantumRational& r) {
    LaurentPoly s(r.nvars);
    for (auto& t : r.terms) {
        if (!t.denom.empty()) return std::nullopt;
        s += t.numerator;
    }
    return s;
}

std::string render(const Seed& s, const QuantumRational& r) {
    if (r.terms.empty()) return "0";
    std::string out;
    for (auto& t : r.terms) {
        if (!out.empty()) out += " + ";
        out += "(" + render(s, t.numerator) + ")";
        for (auto& f : t.denom)
            out += " (1 + " + OmegaPoly::omega_half(f.omega2).render() + " X" + s.node(f.node) + "^{1})^{-1}";
    }
    return out;
}

// ---- general right fractions ----

RightFraction RightFraction::from_laurent(const LaurentPoly& p) {
    return {p, LaurentPoly::constant(p.nvars(), OmegaPoly(1))};
}

bool RightFraction::is_laurent() const {
    return den.size() == 1 && den.terms().begin()->second == OmegaPoly(1) &&
           std::all_of(den.terms().begin()->first.begin(), den.terms().begin()->first.end(),
                       [](i64 x) { return x == 0; });
}

namespace {

Seed commutative_copy(const Seed& s) {
    std::vector<bool> fr;
    for (std::size_t i = 0; i < s.size(); ++i) fr.push_back(s.frozen(i));
    return Seed(s.nodes(), fr);
}

// nu over pre on a polynomial, as N1 * (f_1 ... f_m)^{-1}
std::pair<LaurentPoly, i64> sharp_with_count(const Seed& pre, const Seed& prod, std::size_t u,
                                              const LaurentPoly& post, bool classical,
                                              const std::function<LaurentPoly(i64)>& f) {
    LaurentPoly P = nu_prime(pre, u, post);
    std::size_t n = P.nvars();
    i64 m = 0;
    std::vector<std::pair<std::pair<Exps, OmegaPoly>, i64>> items;
    for (auto& [e, c] : P.terms()) {
        i64 a = integral_alpha(pre, u, e);
        m = std::max(m, -a);
        items.push_back({{e, c}, a});
    }
    LaurentPoly N(n);
    for (auto& [ec, a] : items) {
        LaurentPoly t = LaurentPoly::monomial(ec.first, ec.second);
        if (a > 0) {
            for (i64 r = 1; r <= a; ++r)
                t = poly_mul(prod, t, classical ? binomial(n, u, OmegaPoly(1)) : binomial(n, u, OmegaPoly::q_power(2 * r - 1)));
        }
        for (i64 r = std::max<i64>(0, -a) + 1; r <= m; ++r) t = poly_mul(prod, t, f(r));
        N += t;
    }
    return {N, m};
}

RightFraction nu_fraction(const Seed& pre, std::size_t u, const RightFraction& post, bool classical) {
    Seed prod = classical ? commutative_copy(pre) : pre;
    std::size_t n = post.num.nvars();
    auto f = [&](i64 r) {
        return classical ? binomial(n, u, OmegaPoly(1)) : binomial(n, u, OmegaPoly::q_power(-(2 * r - 1)));
    };
    auto [N1, m1] = sharp_with_count(pre, prod, u, post.num, classical, f);
    auto [D1, m2] = sharp_with_count(pre, prod, u, post.den, classical, f);
    LaurentPoly E = LaurentPoly::constant(n, OmegaPoly(1));
    for (i64 r = std::min(m1, m2) + 1; r <= std::max(m1, m2); ++r) E = poly_mul(prod, E, f(r));
    RightFraction out = m1 >= m2 ? RightFraction{N1, poly_mul(prod, D1, E)} : RightFraction{poly_mul(prod, N1, E), D1};
    return simplify(prod, out);
}

}  // namespace

RightFraction simplify(const Seed& s, const RightFraction& f) {
    std::size_t n = f.num.nvars();
    if (f.num.is_zero()) return RightFraction::from_laurent(LaurentPoly(n));
    if (f.den.size() == 1 && f.den.terms().begin()->second.is_signed_unit_monomial()) {
        auto& [e, c] = *f.den.terms().begin();
        Exps neg(n);
        for (std::size_t i = 0; i < n; ++i) neg[i] = -e[i];
        auto [m, k] = *c.terms().begin();
        OmegaPoly inv = OmegaPoly::omega_half(-m, k);  // k = +-1
        return RightFraction::from_laurent(poly_mul(s, f.num, LaurentPoly::monomial(neg, inv)));
    }
    if (auto q = right_divide(s, f.num, f.den)) return RightFraction::from_laurent(*q);
    return f;
}

RightFraction nu_omega(const Seed& pre, std::size_t u, const RightFraction& post) {
    return nu_fraction(pre, u, post, false);
}

bool fraction_equals(const Seed& s, const RightFraction& a, const LaurentPoly& b) {
    return a.num == poly_mul(s, b, a.den);
}

bool fractions_equal(const Seed& s, const RightFraction& a, const RightFraction& b) {
    if (a.den == b.den) return a.num == b.num;
    if (b.is_laurent()) return fraction_equals(s, a, b.num);
    if (a.is_laurent()) return fraction_equals(s, b, a.num);
    if (poly_mul(s, a.den, b.den) == poly_mul(s, b.den, a.den))
        return poly_mul(s, a.num, b.den) == poly_mul(s, b.num, a.den);
    throw std::logic_error("fractions_equal: undecided (non-commuting denominators)");
}

RightFraction apply_map(const RightFraction& f, const std::function<LaurentPoly(const LaurentPoly&)>& g) {
    return {g(f.num), g(f.den)};
}

QuantumRational mu_q(const Seed& pre, std::size_t k, const LaurentPoly& post) {
    for (auto& [e, c] : post.terms())
        for (auto x : e)
            if (x % 3 != 0) throw std::domain_error("mu_q expects integral X-hat exponents");
    return nu_omega(pre, k, post);
}

// ---- flips ----

FlipSequence make_flip_sequence(const Triangulation& T, const std::string& arc) {
    FlipResult fr = flip(T, arc);
    FlipSequence F{T, fr.flipped, fr.ctx, {}, {}, {}, {}};
    F.eps[0] = build_quiver(T);
    const int order[4] = {2, 3, 6, 11};  // v3, v4, v7, v12
    for (int r = 0; r < 4; ++r) {
        F.at[r] = F.eps[0].index(fr.ctx.v[order[r]]);
        F.eps[r + 1] = mutate_quiver(F.eps[r], F.at[r]);
    }
    F.seed_after = build_quiver(fr.flipped);
    for (auto& [o, nw] : fr.bijection) F.new_to_old[nw] = o;
    if (!(permute_seed(F.seed_after, F.new_to_old) == F.eps[4]))
        throw std::logic_error("flip quiver does not match the mutation sequence");
    return F;
}

LaurentPoly to_sequence_indexing(const FlipSequence& F, const LaurentPoly& p) {
    const Seed& to = F.eps[4];
    std::vector<std::size_t> map(F.seed_after.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = to.index(F.new_to_old.at(F.seed_after.node(i)));
    LaurentPoly r(to.size());
    for (auto& [e, c] : p.terms()) {
        Exps f(to.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[map[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

QuantumRational theta_flip(const FlipSequence& F, const LaurentPoly& p_after) {
    QuantumRational r = QuantumRational::from_laurent(to_sequence_indexing(F, p_after));
    for (int s = 3; s >= 0; --s) {
        r = nu_omega(F.eps[s], F.at[s], r);
        r = normalize(F.eps[s], r);
    }
    return r;
}

RightFraction theta_flip_fraction(const FlipSequence& F, const RightFraction& f_after) {
    RightFraction r = apply_map(f_after, [&](const LaurentPoly& p) { return to_sequence_indexing(F, p); });
    for (int s = 3; s >= 0; --s) r = nu_omega(F.eps[s], F.at[s], r);
    return r;
}

RightFraction theta_flip_classical(const FlipSequence& F, const LaurentPoly& classical_after) {
    RightFraction r = RightFraction::from_laurent(to_sequence_indexing(F, classical_after));
    for (int s = 3; s >= 0; --s) r = nu_fraction(F.eps[s], F.at[s], r, true);
    return r;
}

// ---- consistency relations ----

RelationReport check_relation(const Seed& s, const std::vector<NodeId>& word, const std::map<NodeId, NodeId>& sigma) {
    RelationReport rep;
    std::vector<Seed> g{s};
    for (auto& k : word) g.push_back(mutate_quiver(g.back(), k));
    rep.seeds_ok = permute_seed(s, sigma) == g.back();
    std::map<NodeId, NodeId> inv;
    for (auto& [a, b] : sigma) inv[b] = a;
    rep.images_ok = true;
    std::size_t n = s.size();
    for (std::size_t w = 0; w < n; ++w) {
        RightFraction F = RightFraction::from_laurent(x_hat(n, w));
        for (std::size_t i = word.size(); i-- > 0;) F = nu_omega(g[i], g[i].index(word[i]), F);
        NodeId name = g.back().node(w);
        NodeId src = inv.count(name) ? inv[name] : name;
        LaurentPoly expect = x_hat(n, s.index(src));
        if (!fraction_equals(s, F, expect)) {
            rep.images_ok = false;
            rep.mismatches.push_back("image of X" + name + " is not X" + src);
        }
    }
    return rep;
}

RelationReport check_relation(const Seed& s, const std::string& spec) {
    std::vector<NodeId> word;
    std::map<NodeId, NodeId> sigma;
    auto split = [](std::string x) {
        for (auto& ch : x)
            if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
        std::istringstream is(x);
        std::vector<std::string> out;
        for (std::string w; is >> w;) out.push_back(w);
        return out;
    };
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        auto args = split(spec.substr(colon + 1));
        if (kind == "involution" && args.size() == 1) {
            word = {args[0], args[0]};
        } else if (kind == "square" && args.size() == 2) {
            word = {args[0], args[1], args[0], args[1]};
        } else if (kind == "pentagon" && args.size() == 2) {
            word = {args[0], args[1], args[0], args[1], args[0]};
            sigma = {{args[0], args[1]}, {args[1], args[0]}};
        } else {
            throw InputError("bad relation '" + spec + "'");
        }
    } else {
        std::string body = spec, perm;
        if (auto p = spec.find('('); p != std::string::npos) {
            body = spec.substr(0, p);
            perm = spec.substr(p);
        }
        word = split(body);
        auto cyc = split(perm);
        for (std::size_t i = 0; i < cyc.size(); ++i) sigma[cyc[i]] = cyc[(i + 1) % cyc.size()];
        if (word.empty()) throw InputError("empty relation word");
    }
    for (auto& w : word) s.index(w);
    for (auto& [a, b] : sigma) s.index(a);
    return check_relation(s, word, sigma);
}

}  // namespace sl3qt
