#pragma once
// Independent reference computations used by the tests.
#include <random>
#include <utility>
#include <vector>

#include "sl3qt/quiver.hpp"
#include "sl3qt/qtorus.hpp"

namespace oracle {

using sl3qt::Exps;
using sl3qt::i64;
using sl3qt::Seed;

// doubled omega exponent of sum_{v<w} eps_vw a_v a_w
inline i64 ordered_phase2(const Seed& s, const Exps& a) {
    i64 r = 0;
    for (std::size_t v = 0; v < a.size(); ++v)
        for (std::size_t w = v + 1; w < a.size(); ++w) r += s.eps2(v, w) * a[v] * a[w];
    return r;
}

// Product of two Weyl-ordered monomials by expanding both into single generators,
// bubble-sorting with Z_w Z_v = omega^{2 eps_wv} Z_v Z_w, and Weyl-ordering the result.
// Returns (doubled omega exponent, exponents).
inline std::pair<i64, Exps> normal_order_product(const Seed& s, const Exps& a, const Exps& b) {
    struct Letter {
        std::size_t v;
        int sign;
    };
    std::vector<Letter> word;
    for (const Exps* e : {&a, &b})
        for (std::size_t v = 0; v < e->size(); ++v)
            for (i64 k = 0; k < std::abs((*e)[v]); ++k) word.push_back({v, (*e)[v] > 0 ? 1 : -1});
    i64 ph2 = -ordered_phase2(s, a) - ordered_phase2(s, b);
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = 0; j + 1 < word.size() - i; ++j) {
            Letter x = word[j], y = word[j + 1];
            if (x.v <= y.v) continue;
            ph2 += 2 * s.eps2(x.v, y.v) * x.sign * y.sign;
            std::swap(word[j], word[j + 1]);
        }
    Exps g(a.size(), 0);
    for (auto& l : word) g[l.v] += l.sign;
    ph2 += ordered_phase2(s, g);
    return {ph2, g};
}

// Seed with n nodes and doubled entries uniform in {-2,...,2}.
inline Seed random_seed(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i + 1));
    Seed s(names, std::vector<bool>(n, false));
    std::uniform_int_distribution<int> d(-2, 2);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = v + 1; w < n; ++w) s.set_eps2(v, w, d(rng));
    return s;
}

inline Exps random_exps(std::mt19937_64& rng, std::size_t n, int range = 2) {
    std::uniform_int_distribution<int> d(-range, range);
    Exps e(n);
    for (auto& x : e) x = d(rng);
    return e;
}

}  // namespace oracle
