#pragma once
// Balancedness conditions on exponent vectors and the exponent transforms of
// the monomial part of the balanced mutation.
#include <random>
#include <string>
#include <vector>

#include "sl3qt/qtorus.hpp"
#include "sl3qt/surface.hpp"

namespace sl3qt {

struct BalanceFailure {
    std::string triangle;
    std::string condition;  // "BE1", "BE2", "BE3"
    std::string where;      // e.g. the arc for BE2
    ThirdInt value;
};

struct BalanceReport {
    bool balanced = true;
    std::vector<BalanceFailure> failures;
    std::string render() const;
};

BalanceReport is_delta_balanced(const Triangulation& T, const Seed& s, const Exps& a);
// every term of p
BalanceReport is_delta_balanced(const Triangulation& T, const Seed& s, const LaurentPoly& p);
// the alternative form of BE3 (a_t + a_{e_a,1} + a_{e_{a+1},2} in Z)
bool be3_alternative_holds(const Triangulation& T, const Seed& s, const Exps& a);

bool is_u_balanced(const Seed& s, std::size_t u, const Exps& a);

// Exponents over mu_u(pre) -> exponents over pre:
//   a_u -> -a_u + sum_w [eps_wu]_+ a_w, other coordinates fixed.
Exps transform_exponents(const Seed& pre, std::size_t u, const Exps& post);

// Basis (mod 3) of Z-hat exponent residues satisfying BE1-BE3.
std::vector<Exps> balanced_residue_basis(const Triangulation& T, const Seed& s);
// Random balanced exponent vector: random residue combination plus 3 * integers in [-range, range].
Exps random_balanced(const Triangulation& T, const Seed& s, std::mt19937_64& rng, int range = 2);

}  // namespace sl3qt
