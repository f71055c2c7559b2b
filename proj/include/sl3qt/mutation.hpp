#pragma once
// Balanced quantum mutations, fractions and the flip coordinate change.
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sl3qt/qtorus.hpp"
#include "sl3qt/balance.hpp"
#include "sl3qt/surface.hpp"

namespace sl3qt {

// (1 + omega^{omega2/2} X-hat_node); q^k corresponds to omega2 = 18k
struct BinomialFactor {
    std::size_t node;
    i64 omega2;
    HalfInt qexp() const;  // throws if not a half-integral q-power
    friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
    friend auto operator<=>(const BinomialFactor&, const BinomialFactor&) = default;
};

struct NormalizationIncomplete : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RationalTerm {
    LaurentPoly numerator;
    std::vector<BinomialFactor> denom;
};

// sum of numerator * (prod denom)^{-1}
struct QuantumRational {
    std::size_t nvars = 0;
    std::vector<RationalTerm> terms;
    static QuantumRational from_laurent(const LaurentPoly& p);
};

std::pair<std::vector<BinomialFactor>, std::vector<BinomialFactor>> fq_factors(std::size_t u, i64 alpha);
LaurentPoly factor_poly(std::size_t nvars, const BinomialFactor& f);

// monomial part: polynomial over mu_u(pre) -> polynomial over pre
LaurentPoly nu_prime(const Seed& pre, std::size_t u, const LaurentPoly& post);
// automorphism part over pre: M -> M F^q(X-hat_u; alpha(M))
QuantumRational nu_sharp(const Seed& pre, std::size_t u, const LaurentPoly& p);
QuantumRational nu_omega(const Seed& pre, std::size_t u, const LaurentPoly& post);
QuantumRational nu_omega(const Seed& pre, std::size_t u, const QuantumRational& post);
QuantumRational normalize(const Seed& s, const QuantumRational& r);
std::optional<LaurentPoly> is_laurent(const QuantumRational& r);
std::string render(const Seed& s, const QuantumRational& r);

// Exact right division: returns Q with N = Q * D, if it exists.
std::optional<LaurentPoly> right_divide(const Seed& s, const LaurentPoly& N, const LaurentPoly& D);

// General right fraction N * D^{-1}.
struct RightFraction {
    LaurentPoly num, den;
    static RightFraction from_laurent(const LaurentPoly& p);
    bool is_laurent() const;
};
RightFraction simplify(const Seed& s, const RightFraction& f);
RightFraction nu_omega(const Seed& pre, std::size_t u, const RightFraction& post);
// Decides N1 D1^{-1} == N2 D2^{-1} when the denominators commute or coincide; throws otherwise.
bool fractions_equal(const Seed& s, const RightFraction& a, const RightFraction& b);
bool fraction_equals(const Seed& s, const RightFraction& a, const LaurentPoly& b);
RightFraction apply_map(const RightFraction& f, const std::function<LaurentPoly(const LaurentPoly&)>& g);

// Quantum X-mutation (restriction to integral X-hat exponents).
QuantumRational mu_q(const Seed& pre, std::size_t k, const LaurentPoly& post);

// The mutation sequence realizing a flip: seeds eps[0] = Q_Delta, eps[r] = mu eps[r-1]
// at v3, v4, v7, v12; eps[4] agrees with Q_Delta' after renaming.
struct FlipSequence {
    Triangulation before, after;
    FlipContext ctx;
    std::array<Seed, 5> eps;
    std::array<std::size_t, 4> at;  // indices of v3, v4, v7, v12
    Seed seed_after;                // Q_Delta' with its own names
    std::map<NodeId, NodeId> new_to_old;
};

FlipSequence make_flip_sequence(const Triangulation& T, const std::string& arc);
// Theta: Delta'-side polynomial -> Delta-side, via binomial-denominator fractions.
QuantumRational theta_flip(const FlipSequence& F, const LaurentPoly& p_after);
// Same map on general fractions.
RightFraction theta_flip_fraction(const FlipSequence& F, const RightFraction& f_after);
// Classical composite (omega = 1) of the four mutations on a classical Laurent value.
RightFraction theta_flip_classical(const FlipSequence& F, const LaurentPoly& classical_after);
// re-express a Delta'-side polynomial over eps[4]
LaurentPoly to_sequence_indexing(const FlipSequence& F, const LaurentPoly& p_after);

struct RelationReport {
    bool seeds_ok = false;
    bool images_ok = false;
    std::vector<std::string> mismatches;
    bool ok() const { return seeds_ok && images_ok; }
};
// word applied left-to-right as mu_{k1} mu_{k2} ... ; perm maps nodes of the final seed
// back (sigma: old name -> new name with Gamma_n = sigma(Gamma_0)).
RelationReport check_relation(const Seed& s, const std::vector<NodeId>& word,
                              const std::map<NodeId, NodeId>& sigma = {});
// "involution:v", "square:v,w", "pentagon:v,w" or "v w v ... [(a b)]"
RelationReport check_relation(const Seed& s, const std::string& spec);

}  // namespace sl3qt
