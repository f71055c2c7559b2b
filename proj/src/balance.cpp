#include "sl3qt/balance.hpp"

#include <sstream>

namespace sl3qt {

namespace {

struct Constraint {
    std::string tri, cond, where;
    std::vector<std::pair<std::size_t, int>> coeffs;  // sum coeff * a_v must be integral
};

std::vector<Constraint> constraints(const Triangulation& T, const Seed& s) {
    std::vector<Constraint> out;
    for (std::size_t t = 0; t < T.triangles().size(); ++t) {
        const Triangle& tr = T.triangles()[t];
        std::size_t face = s.index(T.name(Triangulation::face_node(tr.id)));
        std::array<std::size_t, 3> first, second;
        for (int a = 0; a < 3; ++a) {
            auto [p, q] = T.local_nodes(t, a);
            first[a] = s.index(T.name(p));
            second[a] = s.index(T.name(q));
        }
        out.push_back({tr.id, "BE1", "first", {{first[0], 1}, {first[1], 1}, {first[2], 1}}});
        out.push_back({tr.id, "BE1", "second", {{second[0], 1}, {second[1], 1}, {second[2], 1}}});
        for (int a = 0; a < 3; ++a) out.push_back({tr.id, "BE2", tr.sides[a], {{first[a], 1}, {second[a], 1}}});
        for (int a = 0; a < 3; ++a)
            out.push_back({tr.id, "BE3", tr.sides[a] + "|" + tr.sides[(a + 1) % 3],
                           {{face, -1}, {second[a], 1}, {first[(a + 1) % 3], 1}}});
    }
    return out;
}

}  // namespace

std::string BalanceReport::render() const {
    if (balanced) return "balanced";
    std::ostringstream os;
    for (auto& f : failures)
        os << f.condition << " fails in triangle " << f.triangle << " at " << f.where << ": " << to_string(f.value) << "\n";
    return os.str();
}

BalanceReport is_delta_balanced(const Triangulation& T, const Seed& s, const Exps& a) {
    BalanceReport r;
    for (auto& c : constraints(T, s)) {
        i64 v = 0;
        for (auto [i, k] : c.coeffs) v += k * a[i];
        if (v % 3 != 0) {
            r.balanced = false;
            r.failures.push_back({c.tri, c.cond, c.where, ThirdInt{v}});
        }
    }
    return r;
}

BalanceReport is_delta_balanced(const Triangulation& T, const Seed& s, const LaurentPoly& p) {
    BalanceReport r;
    for (auto& [e, c] : p.terms()) {
        auto one = is_delta_balanced(T, s, e);
        if (!one.balanced) {
            r.balanced = false;
            r.failures.insert(r.failures.end(), one.failures.begin(), one.failures.end());
        }
    }
    return r;
}

bool be3_alternative_holds(const Triangulation& T, const Seed& s, const Exps& a) {
    for (std::size_t t = 0; t < T.triangles().size(); ++t) {
        std::size_t face = s.index(T.name(Triangulation::face_node(T.triangles()[t].id)));
        for (int al = 0; al < 3; ++al) {
            auto [p, q] = T.local_nodes(t, al);
            auto [p2, q2] = T.local_nodes(t, (al + 1) % 3);
            i64 v = a[face] + a[s.index(T.name(p))] + a[s.index(T.name(q2))];
            if (v % 3 != 0) return false;
        }
    }
    return true;
}

bool is_u_balanced(const Seed& s, std::size_t u, const Exps& a) {
    i64 twice = 0;
    for (std::size_t v = 0; v < s.size(); ++v) twice += s.eps2(u, v) * a[v];
    return twice % 6 == 0;
}

Exps transform_exponents(const Seed& pre, std::size_t u, const Exps& post) {
    Exps r = post;
    i64 twice = -2 * post[u];
    for (std::size_t w = 0; w < pre.size(); ++w)
        if (pre.eps2(w, u) > 0) twice += pre.eps2(w, u) * post[w];
    if (twice % 2 != 0) throw std::domain_error("transform_exponents: half-integral result");
    r[u] = twice / 2;
    return r;
}

std::vector<Exps> balanced_residue_basis(const Triangulation& T, const Seed& s) {
    std::size_t n = s.size();
    std::vector<std::vector<int>> rows;
    for (auto& c : constraints(T, s)) {
        std::vector<int> row(n, 0);
        for (auto [i, k] : c.coeffs) row[i] = ((row[i] + k) % 3 + 3) % 3;
        rows.push_back(row);
    }
    // reduced row echelon form over F_3
    std::vector<int> pivot_of_col(n, -1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        int inv = rows[r][col] == 1 ? 1 : 2;
        for (auto& x : rows[r]) x = (x * inv) % 3;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][col] == 0) continue;
            int f = rows[q][col];
            for (std::size_t k = 0; k < n; ++k) rows[q][k] = ((rows[q][k] - f * rows[r][k]) % 3 + 3) % 3;
        }
        pivot_of_col[col] = static_cast<int>(r);
        ++r;
    }
    std::vector<Exps> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        Exps v(n, 0);
        v[free] = 1;
        for (std::size_t col = 0; col < n; ++col)
            if (pivot_of_col[col] >= 0) v[col] = ((-rows[pivot_of_col[col]][free]) % 3 + 3) % 3;
        basis.push_back(v);
    }
    return basis;
}

Exps random_balanced(const Triangulation& T, const Seed& s, std::mt19937_64& rng, int range) {
    auto basis = balanced_residue_basis(T, s);
    std::uniform_int_distribution<int> coef(0, 2), shift(-range, range);
    Exps a(s.size(), 0);
    for (auto& b : basis) {
        int c = coef(rng);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
    }
    for (auto& x : a) x = (x % 3) + 3 * shift(rng);
    return a;
}

}  // namespace sl3qt
