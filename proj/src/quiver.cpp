#include "sl3qt/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace sl3qt {

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            std::string na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
            na.erase(0, std::min(na.find_first_not_of('0'), na.size() - 1));
            nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size() - 1));
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
            i = i2; j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i; ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
    return a < b;
}

Seed::Seed(std::vector<NodeId> nodes, std::vector<bool> frozen) {
    if (frozen.size() != nodes.size()) throw InputError("seed: frozen flags size mismatch");
    std::vector<std::size_t> perm(nodes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t x, std::size_t y) { return natural_less(nodes[x], nodes[y]); });
    for (auto p : perm) {
        if (idx_.count(nodes[p])) throw InputError("seed: duplicate node '" + nodes[p] + "'");
        idx_[nodes[p]] = nodes_.size();
        nodes_.push_back(nodes[p]);
        frozen_.push_back(frozen[p]);
    }
    e2_.assign(nodes_.size() * nodes_.size(), 0);
}

std::size_t Seed::index(const NodeId& v) const {
    auto it = idx_.find(v);
    if (it == idx_.end()) throw InputError("unknown node '" + v + "'");
    return it->second;
}

void Seed::set_eps2(std::size_t v, std::size_t w, i64 twice) {
    if (v == w) {
        if (twice != 0) throw InputError("seed: nonzero diagonal entry");
        return;
    }
    e2_[v * size() + w] = twice;
    e2_[w * size() + v] = -twice;
}

void Seed::validate() const {
    for (std::size_t v = 0; v < size(); ++v)
        for (std::size_t w = 0; w < size(); ++w) {
            if (eps2(v, w) != -eps2(w, v)) throw InputError("seed: epsilon not skew-symmetric");
            if (eps2(v, w) % 2 != 0 && !(frozen_[v] && frozen_[w]))
                throw InputError("seed: half-integer entry between " + nodes_[v] + " and " + nodes_[w] +
                                 " which are not both frozen");
        }
}

std::string Seed::render() const {
    std::ostringstream os;
    for (std::size_t v = 0; v < size(); ++v) os << "node " << nodes_[v] << (frozen_[v] ? " frozen" : "") << "\n";
    for (std::size_t v = 0; v < size(); ++v)
        for (std::size_t w = v + 1; w < size(); ++w)
            if (eps2(v, w)) os << "eps " << nodes_[v] << " " << nodes_[w] << " " << to_string(eps(v, w)) << "\n";
    return os.str();
}

Seed Seed::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<NodeId> nodes;
    std::vector<bool> frozen;
    std::vector<std::tuple<NodeId, NodeId, HalfInt, int>> entries;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "node") {
            std::string id, flag;
            if (!(ls >> id)) throw InputError("seed line " + std::to_string(lineno) + ": missing node id");
            bool fr = false;
            if (ls >> flag) {
                if (flag != "frozen") throw InputError("seed line " + std::to_string(lineno) + ": unexpected '" + flag + "'");
                fr = true;
            }
            nodes.push_back(id);
            frozen.push_back(fr);
        } else if (kw == "eps") {
            std::string v, w, val;
            if (!(ls >> v >> w >> val)) throw InputError("seed line " + std::to_string(lineno) + ": eps needs 3 fields");
            HalfInt h;
            try {
                h = parse_half(val);
            } catch (const std::invalid_argument& e) {
                throw InputError("seed line " + std::to_string(lineno) + ": " + e.what());
            }
            entries.emplace_back(v, w, h, lineno);
        } else {
            throw InputError("seed line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
        }
    }
    Seed s(nodes, frozen);
    for (auto& [v, w, h, ln] : entries) {
        std::size_t a = s.index(v), b = s.index(w);
        if (a == b) throw InputError("seed line " + std::to_string(ln) + ": diagonal entry");
        s.set_eps2(a, b, h.twice);
    }
    s.validate();
    return s;
}

Seed mutate_quiver(const Seed& s, std::size_t k) {
    if (k >= s.size()) throw InputError("mutation index out of range");
    if (s.frozen(k)) throw InputError("cannot mutate at frozen node '" + s.node(k) + "'");
    Seed r = s;
    std::size_t n = s.size();
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = v + 1; w < n; ++w) {
            i64 val;
            if (v == k || w == k) {
                val = -s.eps2(v, w);
            } else {
                i64 a = s.eps2(v, k), b = s.eps2(k, w);
                i64 num = a * std::abs(b) + std::abs(a) * b;
                if (num % 4 != 0) throw std::logic_error("mutation produced non half-integer entry");
                val = s.eps2(v, w) + num / 4;
            }
            r.set_eps2(v, w, val);
        }
    return r;
}

Seed mutate_quiver(const Seed& s, const NodeId& k) { return mutate_quiver(s, s.index(k)); }

Seed permute_seed(const Seed& s, const std::map<NodeId, NodeId>& sigma) {
    std::vector<NodeId> names;
    std::vector<bool> fr;
    for (std::size_t v = 0; v < s.size(); ++v) {
        auto it = sigma.find(s.node(v));
        names.push_back(it == sigma.end() ? s.node(v) : it->second);
        fr.push_back(s.frozen(v));
    }
    Seed r(names, fr);
    for (std::size_t v = 0; v < s.size(); ++v)
        for (std::size_t w = v + 1; w < s.size(); ++w)
            r.set_eps2(r.index(names[v]), r.index(names[w]), s.eps2(v, w));
    return r;
}

bool seeds_equal(const Seed& a, const Seed& b) { return a == b; }

}  // namespace sl3qt
