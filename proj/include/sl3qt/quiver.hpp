#pragma once
// Cluster X-seeds: node sets with skew-symmetric half-integer exchange matrices.
#include <map>
#include <string>
#include <vector>

#include "sl3qt/coeff.hpp"

namespace sl3qt {

using NodeId = std::string;

// Numeric-aware ordering: "2" < "10", "e:1" < "e:2" < "t:t".
bool natural_less(const std::string& a, const std::string& b);

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Seed {
public:
    Seed() = default;
    // Nodes are sorted into canonical order.
    Seed(std::vector<NodeId> nodes, std::vector<bool> frozen);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<NodeId>& nodes() const { return nodes_; }
    const NodeId& node(std::size_t i) const { return nodes_[i]; }
    std::size_t index(const NodeId& v) const;  // throws InputError
    bool has(const NodeId& v) const { return idx_.count(v) > 0; }
    bool frozen(std::size_t i) const { return frozen_[i]; }

    // doubled epsilon entry
    i64 eps2(std::size_t v, std::size_t w) const { return e2_[v * nodes_.size() + w]; }
    HalfInt eps(std::size_t v, std::size_t w) const { return {eps2(v, w)}; }
    // sets both (v,w) and (w,v)
    void set_eps2(std::size_t v, std::size_t w, i64 twice);
    void add_eps2(std::size_t v, std::size_t w, i64 twice) { set_eps2(v, w, eps2(v, w) + twice); }

    // skew-symmetry and integrality rule; throws InputError
    void validate() const;

    std::string render() const;
    static Seed parse(const std::string& text);

    friend bool operator==(const Seed&, const Seed&) = default;

private:
    std::vector<NodeId> nodes_;
    std::vector<bool> frozen_;
    std::vector<i64> e2_;
    std::map<NodeId, std::size_t> idx_;
};

Seed mutate_quiver(const Seed& s, std::size_t k);
Seed mutate_quiver(const Seed& s, const NodeId& k);
// Renames nodes via sigma (old name -> new name); unmapped nodes keep their names.
Seed permute_seed(const Seed& s, const std::map<NodeId, NodeId>& sigma);
bool seeds_equal(const Seed& a, const Seed& b);

}  // namespace sl3qt
