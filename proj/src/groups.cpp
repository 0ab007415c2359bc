#include "prc/groups.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

#include "prc/arith.hpp"

namespace prc {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(static_cast<std::size_t>(n));
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r;
    r.images.resize(b.images.size());
    for (std::size_t i = 0; i < b.images.size(); ++i)
        r.images[i] = a.images[static_cast<std::size_t>(b.images[i])];
    return r;
}

Permutation inverse(const Permutation& a) {
    Permutation r;
    r.images.resize(a.images.size());
    for (std::size_t i = 0; i < a.images.size(); ++i)
        r.images[static_cast<std::size_t>(a.images[i])] = static_cast<int>(i);
    return r;
}

Permutation perm_power(const Permutation& a, int e) {
    Permutation base = e >= 0 ? a : inverse(a);
    int n = std::abs(e);
    Permutation r = Permutation::identity(a.degree());
    for (int i = 0; i < n; ++i) r = compose(base, r);
    return r;
}

std::uint64_t apply_to_mask(const Permutation& p, std::uint64_t mask) {
    std::uint64_t out = 0;
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint64_t{1} << p(i);
    }
    return out;
}

Permutation shift_permutation(int p) {
    Permutation s;
    s.images.resize(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) s.images[static_cast<std::size_t>(i)] = (i + 1) % p;
    return s;
}

Permutation multiplier_permutation(int p, std::uint64_t a) {
    a %= static_cast<std::uint64_t>(p);
    if (a == 0) throw Error("multiplier_permutation: a must be nonzero mod p");
    Permutation t;
    t.images.resize(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        t.images[static_cast<std::size_t>(i)] = static_cast<int>((a * static_cast<std::uint64_t>(i)) % static_cast<std::uint64_t>(p));
    return t;
}

PermGroup::PermGroup(std::vector<Permutation> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw Error("PermGroup: need at least one generator (identity is fine)");
    degree_ = gens_.front().degree();
    for (const auto& g : gens_)
        if (g.degree() != degree_) throw Error("PermGroup: generator degrees differ");
}

const std::vector<Permutation>& PermGroup::elements() const {
    if (!elems_.empty()) return elems_;
    std::set<Permutation> seen;
    std::deque<Permutation> frontier;
    Permutation id = Permutation::identity(degree_);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Permutation cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens_) {
            Permutation next = compose(g, cur);
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    elems_.assign(seen.begin(), seen.end());
    return elems_;
}

bool PermGroup::contains(const Permutation& p) const {
    const auto& e = elements();
    return std::binary_search(e.begin(), e.end(), p);
}

int OrbitPartition::orbit_of(std::uint64_t mask) const {
    for (std::size_t i = 0; i < orbits.size(); ++i)
        if (std::binary_search(orbits[i].begin(), orbits[i].end(), mask))
            return static_cast<int>(i);
    return -1;
}

std::pair<PermGroup, PermGroup> affine_group(std::uint64_t p, std::uint64_t m) {
    if (!is_prime(p)) throw Error("affine_group: p not prime");
    if (m == 0 || (p - 1) % m != 0)
        throw NotDivisor("affine_group: m does not divide p-1");
    std::uint64_t g = smallest_primitive_root(p);
    Permutation sigma = shift_permutation(static_cast<int>(p));
    Permutation tau_g = multiplier_permutation(static_cast<int>(p), g);
    Permutation tau_gm = multiplier_permutation(static_cast<int>(p), pow_mod(g, m, p));
    PermGroup H({sigma, tau_gm});
    PermGroup G({sigma, tau_g});
    return {std::move(H), std::move(G)};
}

namespace {

void enumerate_ksubsets(int n, int k, std::vector<std::uint64_t>& out) {
    std::uint64_t full = (k == 0) ? 0 : ((std::uint64_t{1} << k) - 1);
    std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t v = full;
    if (k == 0) { out.push_back(0); return; }
    while (v < limit) {
        out.push_back(v);
        // next k-subset in colex order (Gosper's hack)
        std::uint64_t c = v & -v;
        std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
}

double binom_estimate(int n, int k) {
    double r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

OrbitPartition orbits_on_ksubsets(const PermGroup& group, int k) {
    int n = group.degree();
    if (n > 63) throw Error("orbits_on_ksubsets: degree above 63 unsupported");
    if (binom_estimate(n, k) > 1e7)
        throw TooManySubsets("orbits_on_ksubsets: C(n,k) exceeds 10^7");
    std::vector<std::uint64_t> all;
    enumerate_ksubsets(n, k, all);
    std::sort(all.begin(), all.end());

    OrbitPartition part;
    part.k = k;
    std::set<std::uint64_t> unseen(all.begin(), all.end());
    while (!unseen.empty()) {
        std::uint64_t start = *unseen.begin();
        std::vector<std::uint64_t> orbit;
        std::deque<std::uint64_t> frontier{start};
        unseen.erase(start);
        orbit.push_back(start);
        while (!frontier.empty()) {
            std::uint64_t cur = frontier.front();
            frontier.pop_front();
            for (const auto& g : group.generators()) {
                std::uint64_t img = apply_to_mask(g, cur);
                auto it = unseen.find(img);
                if (it != unseen.end()) {
                    unseen.erase(it);
                    orbit.push_back(img);
                    frontier.push_back(img);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        part.orbits.push_back(std::move(orbit));
    }
    std::sort(part.orbits.begin(), part.orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& o : part.orbits) part.representatives.push_back(o.front());
    return part;
}

bool is_normal(const PermGroup& H, const PermGroup& G) {
    for (const auto& h : H.elements())
        if (!G.contains(h)) throw NotSubgroup("is_normal: H is not a subgroup of G");
    for (const auto& g : G.generators()) {
        Permutation ginv = inverse(g);
        for (const auto& h : H.generators()) {
            // Normality of the closure reduces to conjugates of generators.
            Permutation conj = compose(g, compose(h, ginv));
            if (!H.contains(conj)) return false;
        }
    }
    return true;
}

long long stabilizer_order(const PermGroup& group, std::uint64_t subset_mask) {
    long long count = 0;
    for (const auto& e : group.elements())
        if (apply_to_mask(e, subset_mask) == subset_mask) ++count;
    return count;
}

Permutation conjugating_permutation(std::uint64_t p, std::uint64_t m) {
    auto [H, G] = affine_group(p, m);
    std::uint64_t g = smallest_primitive_root(p);
    Permutation tau = multiplier_permutation(static_cast<int>(p), g);

    OrbitPartition pairs = orbits_on_ksubsets(H, 2);
    std::size_t r = pairs.orbits.size();
    // tau must act on the orbit set as a single cycle of length r.
    std::vector<int> image(r, -1);
    for (std::size_t i = 0; i < r; ++i) {
        int j = pairs.orbit_of(apply_to_mask(tau, pairs.representatives[i]));
        if (j < 0) throw CyclicActionFailed("conjugating_permutation: image orbit not found");
        image[i] = j;
    }
    std::vector<char> visited(r, 0);
    std::size_t cycle_len = 0;
    int cur = 0;
    while (!visited[static_cast<std::size_t>(cur)]) {
        visited[static_cast<std::size_t>(cur)] = 1;
        cur = image[static_cast<std::size_t>(cur)];
        ++cycle_len;
    }
    if (cycle_len != r)
        throw CyclicActionFailed("conjugating_permutation: tau_g does not cycle the H-orbits");
    return tau;
}

} // namespace prc
