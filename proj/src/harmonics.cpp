#include "prc/harmonics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>

#include "prc/designs.hpp"
#include "prc/ratlin.hpp"

namespace prc {

bool SubsetFunction::is_zero() const {
    for (const auto& [mask, val] : values)
        if (val != 0) return false;
    return true;
}

bool SubsetFunction::operator==(const SubsetFunction& o) const {
    if (k != o.k || v != o.v) return false;
    for (const auto& [mask, val] : values)
        if (val != o.at(mask)) return false;
    for (const auto& [mask, val] : o.values)
        if (val != at(mask)) return false;
    return true;
}

SubsetFunction sf_add(const SubsetFunction& a, const SubsetFunction& b) {
    if (a.k != b.k || a.v != b.v) throw Error("sf_add: shape mismatch");
    SubsetFunction r = a;
    for (const auto& [mask, val] : b.values) {
        Rat s = r.at(mask) + val;
        if (s == 0) r.values.erase(mask);
        else r.values[mask] = s;
    }
    return r;
}

SubsetFunction sf_scale(const SubsetFunction& a, const Rat& s) {
    SubsetFunction r;
    r.k = a.k;
    r.v = a.v;
    if (s == 0) return r;
    for (const auto& [mask, val] : a.values) r.values[mask] = val * s;
    return r;
}

SubsetFunction act(const SubsetFunction& f, const Permutation& pi) {
    SubsetFunction r;
    r.k = f.k;
    r.v = f.v;
    for (const auto& [mask, val] : f.values) r.values[apply_to_mask(pi, mask)] = val;
    return r;
}

SubsetFunction gamma(const SubsetFunction& f) {
    if (f.k < 1) throw DegreeZero("gamma: degree must be >= 1");
    SubsetFunction r;
    r.k = f.k - 1;
    r.v = f.v;
    for (const auto& [mask, val] : f.values) {
        std::uint64_t m = mask;
        while (m) {
            std::uint64_t bit = m & -m;
            m -= bit;
            Rat s = r.at(mask ^ bit) + val;
            if (s == 0) r.values.erase(mask ^ bit);
            else r.values[mask ^ bit] = s;
        }
    }
    return r;
}

Rat tilde_extend(const SubsetFunction& f, std::uint64_t u_mask) {
    Rat s = 0;
    for (const auto& [mask, val] : f.values)
        if ((mask & u_mask) == mask) s += val;
    return s;
}

SubsetFunction reynolds_average(const PermGroup& group, std::uint64_t Tmask) {
    std::vector<std::uint64_t> orbit{Tmask};
    std::vector<std::uint64_t> frontier{Tmask};
    std::map<std::uint64_t, char> seen{{Tmask, 1}};
    while (!frontier.empty()) {
        std::uint64_t cur = frontier.back();
        frontier.pop_back();
        for (const auto& g : group.generators()) {
            std::uint64_t img = apply_to_mask(g, cur);
            if (seen.emplace(img, 1).second) {
                orbit.push_back(img);
                frontier.push_back(img);
            }
        }
    }
    SubsetFunction f;
    f.k = std::popcount(Tmask);
    f.v = group.degree();
    Rat val(1, static_cast<long long>(orbit.size()));
    for (std::uint64_t m : orbit) f.values[m] = val;
    return f;
}

namespace {

template <class Fn>
void for_each_ksubset_mask(int n, int k, Fn&& fn) {
    if (k == 0) { fn(std::uint64_t{0}); return; }
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    std::uint64_t limit = std::uint64_t{1} << n;
    while (v < limit) {
        fn(v);
        std::uint64_t c = v & -v;
        std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
}

// colex rank of a subset mask among the k-subsets
long long mask_colex_rank(std::uint64_t mask) {
    long long r = 0;
    int j = 0;
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        r += binomial(i, ++j);
    }
    return r;
}

} // namespace

HarmonicBasis invariant_harmonic_basis_from_orbits(int v, const OrbitPartition& orbits) {
    int k = orbits.k;
    if (k < 1) throw DegreeZero("invariant_harmonic_basis: degree must be >= 1");
    std::size_t rows = static_cast<std::size_t>(binomial(v, k - 1));
    std::size_t r = orbits.orbits.size();
    // M[y][i] = number of k-subsets in orbit i containing the (k-1)-subset y
    IntMatrix M(rows, std::vector<Int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::uint64_t z : orbits.orbits[i]) {
            std::uint64_t m = z;
            while (m) {
                std::uint64_t bit = m & -m;
                m -= bit;
                M[static_cast<std::size_t>(mask_colex_rank(z ^ bit))][i] += 1;
            }
        }
    }
    auto kernel = integer_kernel(std::move(M));

    HarmonicBasis basis;
    basis.k = k;
    basis.v = v;
    for (const auto& b : kernel) {
        SubsetFunction f;
        f.k = k;
        f.v = v;
        for (std::size_t i = 0; i < r; ++i) {
            if (b[i] == 0) continue;
            for (std::uint64_t z : orbits.orbits[i]) f.values[z] = Rat(b[i]);
        }
        // sign fixed on the lexicographically smallest supported subset
        if (!f.values.empty() && f.values.begin()->second < 0)
            f = sf_scale(f, Rat(-1));
        basis.functions.push_back(std::move(f));
    }
    return basis;
}

HarmonicBasis invariant_harmonic_basis(const PermGroup& H, int k) {
    return invariant_harmonic_basis_from_orbits(H.degree(), orbits_on_ksubsets(H, k));
}

HarmonicBasis symmetric_invariant_harmonic_basis(int v, int k) {
    OrbitPartition single;
    single.k = k;
    single.orbits.emplace_back();
    for_each_ksubset_mask(v, k, [&](std::uint64_t m) { single.orbits[0].push_back(m); });
    single.representatives.push_back(single.orbits[0].front());
    return invariant_harmonic_basis_from_orbits(v, single);
}

bool enumerator_is_zero(const WeightEnumerator& e) {
    return std::all_of(e.begin(), e.end(), [](const Rat& x) { return x == 0; });
}

namespace {

Int int_from_i128(__int128 x) {
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
    Int r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? Int(-r) : r;
}

} // namespace

WeightEnumerator harmonic_weight_enumerator(const LinearCode& C, const SubsetFunction& f,
                                            const EnumOptions& opts) {
    std::uint64_t total = code_size_checked(C, opts.cap);
    const int k = f.k;
    // Scale f to integers once; per-codeword work then stays in machine words.
    Int lcm_den = 1;
    for (const auto& [mask, val] : f.values)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(val));
    std::vector<long long> table(static_cast<std::size_t>(binomial(C.n, k)), 0);
    for (const auto& [mask, val] : f.values) {
        Int scaled = numerator(val) * (lcm_den / denominator(val));
        if (scaled > std::numeric_limits<long long>::max() ||
            scaled < std::numeric_limits<long long>::min())
            throw Error("harmonic_weight_enumerator: scaled values exceed 64 bits");
        table[static_cast<std::size_t>(mask_colex_rank(mask))] = scaled.convert_to<long long>();
    }

    int threads = std::max(1, opts.threads);
    if (total < 4096) threads = 1;
    std::vector<std::vector<__int128>> accs(
        static_cast<std::size_t>(threads),
        std::vector<__int128>(static_cast<std::size_t>(C.n) + 1, 0));
    auto work = [&](int tid, std::uint64_t begin, std::uint64_t end) {
        auto& acc = accs[static_cast<std::size_t>(tid)];
        enumerate_range(C, begin, end, [&](const std::uint8_t*, std::uint64_t mask, int w) {
            if (w < k) return;
            long long s = 0;
            // iterate the k-sub-subsets of the support
            int pts[64];
            int np = 0;
            std::uint64_t m = mask;
            while (m) {
                pts[np++] = std::countr_zero(m);
                m &= m - 1;
            }
            if (k == 2) {
                for (int x = 0; x < np; ++x)
                    for (int y = x + 1; y < np; ++y)
                        s += table[static_cast<std::size_t>(
                            binomial(pts[y], 2) + pts[x])];
            } else {
                std::vector<int> idx(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
                while (true) {
                    long long rank = 0;
                    for (int i = 0; i < k; ++i)
                        rank += binomial(pts[idx[static_cast<std::size_t>(i)]], i + 1);
                    s += table[static_cast<std::size_t>(rank)];
                    int i = k - 1;
                    while (i >= 0 && idx[static_cast<std::size_t>(i)] == np - k + i) --i;
                    if (i < 0) break;
                    ++idx[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < k; ++j)
                        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                }
            }
            acc[static_cast<std::size_t>(w)] += s;
        });
    };
    if (threads == 1) {
        work(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t b = total / static_cast<std::uint64_t>(threads) * static_cast<std::uint64_t>(t);
            std::uint64_t e = (t + 1 == threads)
                                  ? total
                                  : total / static_cast<std::uint64_t>(threads) * static_cast<std::uint64_t>(t + 1);
            pool.emplace_back(work, t, b, e);
        }
        for (auto& th : pool) th.join();
    }
    WeightEnumerator out(static_cast<std::size_t>(C.n) + 1, Rat(0));
    for (int w = 0; w <= C.n; ++w) {
        __int128 s = 0;
        for (const auto& acc : accs) s += acc[static_cast<std::size_t>(w)];
        if (s != 0) out[static_cast<std::size_t>(w)] = Rat(int_from_i128(s), lcm_den);
    }
    return out;
}

VanishReport conjugate_vanishing_check(const LinearCode& C, const Permutation& sigma, int s,
                                       const HarmonicBasis& basis, const EnumOptions& opts) {
    VanishReport rep;
    rep.all_zero = true;
    for (const auto& f : basis.functions) {
        // w_{C^{sigma^i},f} = w_{C, act(f, sigma^i)}; sum the transported
        // functions first, then enumerate once.
        SubsetFunction g = f;
        SubsetFunction cur = f;
        for (int i = 1; i < s; ++i) {
            cur = act(cur, sigma);
            g = sf_add(g, cur);
        }
        WeightEnumerator e = harmonic_weight_enumerator(C, g, opts);
        if (!enumerator_is_zero(e)) rep.all_zero = false;
        rep.sums.push_back(std::move(e));
    }
    return rep;
}

namespace {

// #{z in X_k containing both y1 and y2} = C(v - |y1 union y2|, k - |y1 union y2|)
Rat updown_entry(int v, int k, std::uint64_t y1, std::uint64_t y2) {
    int u = std::popcount(y1 | y2);
    if (u > k) return Rat(0);
    return Rat(binomial(v - u, k - u));
}

bool full_harmonic_check(const BlockMultiset& B, int k) {
    int v = B.v;
    std::size_t nk = static_cast<std::size_t>(binomial(v, k));
    std::size_t nk1 = static_cast<std::size_t>(binomial(v, k - 1));

    // incidence vector over X_k
    std::vector<Rat> N(nk, Rat(0));
    for (const auto& [mask, mult] : B.blocks) {
        int pts[64];
        int np = 0;
        std::uint64_t m = mask;
        while (m) {
            pts[np++] = std::countr_zero(m);
            m &= m - 1;
        }
        if (np < k) continue;
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            long long rank = 0;
            for (int i = 0; i < k; ++i)
                rank += binomial(pts[idx[static_cast<std::size_t>(i)]], i + 1);
            N[static_cast<std::size_t>(rank)] += mult;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == np - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    // subsets in colex order, both degrees
    std::vector<std::uint64_t> xk, xk1;
    for_each_ksubset_mask(v, k, [&](std::uint64_t m) { xk.push_back(m); });
    for_each_ksubset_mask(v, k - 1, [&](std::uint64_t m) { xk1.push_back(m); });

    // Spanning functions of Harm_k are the projections of 1_z - 1_{z0} onto
    // ker(gamma); testing them against N needs proj(N) only, since the
    // projector is self-adjoint: <proj(1_z - 1_z0), N> = proj(N)(z) - proj(N)(z0).
    RatMatrix G(nk1, std::vector<Rat>(nk1, Rat(0)));
    for (std::size_t a = 0; a < nk1; ++a)
        for (std::size_t b = 0; b < nk1; ++b) G[a][b] = updown_entry(v, k, xk1[a], xk1[b]);
    std::vector<Rat> gN(nk1, Rat(0));
    for (std::size_t zi = 0; zi < nk; ++zi) {
        if (N[zi] == 0) continue;
        std::uint64_t m = xk[zi];
        while (m) {
            std::uint64_t bit = m & -m;
            m -= bit;
            gN[static_cast<std::size_t>(mask_colex_rank(xk[zi] ^ bit))] += N[zi];
        }
    }
    std::vector<Rat> u = rat_solve(G, gN);
    auto proj_at = [&](std::size_t zi) {
        Rat s = N[zi];
        std::uint64_t m = xk[zi];
        while (m) {
            std::uint64_t bit = m & -m;
            m -= bit;
            s -= u[static_cast<std::size_t>(mask_colex_rank(xk[zi] ^ bit))];
        }
        return s;
    };
    Rat base = proj_at(0);
    for (std::size_t zi = 1; zi < nk; ++zi)
        if (proj_at(zi) != base) return false;
    return true;
}

} // namespace

bool delsarte_design_check(const BlockMultiset& B, int t, const PermGroup* group) {
    if (B.blocks.empty()) return true; // vacuous
    if (group) {
        for (const auto& g : group->generators()) {
            std::map<std::uint64_t, long long> image;
            for (const auto& [mask, mult] : B.blocks) image[apply_to_mask(g, mask)] += mult;
            if (image != B.blocks)
                throw GroupNotAutomorphism("delsarte_design_check: group does not fix the blocks");
        }
        for (int k = 1; k <= t; ++k) {
            HarmonicBasis basis = invariant_harmonic_basis(*group, k);
            for (const auto& f : basis.functions) {
                // basis functions are integer-valued; a dense table indexed
                // by colex rank keeps the block scan in machine integers
                bool integral = true;
                for (const auto& [mask, val] : f.values)
                    integral = integral && denominator(val) == 1;
                if (k <= 2 && integral) {
                    std::vector<long long> table(
                        static_cast<std::size_t>(binomial(B.v, k)), 0);
                    for (const auto& [mask, val] : f.values)
                        table[static_cast<std::size_t>(mask_colex_rank(mask))] =
                            static_cast<long long>(numerator(val));
                    __int128 s = 0;
                    int pts[64];
                    for (const auto& [mask, mult] : B.blocks) {
                        int n = 0;
                        std::uint64_t m = mask;
                        while (m) {
                            pts[n++] = std::countr_zero(m);
                            m &= m - 1;
                        }
                        long long inner = 0;
                        if (k == 1) {
                            for (int i = 0; i < n; ++i)
                                inner += table[static_cast<std::size_t>(pts[i])];
                        } else {
                            for (int j = 1; j < n; ++j) {
                                long long base = binomial(pts[j], 2);
                                for (int i = 0; i < j; ++i)
                                    inner += table[static_cast<std::size_t>(base + pts[i])];
                            }
                        }
                        s += static_cast<__int128>(mult) * inner;
                    }
                    if (s != 0) return false;
                } else {
                    Rat s = 0;
                    for (const auto& [mask, mult] : B.blocks)
                        s += Rat(mult) * tilde_extend(f, mask);
                    if (s != 0) return false;
                }
            }
        }
        return true;
    }
    for (int k = 1; k <= t; ++k)
        if (!full_harmonic_check(B, k)) return false;
    return true;
}

} // namespace prc
