#include "prc/jacobi.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "prc/designs.hpp"

namespace prc {

JacobiPolynomial& JacobiPolynomial::operator+=(const JacobiPolynomial& o) {
    if (t != o.t || n != o.n) throw Error("JacobiPolynomial: shape mismatch in sum");
    for (const auto& [k, v] : o.coeff) coeff[k] += v;
    return *this;
}

JacobiPolynomial jacobi(const LinearCode& C, std::uint64_t Tmask, const EnumOptions& opts) {
    JacobiPolynomial J;
    J.t = std::popcount(Tmask);
    J.n = C.n;
    std::uint64_t total = code_size_checked(C, opts.cap);
    // histogram over (m1, weight); small and dense
    std::vector<long long> hist(static_cast<std::size_t>((J.t + 1) * (C.n + 1)), 0);
    enumerate_range(C, 0, total, [&](const std::uint8_t*, std::uint64_t mask, int w) {
        int m1 = std::popcount(mask & Tmask);
        ++hist[static_cast<std::size_t>(m1 * (C.n + 1) + w)];
    });
    for (int m1 = 0; m1 <= J.t; ++m1)
        for (int w = 0; w <= C.n; ++w) {
            long long c = hist[static_cast<std::size_t>(m1 * (C.n + 1) + w)];
            if (c) J.coeff[{m1, w - m1}] = c;
        }
    return J;
}

namespace {

inline std::size_t pair_rank(int i, int j) { // i < j
    return static_cast<std::size_t>(j) * (static_cast<std::size_t>(j) - 1) / 2 +
           static_cast<std::size_t>(i);
}

} // namespace

PairIncidenceTables::PairIncidenceTables(const LinearCode& C, const EnumOptions& opts)
    : n_(C.n) {
    std::uint64_t total = code_size_checked(C, opts.cap);
    const std::size_t wn = static_cast<std::size_t>(n_) + 1;
    const std::size_t pairs = static_cast<std::size_t>(binomial(n_, 2));

    struct Acc {
        std::vector<long long> A;
        std::vector<long long> N1; // point * wn + w
        std::vector<long long> N2; // pair rank * wn + w
    };
    int threads = std::max(1, opts.threads);
    if (total < 4096) threads = 1;
    std::vector<Acc> accs(static_cast<std::size_t>(threads));
    for (auto& a : accs) {
        a.A.assign(wn, 0);
        a.N1.assign(static_cast<std::size_t>(n_) * wn, 0);
        a.N2.assign(pairs * wn, 0);
    }
    auto work = [&](int tid, std::uint64_t begin, std::uint64_t end) {
        Acc& a = accs[static_cast<std::size_t>(tid)];
        enumerate_range(C, begin, end, [&](const std::uint8_t*, std::uint64_t mask, int w) {
            ++a.A[static_cast<std::size_t>(w)];
            int pts[64];
            int np = 0;
            std::uint64_t m = mask;
            while (m) {
                pts[np++] = std::countr_zero(m);
                m &= m - 1;
            }
            for (int x = 0; x < np; ++x) {
                ++a.N1[static_cast<std::size_t>(pts[x]) * wn + static_cast<std::size_t>(w)];
                for (int y = x + 1; y < np; ++y)
                    ++a.N2[pair_rank(pts[x], pts[y]) * wn + static_cast<std::size_t>(w)];
            }
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
    A_.assign(wn, 0);
    N1_.assign(static_cast<std::size_t>(n_), std::vector<long long>(wn, 0));
    N2_.assign(pairs, std::vector<long long>(wn, 0));
    for (const auto& a : accs) {
        for (std::size_t w = 0; w < wn; ++w) A_[w] += a.A[w];
        for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i)
            for (std::size_t w = 0; w < wn; ++w) N1_[i][w] += a.N1[i * wn + w];
        for (std::size_t r = 0; r < pairs; ++r)
            for (std::size_t w = 0; w < wn; ++w) N2_[r][w] += a.N2[r * wn + w];
    }
}

JacobiPolynomial PairIncidenceTables::jacobi_of(std::uint64_t Tmask) const {
    int t = std::popcount(Tmask);
    if (t > 2) throw Error("PairIncidenceTables: |T| must be <= 2");
    JacobiPolynomial J;
    J.t = t;
    J.n = n_;
    auto put = [&](int m1, int w, long long c) {
        if (c) J.coeff[{m1, w - m1}] += c;
    };
    for (int w = 0; w <= n_; ++w) {
        if (t == 0) {
            put(0, w, A_[static_cast<std::size_t>(w)]);
        } else if (t == 1) {
            int i = std::countr_zero(Tmask);
            long long c1 = N1_[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)];
            put(1, w, c1);
            put(0, w, A_[static_cast<std::size_t>(w)] - c1);
        } else {
            int i = std::countr_zero(Tmask);
            int j = 63 - std::countl_zero(Tmask);
            long long both = N2_[pair_rank(i, j)][static_cast<std::size_t>(w)];
            long long ni = N1_[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)];
            long long nj = N1_[static_cast<std::size_t>(j)][static_cast<std::size_t>(w)];
            put(2, w, both);
            put(1, w, ni + nj - 2 * both);
            put(0, w, A_[static_cast<std::size_t>(w)] - ni - nj + both);
        }
    }
    return J;
}

JacobiPolynomial jacobi_conjugate_sum(const PairIncidenceTables& tables,
                                      const Permutation& sigma, int s, std::uint64_t Tmask) {
    JacobiPolynomial sum;
    sum.t = std::popcount(Tmask);
    sum.n = tables.n();
    std::uint64_t T = Tmask;
    for (int i = 0; i < s; ++i) {
        JacobiPolynomial J = tables.jacobi_of(T);
        if (i == 0) sum = J;
        else sum += J;
        T = apply_to_mask(sigma, T);
    }
    return sum;
}

ConjugateJacobi::ConjugateJacobi(const LinearCode& C, const Permutation& sigma, int s,
                                 const EnumOptions& opts)
    : sigma_(sigma), s_(s), base_(C, opts) {
    for (auto& cls : conjugate_intersections(C, sigma, s))
        overlap_legs_.push_back(Leg{PairIncidenceTables(cls.code, opts), cls.length, cls.sign});
}

JacobiPolynomial ConjugateJacobi::conjugate_sum(std::uint64_t Tmask) const {
    return jacobi_conjugate_sum(base_, sigma_, s_, Tmask);
}

JacobiPolynomial ConjugateJacobi::union_sum(std::uint64_t Tmask) const {
    JacobiPolynomial sum = conjugate_sum(Tmask);
    for (const auto& leg : overlap_legs_) {
        JacobiPolynomial part = jacobi_conjugate_sum(leg.tables, sigma_, leg.length, Tmask);
        for (const auto& [key, c] : part.coeff) {
            auto& dst = sum.coeff[key];
            dst += leg.sign * c;
            if (dst == 0) sum.coeff.erase(key);
        }
    }
    return sum;
}

JacobiPolynomial jacobi_conjugate_sum(const LinearCode& C, const Permutation& sigma, int s,
                                      std::uint64_t Tmask, const EnumOptions& opts,
                                      bool direct) {
    JacobiPolynomial sum;
    if (direct) {
        // enumerate each conjugate code separately
        for (int i = 0; i < s; ++i) {
            JacobiPolynomial J = jacobi(permute_code(C, perm_power(sigma, i)), Tmask, opts);
            if (i == 0) sum = J;
            else sum += J;
        }
        return sum;
    }
    std::uint64_t T = Tmask;
    for (int i = 0; i < s; ++i) {
        JacobiPolynomial J = jacobi(C, T, opts);
        if (i == 0) sum = J;
        else sum += J;
        T = apply_to_mask(sigma, T);
    }
    return sum;
}

namespace {

template <class Fn>
void for_each_subset_mask(int n, int t, Fn&& fn) {
    if (t == 0) { fn(std::uint64_t{0}); return; }
    std::uint64_t v = (std::uint64_t{1} << t) - 1;
    std::uint64_t limit = std::uint64_t{1} << n;
    while (v < limit) {
        fn(v);
        std::uint64_t c = v & -v;
        std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
}

} // namespace

IndependenceReport independence_check(const LinearCode& C, const Permutation& sigma, int s,
                                      int t, const EnumOptions& opts,
                                      const PermGroup* orbit_group) {
    IndependenceReport rep;
    if (orbit_group) {
        OrbitPartition orbits = orbits_on_ksubsets(*orbit_group, t);
        std::optional<JacobiPolynomial> first;
        std::uint64_t first_T = 0;
        for (const auto& orbit : orbits.orbits) {
            std::uint64_t T = orbit.front();
            JacobiPolynomial sum = jacobi_conjugate_sum(C, sigma, s, T, opts);
            // representativeness: J_{C,T} constant on the orbit (sampled member)
            if (orbit.size() > 1) {
                std::uint64_t other = orbit[orbit.size() / 2];
                if (!(jacobi(C, T, opts) == jacobi(C, other, opts)))
                    throw Error("independence_check: J_{C,T} not constant on an orbit");
            }
            ++rep.subsets_checked;
            if (!first) {
                first = sum;
                first_T = T;
            } else if (!(*first == sum)) {
                rep.witness_a = first_T;
                rep.witness_b = T;
                return rep;
            }
        }
        rep.independent = true;
        rep.common = std::move(first);
        return rep;
    }
    if (t > 2) throw Error("independence_check: full check implemented for t <= 2 only");
    if (binomial(C.n, t) > 1'000'000)
        throw TooManySubsets("independence_check: too many subsets");
    PairIncidenceTables tables(C, opts);
    std::optional<JacobiPolynomial> first;
    std::uint64_t first_T = 0;
    bool failed = false;
    for_each_subset_mask(C.n, t, [&](std::uint64_t T) {
        if (failed) return;
        JacobiPolynomial sum = jacobi_conjugate_sum(tables, sigma, s, T);
        ++rep.subsets_checked;
        if (!first) {
            first = std::move(sum);
            first_T = T;
        } else if (!(*first == sum)) {
            rep.witness_a = first_T;
            rep.witness_b = T;
            failed = true;
        }
    });
    if (!failed) {
        rep.independent = true;
        rep.common = std::move(first);
    }
    return rep;
}

long long lambda_from_jacobi(const JacobiPolynomial& sum, int ell, int t,
                             bool independence_verified) {
    if (!independence_verified)
        throw NotIndependent("lambda_from_jacobi: conjugate sum depends on T");
    return sum.at(t, ell - t);
}

} // namespace prc
