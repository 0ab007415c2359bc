#include "prc/designs.hpp"

#include <algorithm>
#include <bit>

namespace prc {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

// colex rank of the t-subset {i_1 < ... < i_t}: sum of C(i_j, j)
long long colex_rank(const int* pts, int t) {
    long long r = 0;
    for (int j = 0; j < t; ++j) r += binomial(pts[j], j + 1);
    return r;
}

template <class Fn>
void for_each_tsubset(const int* pts, int n, int t, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(t));
    std::vector<int> chosen(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        for (int i = 0; i < t; ++i)
            chosen[static_cast<std::size_t>(i)] = pts[idx[static_cast<std::size_t>(i)]];
        fn(chosen.data());
        int i = t - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - t + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::uint64_t mask_from_points(const int* pts, int t) {
    std::uint64_t m = 0;
    for (int i = 0; i < t; ++i) m |= std::uint64_t{1} << pts[i];
    return m;
}

} // namespace

DesignReport check_design(const BlockMultiset& B, int t) {
    DesignReport rep;
    rep.t = t;
    if (B.blocks.empty()) {
        rep.empty = true;
        rep.is_design = false;
        return rep;
    }
    int h = B.uniform_block_size();
    if (h < 0) throw NonUniformBlocks("check_design: blocks have mixed sizes");
    if (h < t) throw BlockSmallerThanT("check_design: block size below t");

    long long num_tsubsets = binomial(B.v, t);
    std::vector<long long> counts(static_cast<std::size_t>(num_tsubsets), 0);
    int pts[64];
    for (const auto& [mask, mult] : B.blocks) {
        int n = 0;
        std::uint64_t m = mask;
        while (m) {
            pts[n++] = std::countr_zero(m);
            m &= m - 1;
        }
        rep.block_count += mult;
        for_each_tsubset(pts, n, t, [&](const int* sub) {
            counts[static_cast<std::size_t>(colex_rank(sub, t))] += mult;
        });
    }
    rep.min_count = *std::min_element(counts.begin(), counts.end());
    rep.max_count = *std::max_element(counts.begin(), counts.end());
    rep.is_design = rep.min_count == rep.max_count;
    if (rep.is_design) {
        rep.lambda = rep.min_count;
    } else {
        // locate a minimal t-subset as witness
        std::vector<int> all(static_cast<std::size_t>(B.v));
        for (int i = 0; i < B.v; ++i) all[static_cast<std::size_t>(i)] = i;
        for_each_tsubset(all.data(), B.v, t, [&](const int* sub) {
            if (counts[static_cast<std::size_t>(colex_rank(sub, t))] == rep.min_count &&
                rep.witness == 0)
                rep.witness = mask_from_points(sub, t);
        });
    }
    return rep;
}

ShellsUnionContext::ShellsUnionContext(std::uint64_t p, std::uint64_t m, std::uint64_t q,
                                       const EnumOptions& opts)
    : code_(build_code(p, m, q)), sigma_(conjugating_permutation(p, m)) {
    Permutation inv = inverse(sigma_);
    Permutation cur = Permutation::identity(static_cast<int>(p));
    for (std::uint64_t i = 0; i < m; ++i) {
        support_maps_.push_back(cur);
        cur = compose(inv, cur);
    }
    by_weight_ = supports_by_weight(code_.code, opts);
    weights_.assign(by_weight_.size(), 0);
    for (std::size_t w = 0; w < by_weight_.size(); ++w)
        for (const auto& [mask, mult] : by_weight_[w]) weights_[w] += mult;
    for (auto& cls : conjugate_intersections(code_.code, sigma_, static_cast<int>(m))) {
        Leg leg;
        leg.by_weight = supports_by_weight(cls.code, opts);
        leg.length = cls.length;
        leg.sign = cls.sign;
        overlap_legs_.push_back(std::move(leg));
    }
}

BlockMultiset ShellsUnionContext::conjugate_shell(int ell, int i) const {
    BlockMultiset B;
    B.v = code_.code.n;
    const auto& pi = support_maps_.at(static_cast<std::size_t>(i));
    for (const auto& [mask, mult] : by_weight_.at(static_cast<std::size_t>(ell)))
        B.blocks[apply_to_mask(pi, mask)] += mult;
    return B;
}

BlockMultiset ShellsUnionContext::base_shell(int ell) const { return conjugate_shell(ell, 0); }

BlockMultiset ShellsUnionContext::shells_union(int ell) const {
    BlockMultiset B;
    B.v = code_.code.n;
    for (std::size_t i = 0; i < support_maps_.size(); ++i) {
        const auto& pi = support_maps_[i];
        for (const auto& [mask, mult] : by_weight_.at(static_cast<std::size_t>(ell)))
            B.blocks[apply_to_mask(pi, mask)] += mult;
    }
    for (const auto& leg : overlap_legs_) {
        for (int r = 0; r < leg.length; ++r) {
            const auto& pi = support_maps_[static_cast<std::size_t>(r)];
            for (const auto& [mask, mult] : leg.by_weight.at(static_cast<std::size_t>(ell)))
                B.blocks[apply_to_mask(pi, mask)] += leg.sign * mult;
        }
    }
    std::erase_if(B.blocks, [](const auto& kv) { return kv.second == 0; });
    return B;
}

BlockMultiset shells_union(std::uint64_t p, std::uint64_t m, std::uint64_t q, int ell,
                           const EnumOptions& opts) {
    return ShellsUnionContext(p, m, q, opts).shells_union(ell);
}

std::vector<TableRow> reproduce_table(std::uint64_t p, std::uint64_t m, std::uint64_t q,
                                      int ell_lo, int ell_hi, int t, const EnumOptions& opts) {
    ShellsUnionContext ctx(p, m, q, opts);
    std::vector<TableRow> rows;
    for (int ell = ell_lo; ell <= ell_hi; ++ell) {
        TableRow row;
        row.ell = ell;
        BlockMultiset B = ctx.shells_union(ell);
        if (B.empty()) {
            row.empty_shell = true;
        } else {
            DesignReport rep = check_design(B, t);
            row.is_design = rep.is_design;
            row.lambda = rep.lambda;
            row.blocks = rep.block_count;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace prc
