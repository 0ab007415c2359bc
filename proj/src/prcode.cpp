#include "prc/prcode.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace prc {

ResidueCosets residue_cosets(std::uint64_t p, std::uint64_t m) {
    if (!is_prime(p)) throw Error("residue_cosets: p not prime");
    if (m < 2 || (p - 1) % m != 0)
        throw NotDivisor("residue_cosets: m must divide p-1 and be >= 2");
    ResidueCosets rc;
    rc.p = p;
    rc.m = m;
    rc.primitive_root = smallest_primitive_root(p);
    rc.cosets.resize(m);
    // x in F_p^* lies in coset g^(ind(x) mod m) A_0; enumerate by powers of g.
    std::uint64_t x = 1;
    for (std::uint64_t e = 0; e < p - 1; ++e) {
        rc.cosets[e % m].push_back(x);
        x = mul_mod(x, rc.primitive_root, p);
    }
    for (auto& c : rc.cosets) std::sort(c.begin(), c.end());
    return rc;
}

Poly coset_generator_polynomial(std::uint64_t p, std::uint64_t m, std::uint64_t q,
                                std::size_t coset_index) {
    ResidueCosets rc = residue_cosets(p, m);
    PthRoot root = primitive_pth_root(q, p);
    const ExtField& K = root.field;

    // product of (x - alpha^a), held as a polynomial with ExtField coefficients
    std::vector<ExtField::Elem> prod{K.one()};
    for (std::uint64_t a : rc.cosets.at(coset_index)) {
        ExtField::Elem r = K.neg(K.pow(root.alpha, a));
        std::vector<ExtField::Elem> next(prod.size() + 1, K.zero());
        for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] = K.add(next[i + 1], prod[i]);
            next[i] = K.add(next[i], K.mul(prod[i], r));
        }
        prod = std::move(next);
    }
    Poly g;
    g.c.resize(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) {
        if (prod[i].degree() > 0)
            throw CoefficientOutsideBaseField(
                "coset_generator_polynomial: coefficient of x^" + std::to_string(i) +
                " lies outside F_q");
        g.c[i] = prod[i].is_zero() ? 0 : prod[i].c[0];
    }
    return poly_trim(std::move(g));
}

Poly generator_polynomial(std::uint64_t p, std::uint64_t m, std::uint64_t q) {
    ResidueCosets rc = residue_cosets(p, m);
    const auto& A0 = rc.cosets[0];
    if (!std::binary_search(A0.begin(), A0.end(), q % p))
        throw NotResidue("generator_polynomial: q is not an m-th power residue mod p");
    Poly g = coset_generator_polynomial(p, m, q, 0);
    // g must divide x^p - 1 over F_q
    PrimeField F(q);
    Poly xp1;
    xp1.c.assign(p + 1, 0);
    xp1.c[0] = F.neg(1);
    xp1.c[p] = 1;
    if (!poly_divides(F, g, xp1))
        throw Error("generator_polynomial: product does not divide x^p - 1");
    return g;
}

CyclicCode build_code(std::uint64_t p, std::uint64_t m, std::uint64_t q) {
    CyclicCode C;
    C.p = p;
    C.m = m;
    C.q = q;
    C.generator = generator_polynomial(p, m, q);
    int k = static_cast<int>(p) - C.generator.degree();
    C.code.n = static_cast<int>(p);
    C.code.q = q;
    C.code.rows.assign(static_cast<std::size_t>(k), std::vector<std::uint8_t>(p, 0));
    for (int r = 0; r < k; ++r)
        for (int i = 0; i <= C.generator.degree(); ++i)
            C.code.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] =
                static_cast<std::uint8_t>(C.generator.c[static_cast<std::size_t>(i)]);
    return C;
}

std::uint64_t code_size(const LinearCode& C) {
    std::uint64_t n = 1;
    for (int j = 0; j < C.dim(); ++j) {
        if (n > UINT64_MAX / C.q) throw Error("code_size: overflows 64 bits");
        n *= C.q;
    }
    return n;
}

std::uint64_t code_size_checked(const LinearCode& C, std::uint64_t cap) {
    std::uint64_t n = code_size(C);
    if (n > cap)
        throw CapExceeded("enumeration cap exceeded: need " + std::to_string(n) +
                              " codewords, cap is " + std::to_string(cap),
                          n);
    return n;
}

namespace {

template <class Acc, class Fn>
std::vector<Acc> enumerate_accumulate(const LinearCode& C, const EnumOptions& opts,
                                      const Acc& init, Fn fn) {
    std::uint64_t total = code_size_checked(C, opts.cap);
    int threads = std::max(1, opts.threads);
    if (total < 4096) threads = 1;
    std::vector<Acc> accs(static_cast<std::size_t>(threads), init);
    if (threads == 1) {
        enumerate_range(C, 0, total,
                        [&](const std::uint8_t* e, std::uint64_t mask, int w) { fn(accs[0], e, mask, w); });
        return accs;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t begin = total / static_cast<std::uint64_t>(threads) * static_cast<std::uint64_t>(t);
        std::uint64_t end = (t + 1 == threads)
                                ? total
                                : total / static_cast<std::uint64_t>(threads) * static_cast<std::uint64_t>(t + 1);
        pool.emplace_back([&, t, begin, end] {
            enumerate_range(C, begin, end, [&, t](const std::uint8_t* e, std::uint64_t mask, int w) {
                fn(accs[static_cast<std::size_t>(t)], e, mask, w);
            });
        });
    }
    for (auto& th : pool) th.join();
    return accs;
}

} // namespace

std::vector<long long> weight_distribution(const LinearCode& C, const EnumOptions& opts) {
    using Acc = std::vector<long long>;
    Acc init(static_cast<std::size_t>(C.n) + 1, 0);
    auto partials = enumerate_accumulate(C, opts, init,
                                         [](Acc& a, const std::uint8_t*, std::uint64_t, int w) {
                                             ++a[static_cast<std::size_t>(w)];
                                         });
    Acc total = std::move(partials[0]);
    for (std::size_t t = 1; t < partials.size(); ++t)
        for (std::size_t w = 0; w < total.size(); ++w) total[w] += partials[t][w];
    return total;
}

std::vector<std::map<std::uint64_t, long long>> supports_by_weight(const LinearCode& C,
                                                                   const EnumOptions& opts) {
    using Acc = std::vector<std::map<std::uint64_t, long long>>;
    Acc init(static_cast<std::size_t>(C.n) + 1);
    auto partials = enumerate_accumulate(C, opts, init,
                                         [](Acc& a, const std::uint8_t*, std::uint64_t mask, int w) {
                                             ++a[static_cast<std::size_t>(w)][mask];
                                         });
    Acc total = std::move(partials[0]);
    for (std::size_t t = 1; t < partials.size(); ++t)
        for (std::size_t w = 0; w < total.size(); ++w)
            for (const auto& [mask, mult] : partials[t][w]) total[w][mask] += mult;
    return total;
}

BlockMultiset shell(const LinearCode& C, int ell, const EnumOptions& opts) {
    if (ell < 0 || ell > C.n) throw Error("shell: weight out of range");
    using Acc = std::map<std::uint64_t, long long>;
    auto partials = enumerate_accumulate(C, opts, Acc{},
                                         [ell](Acc& a, const std::uint8_t*, std::uint64_t mask, int w) {
                                             if (w == ell) ++a[mask];
                                         });
    BlockMultiset B;
    B.v = C.n;
    B.blocks = std::move(partials[0]);
    for (std::size_t t = 1; t < partials.size(); ++t)
        for (const auto& [mask, mult] : partials[t]) B.blocks[mask] += mult;
    return B;
}

LinearCode permute_code(const LinearCode& C, const Permutation& pi) {
    if (pi.degree() != C.n) throw Error("permute_code: degree mismatch");
    LinearCode D;
    D.n = C.n;
    D.q = C.q;
    D.rows.assign(C.rows.size(), std::vector<std::uint8_t>(static_cast<std::size_t>(C.n), 0));
    for (std::size_t r = 0; r < C.rows.size(); ++r)
        for (int i = 0; i < C.n; ++i)
            D.rows[r][static_cast<std::size_t>(i)] = C.rows[r][static_cast<std::size_t>(pi(i))];
    return D;
}

namespace {

// Row echelon form mod q; returns (echelon rows, pivot columns).
void echelonize(std::uint64_t q, std::vector<std::vector<std::uint8_t>>& rows,
                std::vector<int>& pivots) {
    PrimeField F(q);
    pivots.clear();
    if (rows.empty()) return;
    int n = static_cast<int>(rows[0].size());
    std::size_t rank = 0;
    for (int col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        std::uint64_t inv = F.inv(rows[rank][static_cast<std::size_t>(col)]);
        for (int i = col; i < n; ++i)
            rows[rank][static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
                F.mul(rows[rank][static_cast<std::size_t>(i)], inv));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            std::uint64_t f = rows[r][static_cast<std::size_t>(col)];
            if (!f) continue;
            for (int i = col; i < n; ++i)
                rows[r][static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
                    F.sub(rows[r][static_cast<std::size_t>(i)],
                          F.mul(f, rows[rank][static_cast<std::size_t>(i)])));
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
}

} // namespace

LinearCode dual(const LinearCode& C) {
    PrimeField F(C.q);
    auto rows = C.rows;
    std::vector<int> pivots;
    echelonize(C.q, rows, pivots);
    int n = C.n;
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int pcol : pivots) is_pivot[static_cast<std::size_t>(pcol)] = 1;

    LinearCode D;
    D.n = n;
    D.q = C.q;
    // standard nullspace basis: one vector per free column
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<std::uint8_t> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(free_col)] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = static_cast<std::uint8_t>(
                F.neg(rows[r][static_cast<std::size_t>(free_col)]));
        D.rows.push_back(std::move(v));
    }
    return D;
}

LinearCode intersection_code(const LinearCode& A, const LinearCode& B) {
    // A cap B = dual of (dual A + dual B)
    LinearCode S = dual(A);
    for (const auto& r : dual(B).rows) S.rows.push_back(r);
    return dual(S);
}

std::vector<ConjugateIntersection> conjugate_intersections(const LinearCode& C,
                                                           const Permutation& sigma, int s) {
    std::vector<LinearCode> conj;
    conj.reserve(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) conj.push_back(permute_code(C, perm_power(sigma, i)));

    auto rotate = [s](unsigned set, int r) {
        unsigned full = (1u << s) - 1;
        return ((set << r) | (set >> (s - r))) & full;
    };
    // one representative per rotation class of subsets of Z/s, |S| >= 2
    std::vector<ConjugateIntersection> out;
    for (unsigned set = 3; set < (1u << s); ++set) {
        int size = std::popcount(set);
        if (size < 2 || (set & 1u) == 0) continue;
        int length = s;
        bool canonical = true;
        for (int r = 1; r < s; ++r) {
            unsigned rot = rotate(set, r);
            if (rot < set) { canonical = false; break; }
            if (rot == set) { length = std::min(length, r); }
        }
        if (!canonical) continue;
        ConjugateIntersection cls;
        cls.length = length;
        cls.sign = (size % 2 == 0) ? -1 : 1;
        cls.code = conj[0];
        for (int i = 1; i < s; ++i)
            if (set & (1u << i)) cls.code = intersection_code(cls.code, conj[static_cast<std::size_t>(i)]);
        out.push_back(std::move(cls));
    }
    return out;
}

CodeMembership::CodeMembership(const LinearCode& C) : n_(C.n), q_(C.q), echelon_(C.rows) {
    echelonize(q_, echelon_, pivot_);
}

bool CodeMembership::contains(const std::vector<std::uint8_t>& word) const {
    if (static_cast<int>(word.size()) != n_) return false;
    PrimeField F(q_);
    std::vector<std::uint8_t> w = word;
    for (std::size_t r = 0; r < echelon_.size(); ++r) {
        std::uint64_t f = w[static_cast<std::size_t>(pivot_[r])];
        if (!f) continue;
        for (int i = 0; i < n_; ++i)
            w[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
                F.sub(w[static_cast<std::size_t>(i)], F.mul(f, echelon_[r][static_cast<std::size_t>(i)])));
    }
    return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

bool same_codeword_set(const LinearCode& A, const LinearCode& B) {
    if (A.n != B.n || A.q != B.q) return false;
    CodeMembership ma(A), mb(B);
    if (ma.rank() != mb.rank()) return false;
    for (const auto& row : B.rows)
        if (!ma.contains(row)) return false;
    return true;
}

bool verify_conjugate_code(const CyclicCode& C, const Permutation& pi, int power) {
    PrimeField F(C.q);
    LinearCode D = permute_code(C.code, perm_power(pi, power));
    Poly g = coset_generator_polynomial(C.p, C.m, C.q,
                                        static_cast<std::size_t>(power % static_cast<int>(C.m)));
    for (const auto& row : D.rows) {
        Poly rp;
        rp.c.assign(row.begin(), row.end());
        rp = poly_trim(std::move(rp));
        if (!poly_divides(F, g, rp)) return false;
    }
    return true;
}

std::string export_code(const CyclicCode& C) {
    std::ostringstream out;
    out << C.p << ' ' << C.m << ' ' << C.q << ' ' << C.code.dim() << '\n';
    for (std::size_t i = 0; i < C.generator.c.size(); ++i)
        out << (i ? " " : "") << C.generator.c[i];
    out << '\n';
    for (const auto& row : C.code.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << unsigned{row[i]};
        out << '\n';
    }
    return out.str();
}

CyclicCode import_code(const std::string& text) {
    std::istringstream in(text);
    CyclicCode C;
    int k = 0;
    if (!(in >> C.p >> C.m >> C.q >> k)) throw ParseError("import_code: bad header");
    C.generator.c.clear();
    int gdeg = static_cast<int>(C.p) - k;
    for (int i = 0; i <= gdeg; ++i) {
        std::uint64_t c;
        if (!(in >> c)) throw ParseError("import_code: truncated generator polynomial");
        C.generator.c.push_back(c);
    }
    C.generator = poly_trim(std::move(C.generator));
    C.code.n = static_cast<int>(C.p);
    C.code.q = C.q;
    C.code.rows.assign(static_cast<std::size_t>(k),
                       std::vector<std::uint8_t>(static_cast<std::size_t>(C.p), 0));
    for (int r = 0; r < k; ++r)
        for (std::uint64_t i = 0; i < C.p; ++i) {
            unsigned v;
            if (!(in >> v)) throw ParseError("import_code: truncated generator matrix");
            C.code.rows[static_cast<std::size_t>(r)][i] = static_cast<std::uint8_t>(v);
        }
    return C;
}

} // namespace prc
