#include "prc/io.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <nlohmann/json.hpp>

#include "prc/errors.hpp"

namespace prc {

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad rational: " + s);
    }
}

std::string format_blocks(const BlockMultiset& B) {
    std::ostringstream out;
    out << B.v << ' ' << std::max(0, B.uniform_block_size()) << '\n';
    for (const auto& [mask, mult] : B.blocks) {
        std::uint64_t m = mask;
        bool first = true;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            out << (first ? "" : " ") << i;
            first = false;
        }
        out << " * " << mult << '\n';
    }
    return out.str();
}

BlockMultiset parse_blocks(const std::string& text) {
    std::istringstream in(text);
    BlockMultiset B;
    int h = 0;
    std::string header;
    if (!std::getline(in, header)) throw ParseError("parse_blocks: empty input");
    {
        std::istringstream hs(header);
        if (!(hs >> B.v >> h)) throw ParseError("parse_blocks: bad header");
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::uint64_t mask = 0;
        std::string tok;
        long long mult = -1;
        while (ls >> tok) {
            if (tok == "*") {
                if (!(ls >> mult)) throw ParseError("parse_blocks: missing multiplicity");
                break;
            }
            int p = std::stoi(tok);
            if (p < 0 || p >= B.v) throw ParseError("parse_blocks: point out of range");
            mask |= std::uint64_t{1} << p;
        }
        if (mult < 1) throw ParseError("parse_blocks: bad multiplicity");
        B.blocks[mask] += mult;
    }
    return B;
}

std::string format_jacobi_text(const JacobiPolynomial& J) {
    // keys (m1, n1); sort by (b, d) = (m1, n1) ascending
    std::ostringstream out;
    for (const auto& [key, coeff] : J.coeff) {
        auto [m1, n1] = key;
        int m0 = J.t - m1;
        int n0 = J.n - J.t - n1;
        out << coeff;
        if (m0) out << " w^" << m0;
        if (m1) out << " z^" << m1;
        if (n0) out << " x^" << n0;
        if (n1) out << " y^" << n1;
        out << '\n';
    }
    return out.str();
}

std::string format_jacobi_json(const JacobiPolynomial& J) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, coeff] : J.coeff) {
        auto [m1, n1] = key;
        arr.push_back({{"m0", J.t - m1},
                       {"m1", m1},
                       {"n0", J.n - J.t - n1},
                       {"n1", n1},
                       {"coeff", coeff}});
    }
    return arr.dump(2);
}

std::string format_subset_function(const SubsetFunction& f) {
    std::ostringstream out;
    for (const auto& [mask, val] : f.values) {
        std::uint64_t m = mask;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            out << i << ' ';
        }
        out << rat_to_string(val) << '\n';
    }
    return out.str();
}

SubsetFunction parse_subset_function(const std::string& text, int v) {
    std::istringstream in(text);
    SubsetFunction f;
    f.v = v;
    f.k = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.size() < 2) throw ParseError("parse_subset_function: short line");
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
            int p = std::stoi(toks[i]);
            if (p < 0 || p >= v) throw ParseError("parse_subset_function: point out of range");
            mask |= std::uint64_t{1} << p;
        }
        int k = std::popcount(mask);
        if (f.k == -1) f.k = k;
        else if (f.k != k) throw ParseError("parse_subset_function: mixed subset sizes");
        f.values[mask] = rat_from_string(toks.back());
    }
    if (f.k == -1) f.k = 0;
    return f;
}

std::string format_enumerator(const WeightEnumerator& e) {
    std::ostringstream out;
    for (std::size_t w = 0; w < e.size(); ++w)
        if (e[w] != 0) out << w << ' ' << rat_to_string(e[w]) << '\n';
    return out.str();
}

} // namespace prc
