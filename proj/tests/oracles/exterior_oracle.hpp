#pragma once

// Independent model of the Heisenberg algebra Lambda(x, y, z), dz = xy, on
// its explicit 8-element exterior basis. Basis elements are bitmasks
// (bit 0 = x, bit 1 = y, bit 2 = z); cochains are integer coefficient maps.
// Nothing here uses the library.

#include "oracles/bareiss.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle::heisenberg {

using Cochain = std::map<unsigned, std::int64_t>;

inline int sign_of_wedge(unsigned s, unsigned t) {
    int swaps = 0;
    for (unsigned j = 0; j < 3; ++j)
        if (t & (1u << j))
            for (unsigned i = j + 1; i < 3; ++i)
                if (s & (1u << i)) ++swaps;
    return swaps % 2 ? -1 : 1;
}

inline Cochain wedge(const Cochain& a, const Cochain& b) {
    Cochain out;
    for (auto [s, cs] : a)
        for (auto [t, ct] : b) {
            if (s & t) continue;
            out[s | t] += sign_of_wedge(s, t) * cs * ct;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline Cochain generator_differential(unsigned bit) {
    if (bit == 2) return {{0b011u, 1}};  // dz = xy
    return {};
}

inline Cochain d(const Cochain& a) {
    Cochain out;
    for (auto [s, c] : a) {
        int before = 0;
        for (unsigned i = 0; i < 3; ++i) {
            if (!(s & (1u << i))) continue;
            unsigned lower = s & ((1u << i) - 1);
            unsigned upper = s & ~((1u << (i + 1)) - 1);
            Cochain term = wedge(wedge({{lower, 1}}, generator_differential(i)), {{upper, 1}});
            for (auto [t, ct] : term) out[t] += (before % 2 ? -1 : 1) * c * ct;
            ++before;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline std::vector<unsigned> basis(int degree) {
    std::vector<unsigned> out;
    for (unsigned s = 0; s < 8; ++s)
        if (std::popcount(s) == degree) out.push_back(s);
    return out;
}

inline std::size_t rank_of_d(int degree) {
    if (degree < 0 || degree >= 3) return 0;
    auto cols = basis(degree), rows = basis(degree + 1);
    IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Cochain img = d({{cols[c], 1}});
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (img.contains(rows[r])) m[r][c] = img[rows[r]];
    }
    return fraction_free_rref(m).pivots.size();
}

inline std::vector<std::size_t> betti() {
    std::vector<std::size_t> out;
    for (int n = 0; n <= 3; ++n) out.push_back(basis(n).size() - rank_of_d(n) - rank_of_d(n - 1));
    return out;
}

/// Every integer degree-1 cochain with coefficients in [-2, 2].
inline std::vector<Cochain> small_one_cochains() {
    std::vector<Cochain> out;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                Cochain v;
                if (a) v[0b001] = a;
                if (b) v[0b010] = b;
                if (c) v[0b100] = c;
                out.push_back(v);
            }
    return out;
}

/// All representatives of <[x], [x], [y]> reachable with small witnesses.
inline std::vector<Cochain> massey_xxy_representatives() {
    const Cochain x{{0b001, 1}}, y{{0b010, 1}};
    const Cochain xbar{{0b001, -1}};
    std::vector<Cochain> xs, ys;
    for (const auto& w : small_one_cochains()) {
        if (d(w) == wedge(xbar, x)) xs.push_back(w);
        if (d(w) == wedge(xbar, y)) ys.push_back(w);
    }
    std::vector<Cochain> reps;
    for (const auto& wx : xs)
        for (const auto& wy : ys) {
            Cochain wxbar = wx;
            for (auto& [k, v] : wxbar) v = -v;  // degree 1
            Cochain r = wedge(xbar, wy);
            for (auto [k, v] : wedge(wxbar, y)) r[k] += v;
            std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
            reps.push_back(r);
        }
    return reps;
}

}  // namespace oracle::heisenberg
