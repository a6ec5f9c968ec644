// boson_poly.hpp -- normal-ordered polynomial algebra for two bosonic modes.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace cascade {

using complexd = std::complex<double>;

// Exponents of a normal-ordered monomial a1^dag^e[0] a1^e[1] a2^dag^e[2] a2^e[3].
using BosonExponents = std::array<int, 4>;

// Sparse polynomial in the two-mode ladder operators, kept in normal order.
// Arithmetic is exact (integer combinatorics), so reordering identities hold
// to machine precision.
class BosonPoly {
  public:
    std::map<BosonExponents, complexd> terms;

    BosonPoly() = default;
    explicit BosonPoly(complexd c) {
        if (c != complexd(0.0)) terms[{0, 0, 0, 0}] = c;
    }

    // ladder operator of one mode; mode in {0, 1}
    static BosonPoly ladder(int mode, bool dagger) {
        BosonPoly p;
        BosonExponents e{0, 0, 0, 0};
        e[2 * mode + (dagger ? 0 : 1)] = 1;
        p.terms[e] = 1.0;
        return p;
    }

    static BosonPoly one() { return BosonPoly(complexd(1.0)); }

    BosonPoly dagger() const {
        BosonPoly out;
        for (const auto& [e, c] : terms) {
            BosonExponents f{e[1], e[0], e[3], e[2]};
            out.terms[f] += std::conj(c);
        }
        out.prune();
        return out;
    }

    BosonPoly& operator+=(const BosonPoly& o) {
        for (const auto& [e, c] : o.terms) terms[e] += c;
        prune();
        return *this;
    }
    BosonPoly operator+(const BosonPoly& o) const {
        BosonPoly out = *this;
        out += o;
        return out;
    }
    BosonPoly operator-(const BosonPoly& o) const { return *this + (complexd(-1.0) * o); }
    friend BosonPoly operator*(complexd s, const BosonPoly& p) {
        BosonPoly out;
        if (s == complexd(0.0)) return out;
        for (const auto& [e, c] : p.terms) out.terms[e] = s * c;
        return out;
    }

    BosonPoly operator*(const BosonPoly& o) const {
        BosonPoly out;
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                // reorder per mode: a^q a^dag^r = sum_k k! C(q,k) C(r,k) a^dag^(r-k) a^(q-k)
                for (int k1 = 0; k1 <= std::min(e1[1], e2[0]); ++k1)
                    for (int k2 = 0; k2 <= std::min(e1[3], e2[2]); ++k2) {
                        double w = reorder_weight(e1[1], e2[0], k1) *
                                   reorder_weight(e1[3], e2[2], k2);
                        BosonExponents f{e1[0] + e2[0] - k1, e1[1] + e2[1] - k1,
                                         e1[2] + e2[2] - k2, e1[3] + e2[3] - k2};
                        out.terms[f] += w * c1 * c2;
                    }
            }
        out.prune();
        return out;
    }

    // total degree of the highest monomial
    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms) {
            (void)c;
            d = std::max(d, e[0] + e[1] + e[2] + e[3]);
        }
        return d;
    }

    complexd coeff(const BosonExponents& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? complexd(0.0) : it->second;
    }

  private:
    static double reorder_weight(int q, int r, int k) {
        // k! C(q,k) C(r,k)
        double w = 1.0;
        for (int j = 0; j < k; ++j)
            w *= static_cast<double>((q - j) * (r - j)) / (j + 1);
        double fact = 1.0;
        for (int j = 2; j <= k; ++j) fact *= j;
        return w * fact;
    }

    void prune() {
        for (auto it = terms.begin(); it != terms.end();) {
            if (std::abs(it->second) == 0.0)
                it = terms.erase(it);
            else
                ++it;
        }
    }
};

inline BosonPoly commutator(const BosonPoly& a, const BosonPoly& b) { return a * b - b * a; }

}  // namespace cascade
