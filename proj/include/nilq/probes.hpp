#pragma once

#include <cstdint>
#include <vector>

#include "nilq/module.hpp"
#include "nilq/rng.hpp"

namespace nilq {

/// Randomized isomorphism test: draw random combinations of a Hom basis
/// and look for one that is invertible at every vertex. A `true` is a
/// certificate; a `false` only says "not proven isomorphic".
template <ExactField F>
bool iso_probe(const Module<F>& m, const Module<F>& n, Rng& rng, int trials = 20) {
    if (m.dims != n.dims) return false;
    if (m.is_zero()) return true;
    const HomSpace<F> hs = hom_basis(m, n);
    if (hs.dim() == 0) return false;
    const F& f = m.field;
    for (int t = 0; t < trials; ++t) {
        VertexMaps<F> g;
        for (std::size_t v = 0; v < m.dims.size(); ++v)
            g.emplace_back(f, static_cast<std::size_t>(n.dims[v]),
                           static_cast<std::size_t>(m.dims[v]));
        for (std::size_t b = 0; b < hs.dim(); ++b) {
            const auto c = f.random(rng);
            if (f.is_zero(c)) continue;
            for (std::size_t v = 0; v < g.size(); ++v) g[v] = g[v] + hs.basis[b][v].scaled(c);
        }
        bool invertible = true;
        for (std::size_t v = 0; v < g.size() && invertible; ++v)
            if (m.dims[v] > 0 && !g[v].is_invertible()) invertible = false;
        if (invertible) return true;
    }
    return false;
}

namespace detail {

/// Characteristic polynomial via Hessenberg reduction; works over any
/// exact field. Returned coefficients are monic, lowest degree first.
template <ExactField F>
Vec<F> char_poly(const Matrix<F>& a) {
    const F& f = a.field();
    const std::size_t n = a.rows();
    Matrix<F> h = a;
    // reduce to upper Hessenberg form by exact similarity transforms
    for (std::size_t col = 0; col + 2 < n; ++col) {
        std::size_t pivot = col + 1;
        while (pivot < n && f.is_zero(h.at(pivot, col))) ++pivot;
        if (pivot == n) continue;
        if (pivot != col + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h.at(col + 1, j), h.at(pivot, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, col + 1), h.at(i, pivot));
        }
        const auto inv = f.inv(h.at(col + 1, col));
        for (std::size_t row = col + 2; row < n; ++row) {
            const auto c = f.mul(h.at(row, col), inv);
            if (f.is_zero(c)) continue;
            for (std::size_t j = 0; j < n; ++j)
                h.at(row, j) = f.sub(h.at(row, j), f.mul(c, h.at(col + 1, j)));
            for (std::size_t i = 0; i < n; ++i)
                h.at(i, col + 1) = f.add(h.at(i, col + 1), f.mul(c, h.at(i, row)));
        }
    }
    // char polys of leading principal Hessenberg minors, by recurrence
    std::vector<Vec<F>> p(n + 1);
    p[0] = {f.one()};
    for (std::size_t k = 1; k <= n; ++k) {
        // p_k(x) = (x - h[k-1][k-1]) p_{k-1}(x)
        //          - sum_{m=1..k-1} h[k-1-m][k-1] (prod of subdiagonals) p_{k-1-m}(x)
        Vec<F> pk(k + 1, f.zero());
        for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
            pk[i + 1] = f.add(pk[i + 1], p[k - 1][i]);
            pk[i] = f.sub(pk[i], f.mul(h.at(k - 1, k - 1), p[k - 1][i]));
        }
        auto sub_prod = f.one();
        for (std::size_t m = 1; m < k; ++m) {
            sub_prod = f.mul(sub_prod, h.at(k - m, k - m - 1));
            if (f.is_zero(sub_prod)) break;
            const auto coef = f.mul(h.at(k - 1 - m, k - 1), sub_prod);
            if (f.is_zero(coef)) continue;
            for (std::size_t i = 0; i < p[k - 1 - m].size(); ++i)
                pk[i] = f.sub(pk[i], f.mul(coef, p[k - 1 - m][i]));
        }
        p[k] = std::move(pk);
    }
    return p[n];
}

template <ExactField F>
Vec<F> poly_mod(const F& f, Vec<F> a, const Vec<F>& m) {
    // m monic
    while (a.size() >= m.size() && !a.empty()) {
        if (f.is_zero(a.back())) {
            a.pop_back();
            continue;
        }
        const auto c = a.back();
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
        while (!a.empty() && f.is_zero(a.back())) a.pop_back();
    }
    return a;
}

template <ExactField F>
Vec<F> poly_gcd(const F& f, Vec<F> a, Vec<F> b) {
    auto trim = [&f](Vec<F>& p) {
        while (!p.empty() && f.is_zero(p.back())) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic, then reduce
        const auto inv = f.inv(b.back());
        for (auto& c : b) c = f.mul(c, inv);
        Vec<F> r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const auto inv = f.inv(a.back());
        for (auto& c : a) c = f.mul(c, inv);
    }
    return a;
}

template <ExactField F>
typename F::Elem poly_eval(const F& f, const Vec<F>& p, const typename F::Elem& x) {
    auto acc = f.zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
    return acc;
}

/// x^e mod m over F_p, by binary exponentiation on polynomials.
inline Vec<PrimeField> poly_powmod_x(const PrimeField& f, std::uint64_t e,
                                     const Vec<PrimeField>& m) {
    Vec<PrimeField> result{f.one()};
    Vec<PrimeField> base = poly_mod(f, Vec<PrimeField>{f.zero(), f.one()}, m);
    auto mul = [&](const Vec<PrimeField>& a, const Vec<PrimeField>& b) {
        if (a.empty() || b.empty()) return Vec<PrimeField>{};
        Vec<PrimeField> prod(a.size() + b.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
        return poly_mod(f, std::move(prod), m);
    };
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

/// Distinct roots in F_p of a monic polynomial: split off gcd(x^p - x, f),
/// then extract roots (scan for small p, Cantor-Zassenhaus style splitting
/// for large p).
inline std::vector<std::uint64_t> distinct_roots(const PrimeField& f, const Vec<PrimeField>& poly,
                                                 Rng& rng) {
    const std::uint64_t p = f.p();
    if (p <= 4096) {
        std::vector<std::uint64_t> roots;
        for (std::uint64_t x = 0; x < p; ++x)
            if (f.is_zero(poly_eval(f, poly, x))) roots.push_back(x);
        return roots;
    }
    Vec<PrimeField> xp = poly_powmod_x(f, p, poly);
    // x^p - x
    if (xp.size() < 2) xp.resize(2, f.zero());
    xp[1] = f.sub(xp[1], f.one());
    Vec<PrimeField> lin = poly_gcd(f, poly, xp);
    std::vector<std::uint64_t> roots;
    std::vector<Vec<PrimeField>> stack{lin};
    while (!stack.empty()) {
        Vec<PrimeField> g = stack.back();
        stack.pop_back();
        if (g.size() <= 1) continue;
        if (g.size() == 2) {  // x + c
            roots.push_back(f.neg(g[0]));
            continue;
        }
        // random shift split: gcd((x+a)^((p-1)/2) - 1, g)
        for (;;) {
            const std::uint64_t a = f.random(rng);
            Vec<PrimeField> shifted{a, f.one()};  // x + a
            // (x+a)^((p-1)/2) mod g
            Vec<PrimeField> acc{f.one()};
            Vec<PrimeField> base = poly_mod(f, shifted, g);
            std::uint64_t e = (p - 1) / 2;
            auto mulmod = [&](const Vec<PrimeField>& u, const Vec<PrimeField>& v) {
                if (u.empty() || v.empty()) return Vec<PrimeField>{};
                Vec<PrimeField> prod(u.size() + v.size() - 1, f.zero());
                for (std::size_t i = 0; i < u.size(); ++i)
                    for (std::size_t j = 0; j < v.size(); ++j)
                        prod[i + j] = f.add(prod[i + j], f.mul(u[i], v[j]));
                return poly_mod(f, std::move(prod), g);
            };
            while (e) {
                if (e & 1) acc = mulmod(acc, base);
                base = mulmod(base, base);
                e >>= 1;
            }
            if (acc.empty())
                acc = {f.neg(f.one())};
            else
                acc[0] = f.sub(acc[0], f.one());
            Vec<PrimeField> h = poly_gcd(f, g, acc);
            if (h.size() > 1 && h.size() < g.size()) {
                // divide g by h: quotient via repeated reduction
                Vec<PrimeField> q;
                Vec<PrimeField> rem = g;
                while (rem.size() >= h.size()) {
                    const std::size_t deg = rem.size() - h.size();
                    const auto c = rem.back();
                    if (q.size() < deg + 1) q.resize(deg + 1, f.zero());
                    q[deg] = c;
                    for (std::size_t i = 0; i < h.size(); ++i)
                        rem[deg + i] = f.sub(rem[deg + i], f.mul(c, h[i]));
                    while (!rem.empty() && f.is_zero(rem.back())) rem.pop_back();
                    if (rem.empty()) break;
                }
                stack.push_back(std::move(h));
                stack.push_back(std::move(q));
                break;
            }
        }
    }
    return roots;
}

/// Rational roots of a polynomial over Q: rational root theorem on the
/// integer-scaled polynomial, with capped divisor enumeration. Missing a
/// root of a wild polynomial only costs a split attempt, never correctness.
inline std::vector<mpq_class> distinct_roots(const Rationals& f, const Vec<Rationals>& poly,
                                             Rng&) {
    std::vector<mpq_class> roots;
    Vec<Rationals> p = poly;
    while (!p.empty() && f.is_zero(p.back())) p.pop_back();
    if (p.empty()) return roots;
    std::size_t low = 0;
    while (low < p.size() && f.is_zero(p[low])) ++low;
    if (low > 0) roots.push_back(mpq_class(0));
    if (low >= p.size() - 1) return roots;
    mpz_class lcm = 1;
    for (std::size_t i = low; i < p.size(); ++i) {
        mpz_class den = p[i].get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<mpz_class> z;
    for (std::size_t i = low; i < p.size(); ++i)
        z.push_back(mpz_class(p[i].get_num() * (lcm / p[i].get_den())));
    const mpz_class a0 = abs(z.front());
    const mpz_class an = abs(z.back());
    auto small_divisors = [](const mpz_class& n) {
        std::vector<mpz_class> out;
        for (mpz_class d = 1; d * d <= n && d <= 100000; ++d)
            if (n % d == 0) {
                out.push_back(d);
                if (d * d != n) out.push_back(n / d);
            }
        return out;
    };
    std::vector<mpq_class> candidates;
    const auto dens = small_divisors(an);
    for (const auto& num : small_divisors(a0))
        for (const auto& den : dens) {
            if (candidates.size() > 20000) break;
            for (int sign : {1, -1}) {
                mpq_class cand(sign * num, den);
                cand.canonicalize();
                candidates.push_back(cand);
            }
        }
    for (const auto& cand : candidates)
        if (f.is_zero(poly_eval(f, p, cand))) {
            bool seen = false;
            for (const auto& r : roots) seen = seen || r == cand;
            if (!seen) roots.push_back(cand);
        }
    return roots;
}

}  // namespace detail

/// Split M along the generalized eigenspaces of random endomorphisms
/// (Fitting decomposition). Pieces whose End ring is one-dimensional are
/// certified indecomposable; other pieces are returned once `trials`
/// random attempts produce no further splitting.
template <ExactField F>
std::vector<Module<F>> fitting_decompose(const Module<F>& m, Rng& rng, int trials = 20) {
    std::vector<Module<F>> out;
    if (m.is_zero()) return out;
    const F& f = m.field;
    const HomSpace<F> end = hom_basis(m, m);
    if (end.dim() == 1) return {m};  // End = k is local
    const std::size_t total = static_cast<std::size_t>(m.total_dim());
    const auto offsets = vertex_offsets(m.dims);
    for (int t = 0; t < trials; ++t) {
        // random endomorphism as a block-diagonal map on the total space
        VertexMaps<F> g;
        for (std::size_t v = 0; v < m.dims.size(); ++v)
            g.emplace_back(f, static_cast<std::size_t>(m.dims[v]),
                           static_cast<std::size_t>(m.dims[v]));
        for (std::size_t b = 0; b < end.dim(); ++b) {
            const auto c = f.random(rng);
            if (f.is_zero(c)) continue;
            for (std::size_t v = 0; v < g.size(); ++v) g[v] = g[v] + end.basis[b][v].scaled(c);
        }
        Matrix<F> big(f, total, total);
        for (std::size_t v = 0; v < g.size(); ++v) big.set_block(offsets[v], offsets[v], g[v]);
        const Vec<F> chi = detail::char_poly(big);
        const auto roots = detail::distinct_roots(f, chi, rng);
        if (roots.empty()) continue;
        // generalized eigenspace per root; leftover factor kept as one piece
        std::vector<VertexSubspaces<F>> pieces;
        std::int64_t covered = 0;
        for (const auto& lambda : roots) {
            VertexMaps<F> shifted;
            for (std::size_t v = 0; v < g.size(); ++v) {
                Matrix<F> s = g[v] - Matrix<F>::identity(f, g[v].rows()).scaled(lambda);
                shifted.push_back(std::move(s));
            }
            // (g - lambda)^total
            VertexMaps<F> power;
            for (std::size_t v = 0; v < g.size(); ++v)
                power.push_back(Matrix<F>::identity(f, g[v].rows()));
            for (std::size_t e = 0; e < total; ++e) power = compose(shifted, power);
            VertexSubspaces<F> ker = empty_subspaces(m);
            for (std::size_t v = 0; v < g.size(); ++v)
                for (const auto& k : power[v].kernel_basis()) ker[v].insert(k);
            pieces.push_back(std::move(ker));
            for (const auto& s : pieces.back()) covered += static_cast<std::int64_t>(s.dim());
        }
        if (covered < m.total_dim()) {
            // complement piece: image of prod (g - lambda)^total over all roots
            VertexMaps<F> power;
            for (std::size_t v = 0; v < g.size(); ++v)
                power.push_back(Matrix<F>::identity(f, g[v].rows()));
            for (const auto& lambda : roots) {
                VertexMaps<F> shifted;
                for (std::size_t v = 0; v < g.size(); ++v)
                    shifted.push_back(g[v] -
                                      Matrix<F>::identity(f, g[v].rows()).scaled(lambda));
                for (std::size_t e = 0; e < total; ++e) power = compose(shifted, power);
            }
            VertexSubspaces<F> img = empty_subspaces(m);
            for (std::size_t v = 0; v < g.size(); ++v)
                for (std::size_t j = 0; j < power[v].cols(); ++j) {
                    Vec<F> col(power[v].rows());
                    for (std::size_t i = 0; i < power[v].rows(); ++i) col[i] = power[v].at(i, j);
                    img[v].insert(col);
                }
            pieces.push_back(std::move(img));
        }
        std::vector<Module<F>> split;
        for (const auto& piece : pieces) {
            DimVector d = subspace_dims(piece);
            std::int64_t td = 0;
            for (auto x : d) td += x;
            if (td == 0) continue;
            split.push_back(submodule_from_subspaces(m, piece).sub);
        }
        if (split.size() >= 2) {
            for (const auto& piece : split) {
                auto rec = fitting_decompose(piece, rng, trials);
                out.insert(out.end(), rec.begin(), rec.end());
            }
            return out;
        }
    }
    return {m};
}

}  // namespace nilq
