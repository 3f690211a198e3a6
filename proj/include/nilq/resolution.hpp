#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nilq/module.hpp"

namespace nilq {

struct ResolutionTooLong : std::runtime_error {
    explicit ResolutionTooLong(int len)
        : std::runtime_error("minimal projective resolution exceeds length " +
                             std::to_string(len)) {}
};

/// P(v) together with its combinatorial bookkeeping: the basis of P(v) is
/// the set of algebra basis paths with source v, and slot[k] locates path k
/// inside the vertex blocks of the module.
template <ExactField F>
struct ProjectiveModule {
    Module<F> mod;
    int vertex = 0;
    std::vector<int> paths;                      // algebra basis indices, source = vertex
    std::vector<std::pair<int, std::size_t>> slot;  // per path: (vertex, offset)
    std::size_t generator_slot = 0;              // offset of e_v in block `vertex`
};

template <ExactField F>
ProjectiveModule<F> projective_module(AlgebraPtr alg, F field, int v) {
    const BoundQuiverAlgebra& A = *alg;
    ProjectiveModule<F> P;
    P.vertex = v;
    P.paths = A.basis_with_source(v);
    DimVector dims(A.quiver().vertex_count(), 0);
    P.slot.resize(P.paths.size());
    for (std::size_t k = 0; k < P.paths.size(); ++k) {
        const auto& e = A.basis()[P.paths[k]];
        P.slot[k] = {e.tgt, static_cast<std::size_t>(dims[e.tgt])};
        if (e.word.empty()) P.generator_slot = P.slot[k].second;
        ++dims[e.tgt];
    }
    std::vector<std::size_t> pos(A.dim(), P.paths.size());
    for (std::size_t k = 0; k < P.paths.size(); ++k) pos[P.paths[k]] = k;
    std::vector<Matrix<F>> action;
    for (std::size_t a = 0; a < A.quiver().arrow_count(); ++a) {
        const Arrow& ar = A.quiver().arrow(static_cast<int>(a));
        Matrix<F> m(field, static_cast<std::size_t>(dims[ar.tgt]),
                    static_cast<std::size_t>(dims[ar.src]));
        for (std::size_t k = 0; k < P.paths.size(); ++k) {
            if (P.slot[k].first != ar.src) continue;
            const int prod = A.mult(A.arrow_elem(static_cast<int>(a)), P.paths[k]);
            if (prod < 0) continue;
            m.at(P.slot[pos[prod]].second, P.slot[k].second) = field.one();
        }
        action.push_back(std::move(m));
    }
    P.mod = Module<F>{std::move(alg), std::move(field), std::move(dims), std::move(action)};
    return P;
}

/// A finite direct sum of indecomposable projectives with generator
/// bookkeeping, plus the covering map onto a target module.
template <ExactField F>
struct ProjectiveCover {
    Module<F> mod;                   // direct sum of the P(v_k)
    std::vector<int> gen_vertex;     // vertex of generator k
    VertexMaps<F> to_target;         // the covering map
};

/// Build ⊕_k P(gen_vertex[k]) and the module map sending generator k to
/// gen_image[k] (a vector in target's block at gen_vertex[k]); every other
/// basis path is sent to its path action on that vector.
template <ExactField F>
ProjectiveCover<F> projective_hull(AlgebraPtr alg, const Module<F>& target,
                                   const std::vector<int>& gen_vertex,
                                   const std::vector<Vec<F>>& gen_image) {
    const F& f = target.field;
    std::vector<ProjectiveModule<F>> parts;
    for (int v : gen_vertex) parts.push_back(projective_module<F>(alg, f, v));
    ProjectiveCover<F> cover;
    cover.gen_vertex = gen_vertex;
    Module<F> sum = zero_module<F>(alg, f);
    std::vector<DimVector> offsets;  // running block offsets per part
    for (const auto& p : parts) {
        offsets.push_back(sum.dims);
        sum = direct_sum(sum, p.mod);
    }
    // covering map: for part k, path l (class pi), send the basis vector at
    // slot (w, off) to pi . gen_image[k]
    VertexMaps<F> maps;
    for (std::size_t v = 0; v < sum.dims.size(); ++v)
        maps.emplace_back(f, static_cast<std::size_t>(target.dims[v]),
                          static_cast<std::size_t>(sum.dims[v]));
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& P = parts[k];
        for (std::size_t l = 0; l < P.paths.size(); ++l) {
            const auto& e = alg->basis()[P.paths[l]];
            const Matrix<F> act = word_action(target, e.src, e.word);
            const Vec<F> img = act.apply(gen_image[k]);
            const auto [w, off_in_part] = P.slot[l];
            const std::size_t col = static_cast<std::size_t>(offsets[k][w]) + off_in_part;
            for (std::size_t r = 0; r < img.size(); ++r) maps[w].at(r, col) = img[r];
        }
    }
    cover.mod = std::move(sum);
    cover.to_target = std::move(maps);
    return cover;
}

/// Minimal projective cover: one generator per top(M) basis vector, where
/// top(M) = M / JM (the radical is arrow-generated for both families).
template <ExactField F>
ProjectiveCover<F> minimal_projective_cover(const Module<F>& m) {
    VertexSubspaces<F> rad = radical_subspaces(m);
    std::vector<int> gen_vertex;
    std::vector<Vec<F>> gen_image;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        // complement representatives: unit vectors on the free coordinates
        for (std::size_t j : rad[v].free_columns()) {
            Vec<F> e(static_cast<std::size_t>(m.dims[v]), m.field.zero());
            e[j] = m.field.one();
            gen_vertex.push_back(static_cast<int>(v));
            gen_image.push_back(std::move(e));
        }
    }
    return projective_hull(m.alg, m, gen_vertex, gen_image);
}

/// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0, computed by
/// iterating minimal covers on syzygies.
template <ExactField F>
struct ProjectiveResolution {
    std::vector<Module<F>> terms;   // P_0, P_1, ...
    std::vector<VertexMaps<F>> maps;  // maps[k] : P_k -> P_{k-1} for k >= 1
    VertexMaps<F> augmentation;     // P_0 -> M
    bool complete = false;          // the last syzygy is zero
};

/// Build the resolution until the syzygy vanishes or max_len terms beyond
/// P_0 were produced. With `strict`, a nonzero syzygy past max_len throws.
template <ExactField F>
ProjectiveResolution<F> minimal_projective_resolution(const Module<F>& m, int max_len,
                                                      bool strict = true) {
    if (max_len < 0) throw std::invalid_argument("minimal_projective_resolution: max_len < 0");
    ProjectiveResolution<F> res;
    ProjectiveCover<F> cover = minimal_projective_cover(m);
    res.terms.push_back(cover.mod);
    res.augmentation = cover.to_target;
    Module<F> current = std::move(cover.mod);
    VertexMaps<F> onto = res.augmentation;
    for (int k = 1;; ++k) {
        SubmoduleResult<F> syz = kernel_of_hom(current, onto);
        if (syz.sub.is_zero()) {
            res.complete = true;
            break;
        }
        if (k > max_len) {
            if (strict) throw ResolutionTooLong(max_len);
            break;
        }
        ProjectiveCover<F> next = minimal_projective_cover(syz.sub);
        res.terms.push_back(next.mod);
        res.maps.push_back(compose(syz.inclusion, next.to_target));
        current = std::move(next.mod);
        onto = res.maps.back();
    }
    return res;
}

/// dim Ext^k(M, N) as the k-th cohomology of Hom(P_., N) for a minimal
/// resolution P_. of M.
template <ExactField F>
std::int64_t ext_dim(const Module<F>& m, const Module<F>& n, int k) {
    if (k < 0) throw std::invalid_argument("ext_dim: negative degree");
    if (k == 0) return static_cast<std::int64_t>(hom_dim(m, n));
    ProjectiveResolution<F> res = minimal_projective_resolution(m, k + 1, /*strict=*/false);
    if (static_cast<std::size_t>(k) >= res.terms.size()) return 0;  // resolution stopped earlier
    const HomSpace<F> hk = hom_basis(res.terms[k], n);
    // rank of D_k : Hom(P_{k-1}, N) -> Hom(P_k, N), f -> f . d_k
    const HomSpace<F> hk1 = hom_basis(res.terms[k - 1], n);
    const auto coords = [&n](const HomSpace<F>& space, const VertexMaps<F>& g) {
        // solve for the coordinates of g in the basis of `space`
        std::size_t len = 0;
        for (std::size_t v = 0; v < g.size(); ++v) len += g[v].rows() * g[v].cols();
        Matrix<F> sys(n.field, len, space.dim());
        Vec<F> rhs(len, n.field.zero());
        std::size_t row = 0;
        for (std::size_t v = 0; v < g.size(); ++v)
            for (std::size_t r = 0; r < g[v].rows(); ++r)
                for (std::size_t c = 0; c < g[v].cols(); ++c) {
                    for (std::size_t b = 0; b < space.dim(); ++b)
                        sys.at(row, b) = space.basis[b][v].at(r, c);
                    rhs[row] = g[v].at(r, c);
                    ++row;
                }
        auto sol = sys.solve(rhs);
        if (!sol) throw std::logic_error("ext_dim: hom not in its own space");
        return *sol;
    };
    Matrix<F> dk(n.field, hk.dim(), hk1.dim());
    for (std::size_t b = 0; b < hk1.dim(); ++b) {
        const Vec<F> col = coords(hk, compose(hk1.basis[b], res.maps[k - 1]));
        for (std::size_t r = 0; r < hk.dim(); ++r) dk.at(r, b) = col[r];
    }
    std::int64_t rank_in = static_cast<std::int64_t>(dk.rank());
    // rank of D_{k+1} : Hom(P_k, N) -> Hom(P_{k+1}, N)
    std::int64_t rank_out = 0;
    if (static_cast<std::size_t>(k + 1) < res.terms.size()) {
        const HomSpace<F> hk2 = hom_basis(res.terms[k + 1], n);
        Matrix<F> dk1(n.field, hk2.dim(), hk.dim());
        for (std::size_t b = 0; b < hk.dim(); ++b) {
            const Vec<F> col = coords(hk2, compose(hk.basis[b], res.maps[k]));
            for (std::size_t r = 0; r < hk2.dim(); ++r) dk1.at(r, b) = col[r];
        }
        rank_out = static_cast<std::int64_t>(dk1.rank());
    } else if (!res.complete) {
        // resolution truncated right at P_k: the next differential exists
        throw ResolutionTooLong(k + 1);
    }
    return static_cast<std::int64_t>(hk.dim()) - rank_in - rank_out;
}

}  // namespace nilq
