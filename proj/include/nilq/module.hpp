#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilq/algebra.hpp"
#include "nilq/matrix.hpp"

namespace nilq {

struct RelationViolated : std::runtime_error {
    explicit RelationViolated(const std::string& label)
        : std::runtime_error("relation violated: " + label), relation(label) {}
    std::string relation;
};

/// A finite-dimensional left module: one vector space per vertex of the
/// algebra's quiver and one matrix per arrow (target-dim x source-dim).
/// Immutable after construction.
template <ExactField F>
struct Module {
    AlgebraPtr alg;
    F field;
    DimVector dims;                 // per vertex
    std::vector<Matrix<F>> action;  // per arrow

    std::int64_t total_dim() const {
        std::int64_t t = 0;
        for (auto d : dims) t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }

    const Matrix<F>& arrow(int a) const { return action.at(a); }
};

/// Offsets of the vertex blocks inside the concatenated total space.
inline std::vector<std::size_t> vertex_offsets(const DimVector& dims) {
    std::vector<std::size_t> off(dims.size() + 1, 0);
    for (std::size_t v = 0; v < dims.size(); ++v)
        off[v + 1] = off[v] + static_cast<std::size_t>(dims[v]);
    return off;
}

/// Matrix of the action of a word (application order) on M, as a map
/// M_src -> M_end.
template <ExactField F>
Matrix<F> word_action(const Module<F>& m, int src, const std::vector<int>& word) {
    Matrix<F> acc = Matrix<F>::identity(m.field, static_cast<std::size_t>(m.dims.at(src)));
    for (int a : word) acc = m.action.at(a) * acc;
    return acc;
}

template <ExactField F>
void validate_module(const Module<F>& m) {
    const Quiver& q = m.alg->quiver();
    if (m.dims.size() != q.vertex_count() || m.action.size() != q.arrow_count())
        throw std::invalid_argument("module data does not match the quiver");
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(static_cast<int>(a));
        if (m.action[a].rows() != static_cast<std::size_t>(m.dims[ar.tgt]) ||
            m.action[a].cols() != static_cast<std::size_t>(m.dims[ar.src]))
            throw std::invalid_argument("arrow matrix shape mismatch at " + ar.name);
    }
    for (const auto& rel : m.alg->relations()) {
        const int src = q.arrow(rel.lhs.front()).src;
        Matrix<F> lhs = word_action(m, src, rel.lhs);
        if (rel.rhs.empty()) {
            if (!lhs.is_zero()) throw RelationViolated(rel.label);
        } else if (!(lhs == word_action(m, src, rel.rhs))) {
            throw RelationViolated(rel.label);
        }
    }
}

template <ExactField F>
Module<F> make_module(AlgebraPtr alg, F field, DimVector dims, std::vector<Matrix<F>> action) {
    Module<F> m{std::move(alg), std::move(field), std::move(dims), std::move(action)};
    validate_module(m);
    return m;
}

template <ExactField F>
Module<F> zero_module(AlgebraPtr alg, F field) {
    DimVector dims(alg->quiver().vertex_count(), 0);
    std::vector<Matrix<F>> action;
    for (std::size_t a = 0; a < alg->quiver().arrow_count(); ++a)
        action.emplace_back(field, 0, 0);
    return Module<F>{std::move(alg), std::move(field), std::move(dims), std::move(action)};
}

/// Simple module S(v).
template <ExactField F>
Module<F> simple_module(AlgebraPtr alg, F field, int v) {
    DimVector dims(alg->quiver().vertex_count(), 0);
    dims.at(v) = 1;
    std::vector<Matrix<F>> action;
    for (std::size_t a = 0; a < alg->quiver().arrow_count(); ++a) {
        const Arrow& ar = alg->quiver().arrow(static_cast<int>(a));
        action.emplace_back(field, static_cast<std::size_t>(dims[ar.tgt]),
                            static_cast<std::size_t>(dims[ar.src]));
    }
    return Module<F>{std::move(alg), std::move(field), std::move(dims), std::move(action)};
}

template <ExactField F>
Module<F> direct_sum(const Module<F>& a, const Module<F>& b) {
    if (!a.alg->same_algebra(*b.alg)) throw std::invalid_argument("direct_sum: algebra mismatch");
    DimVector dims(a.dims.size());
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dims[v] + b.dims[v];
    std::vector<Matrix<F>> action;
    for (std::size_t ar = 0; ar < a.action.size(); ++ar) {
        const Arrow& arw = a.alg->quiver().arrow(static_cast<int>(ar));
        Matrix<F> m(a.field, static_cast<std::size_t>(dims[arw.tgt]),
                    static_cast<std::size_t>(dims[arw.src]));
        m.set_block(0, 0, a.action[ar]);
        m.set_block(a.action[ar].rows(), a.action[ar].cols(), b.action[ar]);
        action.push_back(std::move(m));
    }
    return Module<F>{a.alg, a.field, std::move(dims), std::move(action)};
}

/// A homomorphism is stored as one matrix per vertex (tgt-dim x src-dim).
template <ExactField F>
using VertexMaps = std::vector<Matrix<F>>;

template <ExactField F>
struct HomSpace {
    DimVector src_dims, tgt_dims;
    std::vector<VertexMaps<F>> basis;

    std::size_t dim() const { return basis.size(); }
};

namespace detail {

/// Unknowns of the intertwining system: entries of all f_v, vertex blocks
/// concatenated row-major.
inline std::vector<std::size_t> hom_unknown_offsets(const DimVector& src, const DimVector& tgt) {
    std::vector<std::size_t> off(src.size() + 1, 0);
    for (std::size_t v = 0; v < src.size(); ++v)
        off[v + 1] = off[v] + static_cast<std::size_t>(src[v]) * static_cast<std::size_t>(tgt[v]);
    return off;
}

}  // namespace detail

/// Basis of Hom(M, N) = { (f_v) : f_tgt(a) M_a = N_a f_src(a) for all a }.
/// The relations need no extra constraints.
template <ExactField F>
HomSpace<F> hom_basis(const Module<F>& m, const Module<F>& n) {
    if (!m.alg->same_algebra(*n.alg)) throw std::invalid_argument("hom_basis: algebra mismatch");
    const F& f = m.field;
    const Quiver& q = m.alg->quiver();
    const auto off = detail::hom_unknown_offsets(m.dims, n.dims);
    const std::size_t unknowns = off.back();
    std::size_t eqs = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(static_cast<int>(a));
        eqs += static_cast<std::size_t>(n.dims[ar.tgt]) * static_cast<std::size_t>(m.dims[ar.src]);
    }
    Matrix<F> sys(f, eqs, unknowns);
    std::size_t row = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(static_cast<int>(a));
        const std::size_t sv = static_cast<std::size_t>(m.dims[ar.src]);
        const std::size_t tw = static_cast<std::size_t>(n.dims[ar.tgt]);
        const std::size_t sw = static_cast<std::size_t>(n.dims[ar.src]);
        // equation (r, c): sum_k f_tgt[r,k] M_a[k,c] - sum_k N_a[r,k] f_src[k,c] = 0
        for (std::size_t r = 0; r < tw; ++r)
            for (std::size_t c = 0; c < sv; ++c) {
                for (std::size_t k = 0; k < static_cast<std::size_t>(m.dims[ar.tgt]); ++k) {
                    const auto& coef = m.action[a].at(k, c);
                    if (f.is_zero(coef)) continue;
                    const std::size_t col = off[ar.tgt] + r * static_cast<std::size_t>(m.dims[ar.tgt]) + k;
                    sys.at(row, col) = f.add(sys.at(row, col), coef);
                }
                for (std::size_t k = 0; k < sw; ++k) {
                    const auto& coef = n.action[a].at(r, k);
                    if (f.is_zero(coef)) continue;
                    const std::size_t col = off[ar.src] + k * static_cast<std::size_t>(m.dims[ar.src]) + c;
                    sys.at(row, col) = f.sub(sys.at(row, col), coef);
                }
                ++row;
            }
    }
    HomSpace<F> hs;
    hs.src_dims = m.dims;
    hs.tgt_dims = n.dims;
    for (const auto& vec : sys.kernel_basis()) {
        VertexMaps<F> maps;
        for (std::size_t v = 0; v < q.vertex_count(); ++v) {
            Matrix<F> fv(f, static_cast<std::size_t>(n.dims[v]), static_cast<std::size_t>(m.dims[v]));
            for (std::size_t r = 0; r < fv.rows(); ++r)
                for (std::size_t c = 0; c < fv.cols(); ++c)
                    fv.at(r, c) = vec[off[v] + r * fv.cols() + c];
            maps.push_back(std::move(fv));
        }
        hs.basis.push_back(std::move(maps));
    }
    return hs;
}

template <ExactField F>
std::size_t hom_dim(const Module<F>& m, const Module<F>& n) {
    return hom_basis(m, n).dim();
}

/// Per-vertex subspaces of a module's vertex spaces.
template <ExactField F>
using VertexSubspaces = std::vector<Subspace<F>>;

template <ExactField F>
VertexSubspaces<F> empty_subspaces(const Module<F>& m) {
    VertexSubspaces<F> s;
    for (auto d : m.dims) s.emplace_back(m.field, static_cast<std::size_t>(d));
    return s;
}

template <ExactField F>
DimVector subspace_dims(const VertexSubspaces<F>& s) {
    DimVector d;
    for (const auto& sub : s) d.push_back(static_cast<std::int64_t>(sub.dim()));
    return d;
}

/// J^t M: the span of all (word of length >= t) . M; computed as the span
/// of length-exactly-t words applied to everything.
template <ExactField F>
VertexSubspaces<F> radical_power_subspaces(const Module<F>& m, int t) {
    VertexSubspaces<F> out = empty_subspaces(m);
    if (t <= 0) {
        for (std::size_t v = 0; v < m.dims.size(); ++v)
            for (std::size_t j = 0; j < static_cast<std::size_t>(m.dims[v]); ++j) {
                Vec<F> e(static_cast<std::size_t>(m.dims[v]), m.field.zero());
                e[j] = m.field.one();
                out[v].insert(e);
            }
        return out;
    }
    // span of images of J^t = J . (J^{t-1} M)
    VertexSubspaces<F> prev = radical_power_subspaces(m, t - 1);
    for (std::size_t a = 0; a < m.action.size(); ++a) {
        const Arrow& ar = m.alg->quiver().arrow(static_cast<int>(a));
        for (const auto& vec : prev[ar.src].basis()) out[ar.tgt].insert(m.action[a].apply(vec));
    }
    return out;
}

template <ExactField F>
VertexSubspaces<F> radical_subspaces(const Module<F>& m) {
    return radical_power_subspaces(m, 1);
}

/// soc^t(M): the maximal submodule annihilated by J^t, i.e. the joint
/// kernel of all length-t word actions.
template <ExactField F>
VertexSubspaces<F> socle_power_subspaces(const Module<F>& m, int t) {
    VertexSubspaces<F> out = empty_subspaces(m);
    if (t <= 0) return out;
    const Quiver& q = m.alg->quiver();
    for (int v = 0; v < static_cast<int>(q.vertex_count()); ++v) {
        // stack word actions of all length-t words starting at v
        std::vector<Matrix<F>> blocks;
        std::size_t rows = 0;
        for (const Path& p : paths_up_to_length(q, t)) {
            if (p.start != v || p.length() != t) continue;
            blocks.push_back(word_action(m, v, p.arrows));
            rows += blocks.back().rows();
        }
        Matrix<F> stacked(m.field, rows, static_cast<std::size_t>(m.dims[v]));
        std::size_t r0 = 0;
        for (const auto& b : blocks) {
            stacked.set_block(r0, 0, b);
            r0 += b.rows();
        }
        for (const auto& k : stacked.kernel_basis()) out[v].insert(k);
    }
    return out;
}

template <ExactField F>
VertexSubspaces<F> socle_subspaces(const Module<F>& m) {
    return socle_power_subspaces(m, 1);
}

/// soc^0 = 0 c soc^1 c ... ; stabilizes at M once t reaches the algebra's
/// nilpotency degree.
template <ExactField F>
std::vector<DimVector> socle_filtration(const Module<F>& m) {
    std::vector<DimVector> chain;
    for (int t = 0;; ++t) {
        auto s = socle_power_subspaces(m, t);
        chain.push_back(subspace_dims(s));
        if (chain.back() == m.dims) break;
        if (t > m.alg->s() + 1) throw std::logic_error("socle filtration failed to stabilize");
    }
    return chain;
}

template <ExactField F>
struct SubmoduleResult {
    Module<F> sub;
    VertexMaps<F> inclusion;  // sub -> ambient
};

template <ExactField F>
struct QuotientResult {
    Module<F> quot;
    VertexMaps<F> projection;  // ambient -> quot
};

/// Restrict M to per-vertex subspaces that are known to be closed under all
/// arrow actions (kernels of homs, radical powers, socles, images).
template <ExactField F>
SubmoduleResult<F> submodule_from_subspaces(const Module<F>& m, const VertexSubspaces<F>& sub) {
    const F& f = m.field;
    DimVector dims = subspace_dims(sub);
    std::vector<Matrix<F>> action;
    for (std::size_t a = 0; a < m.action.size(); ++a) {
        const Arrow& ar = m.alg->quiver().arrow(static_cast<int>(a));
        Matrix<F> restricted(f, static_cast<std::size_t>(dims[ar.tgt]),
                             static_cast<std::size_t>(dims[ar.src]));
        for (std::size_t j = 0; j < static_cast<std::size_t>(dims[ar.src]); ++j) {
            Vec<F> img = m.action[a].apply(sub[ar.src].basis()[j]);
            if (!sub[ar.tgt].contains(img))
                throw std::logic_error("submodule_from_subspaces: not arrow-closed");
            Vec<F> coords = sub[ar.tgt].coords_of(img);
            for (std::size_t i = 0; i < coords.size(); ++i) restricted.at(i, j) = coords[i];
        }
        action.push_back(std::move(restricted));
    }
    VertexMaps<F> inclusion;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Matrix<F> inc(f, static_cast<std::size_t>(m.dims[v]), static_cast<std::size_t>(dims[v]));
        for (std::size_t j = 0; j < static_cast<std::size_t>(dims[v]); ++j)
            for (std::size_t i = 0; i < inc.rows(); ++i) inc.at(i, j) = sub[v].basis()[j][i];
        inclusion.push_back(std::move(inc));
    }
    return {Module<F>{m.alg, f, std::move(dims), std::move(action)}, std::move(inclusion)};
}

/// Smallest submodule containing the given generators (vertex, vector).
template <ExactField F>
SubmoduleResult<F> submodule_closure(const Module<F>& m,
                                     const std::vector<std::pair<int, Vec<F>>>& generators) {
    VertexSubspaces<F> sub = empty_subspaces(m);
    std::vector<std::pair<int, Vec<F>>> work;
    for (const auto& [v, vec] : generators)
        if (sub[v].insert(vec)) work.emplace_back(v, vec);
    while (!work.empty()) {
        auto [v, vec] = work.back();
        work.pop_back();
        for (int a : m.alg->quiver().arrows_from(v)) {
            const int w = m.alg->quiver().arrow(a).tgt;
            Vec<F> img = m.action[a].apply(vec);
            if (sub[w].insert(img)) work.emplace_back(w, std::move(img));
        }
    }
    return submodule_from_subspaces(m, sub);
}

/// Quotient of M by an arrow-closed family of subspaces. Coordinates on the
/// quotient are the free (non-pivot) coordinates of each subspace.
template <ExactField F>
QuotientResult<F> quotient(const Module<F>& m, const VertexSubspaces<F>& sub) {
    const F& f = m.field;
    DimVector dims(m.dims.size());
    std::vector<std::vector<std::size_t>> free(m.dims.size());
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        free[v] = sub[v].free_columns();
        dims[v] = static_cast<std::int64_t>(free[v].size());
    }
    VertexMaps<F> projection;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Matrix<F> proj(f, free[v].size(), static_cast<std::size_t>(m.dims[v]));
        for (std::size_t j = 0; j < static_cast<std::size_t>(m.dims[v]); ++j) {
            Vec<F> e(static_cast<std::size_t>(m.dims[v]), f.zero());
            e[j] = f.one();
            Vec<F> r = sub[v].reduce(e);
            for (std::size_t i = 0; i < free[v].size(); ++i) proj.at(i, j) = r[free[v][i]];
        }
        projection.push_back(std::move(proj));
    }
    std::vector<Matrix<F>> action;
    for (std::size_t a = 0; a < m.action.size(); ++a) {
        const Arrow& ar = m.alg->quiver().arrow(static_cast<int>(a));
        // section of the projection: free coordinate j -> unit vector
        Matrix<F> act(f, static_cast<std::size_t>(dims[ar.tgt]),
                      static_cast<std::size_t>(dims[ar.src]));
        for (std::size_t j = 0; j < static_cast<std::size_t>(dims[ar.src]); ++j) {
            Vec<F> e(static_cast<std::size_t>(m.dims[ar.src]), f.zero());
            e[free[ar.src][j]] = f.one();
            Vec<F> img = projection[ar.tgt].apply(m.action[a].apply(e));
            for (std::size_t i = 0; i < img.size(); ++i) act.at(i, j) = img[i];
        }
        action.push_back(std::move(act));
    }
    return {Module<F>{m.alg, f, std::move(dims), std::move(action)}, std::move(projection)};
}

/// Kernel of a homomorphism, as a submodule of the source.
template <ExactField F>
SubmoduleResult<F> kernel_of_hom(const Module<F>& src, const VertexMaps<F>& maps) {
    VertexSubspaces<F> sub = empty_subspaces(src);
    for (std::size_t v = 0; v < src.dims.size(); ++v)
        for (const auto& k : maps[v].kernel_basis()) sub[v].insert(k);
    return submodule_from_subspaces(src, sub);
}

/// Image of a homomorphism, as subspaces of the target (always a submodule).
template <ExactField F>
VertexSubspaces<F> image_subspaces(const Module<F>& tgt, const VertexMaps<F>& maps) {
    VertexSubspaces<F> sub = empty_subspaces(tgt);
    for (std::size_t v = 0; v < tgt.dims.size(); ++v)
        for (std::size_t j = 0; j < maps[v].cols(); ++j) {
            Vec<F> col(maps[v].rows());
            for (std::size_t i = 0; i < maps[v].rows(); ++i) col[i] = maps[v].at(i, j);
            sub[v].insert(col);
        }
    return sub;
}

/// Compose two vertex-map families (g after f).
template <ExactField F>
VertexMaps<F> compose(const VertexMaps<F>& g, const VertexMaps<F>& f) {
    VertexMaps<F> out;
    for (std::size_t v = 0; v < f.size(); ++v) out.push_back(g[v] * f[v]);
    return out;
}

}  // namespace nilq
