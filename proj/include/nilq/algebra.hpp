#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "nilq/quiver.hpp"

namespace nilq {

/// Bound quiver algebra with an explicit path-class basis. Two families are
/// supported, both monomial-friendly: the truncated path algebra kQ/J^s and
/// the nilpotent quiver algebra N_s(Q) on the staircase quiver with the
/// relations
///   (R1)  a_{t+1} b(i_t) = b(j_{t-1}) a_t      1 < t < s,
///   (R2)  a_2 b(i_1) = 0.
///
/// For N_s(Q) every nonzero path class has a unique standard form beta*alpha
/// with alpha a path of diagonal arrows and beta a run of vertical arrows;
/// (R1) is oriented as the rewrite a_{t+1} b(i_t) -> b(j_{t-1}) a_t, which
/// pushes verticals left and terminates. A standard form is therefore
/// identified by (source vertex i_t, underlying Q-path of alpha, |beta|),
/// and the product of two basis classes is again a basis class or zero.
class BoundQuiverAlgebra {
public:
    enum class Kind { TruncatedPath, NilpotentQuiver };

    struct BasisElem {
        int src = 0;  // vertex of quiver()
        int tgt = 0;
        std::vector<int> word;  // arrows of quiver(), application order
        // standard-form data (NilpotentQuiver only)
        std::vector<int> diag;  // underlying Q-arrows of alpha, application order
        int vert = 0;           // length of beta
    };

    struct Relation {
        std::vector<int> lhs;  // words over quiver() arrows, application order
        std::vector<int> rhs;  // empty means the left side is zero
        std::string label;
    };

    static BoundQuiverAlgebra truncated_path(const Quiver& q, int s) {
        if (s < 1) throw std::invalid_argument("truncated_path: s must be >= 1");
        BoundQuiverAlgebra alg;
        alg.kind_ = Kind::TruncatedPath;
        alg.s_ = s;
        alg.quiver_ = q;
        alg.base_ = q;
        for (const Path& p : paths_up_to_length(q, s - 1)) {
            BasisElem e;
            e.src = p.start;
            e.tgt = p.end(q);
            e.word = p.arrows;
            alg.push_basis_elem(std::move(e));
        }
        // relations: every composable word of length s is zero
        int rel = 0;
        for (const Path& p : paths_up_to_length(q, s))
            if (p.length() == s)
                alg.relations_.push_back({p.arrows, {}, "J^" + std::to_string(s) + " #" +
                                                             std::to_string(rel++)});
        alg.finish();
        return alg;
    }

    static BoundQuiverAlgebra nilpotent_quiver(const Quiver& q, int s) {
        if (s < 1) throw std::invalid_argument("nilpotent_quiver: s must be >= 1");
        BoundQuiverAlgebra alg;
        alg.kind_ = Kind::NilpotentQuiver;
        alg.s_ = s;
        alg.base_ = q;
        alg.staircase_ = staircase(q, s);
        alg.quiver_ = alg.staircase_.quiver;
        // standard basis: for each source i_t, each Q-path alpha from i of
        // length l <= t-1, each vertical run m with t-l+m <= s
        const auto base_paths = paths_up_to_length(q, s - 1);
        for (int t = 1; t <= s; ++t)
            for (int i = 0; i < static_cast<int>(q.vertex_count()); ++i)
                for (const Path& alpha : base_paths) {
                    if (alpha.start != i || alpha.length() > t - 1) continue;
                    const int land = t - alpha.length();
                    for (int m = 0; land + m <= s; ++m)
                        alg.push_basis_elem(alg.make_standard(i, t, alpha.arrows, m));
                }
        // relations R1 (1 < t < s) and R2 (t = 1), words in application order
        for (int a = 0; a < static_cast<int>(q.arrow_count()); ++a) {
            const Arrow& ar = q.arrow(a);
            const auto& sq = alg.staircase_;
            if (s >= 2)
                alg.relations_.push_back({{sq.vertical_arrow(ar.src, 1), sq.diagonal_arrow(a, 2)},
                                          {},
                                          "R2:" + ar.name});
            for (int t = 2; t <= s - 1; ++t)
                alg.relations_.push_back(
                    {{sq.vertical_arrow(ar.src, t), sq.diagonal_arrow(a, t + 1)},
                     {sq.diagonal_arrow(a, t), sq.vertical_arrow(ar.tgt, t - 1)},
                     "R1:" + ar.name + "_" + std::to_string(t + 1)});
        }
        alg.finish();
        return alg;
    }

    Kind kind() const { return kind_; }
    int s() const { return s_; }
    const Quiver& quiver() const { return quiver_; }
    const Quiver& base_quiver() const { return base_; }
    const StaircaseQuiver& staircase() const {
        if (kind_ != Kind::NilpotentQuiver) throw std::logic_error("not a nilpotent quiver algebra");
        return staircase_;
    }

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisElem>& basis() const { return basis_; }
    const std::vector<Relation>& relations() const { return relations_; }

    int idempotent(int vertex) const { return idempotent_.at(vertex); }
    int arrow_elem(int arrow) const { return arrow_elem_.at(arrow); }
    const std::vector<int>& basis_with_source(int v) const { return by_source_.at(v); }
    const std::vector<int>& basis_with_target(int v) const { return by_target_.at(v); }

    /// Product x*y, y applied first. Returns -1 when the product is zero
    /// (including the incomposable case).
    int mult(int x, int y) const {
        const BasisElem& ex = basis_[x];
        const BasisElem& ey = basis_[y];
        if (ey.tgt != ex.src) return -1;
        if (kind_ == Kind::TruncatedPath) {
            if (ex.word.size() + ey.word.size() >= static_cast<std::size_t>(s_)) return -1;
            std::vector<int> word = ey.word;
            word.insert(word.end(), ex.word.begin(), ex.word.end());
            return lookup_word(ey.src, word);
        }
        const auto [i, t] = staircase_.base_of(ey.src);
        std::vector<int> diag = ey.diag;
        diag.insert(diag.end(), ex.diag.begin(), ex.diag.end());
        if (t - static_cast<int>(diag.size()) < 1) return -1;  // descends past layer 1: R2
        return standard_index(i, t, diag, ey.vert + ex.vert);
    }

    /// Unique y with y * arrow = x (arrow applied first), or -1.
    int divide_right(int x, int arrow) const {
        const BasisElem& ex = basis_[x];
        const Arrow& ar = quiver_.arrow(arrow);
        if (ex.src != ar.src) return -1;
        if (kind_ == Kind::TruncatedPath) {
            if (ex.word.empty() || ex.word.front() != arrow) return -1;
            return lookup_word(ar.tgt, {ex.word.begin() + 1, ex.word.end()});
        }
        const auto& info = staircase_.arrow_info[arrow];
        const auto [i, t] = staircase_.base_of(ex.src);
        if (info.kind == StaircaseQuiver::ArrowKind::Vertical) {
            if (ex.vert == 0) return -1;
            return standard_index(i, t + 1, ex.diag, ex.vert - 1);
        }
        if (ex.diag.empty() || ex.diag.front() != info.base_index) return -1;
        const Arrow& base_ar = base_.arrow(info.base_index);
        return standard_index(base_ar.tgt, t - 1, {ex.diag.begin() + 1, ex.diag.end()}, ex.vert);
    }

    /// Normal form of an arbitrary composable word (application order);
    /// -1 when the class is zero.
    int word_class(int src, const std::vector<int>& word) const {
        int acc = idempotent(src);
        for (int a : word) {
            acc = mult(arrow_elem(a), acc);
            if (acc < 0) return -1;
        }
        return acc;
    }

    /// The layer function on staircase vertices, l(i_t) = t.
    int layer(int vertex) const { return staircase().layer_of(vertex); }

    /// Support of the idempotent e = sum of e(i_s): the top-layer vertices.
    std::vector<int> top_layer_vertices() const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(base_.vertex_count()); ++i)
            out.push_back(staircase().vertex_at(i, s_));
        return out;
    }

    /// Corner algebra kQ/J^s of the recollement idempotent.
    BoundQuiverAlgebra corner() const {
        staircase();  // type guard
        return truncated_path(base_, s_);
    }

    /// The isomorphism of Lemma eNsQe: a kQ-path alpha of length l < s maps
    /// to the standard form b(alpha) a(alpha) from i_s back to j_s; longer
    /// paths map to zero (-1).
    int phi_of_path(int src, const std::vector<int>& base_word) const {
        staircase();
        if (static_cast<int>(base_word.size()) >= s_) return -1;
        return standard_index(src, s_, base_word, static_cast<int>(base_word.size()));
    }

    /// phi on a corner basis element (index in corner().basis()).
    int phi(const BoundQuiverAlgebra& corner_alg, int corner_idx) const {
        const BasisElem& e = corner_alg.basis().at(corner_idx);
        const int img = phi_of_path(e.src, e.word);
        if (img < 0) throw std::logic_error("phi: corner basis element of length >= s");
        return img;
    }

    bool same_algebra(const BoundQuiverAlgebra& o) const {
        return kind_ == o.kind_ && s_ == o.s_ && quiver_.vertices() == o.quiver_.vertices() &&
               quiver_.arrow_count() == o.quiver_.arrow_count();
    }

private:
    BasisElem make_standard(int i, int t, std::vector<int> diag, int m) const {
        BasisElem e;
        e.src = staircase_.vertex_at(i, t);
        int at = i, layer = t;
        std::vector<int> word;
        for (int a : diag) {
            word.push_back(staircase_.diagonal_arrow(a, layer));
            at = base_.arrow(a).tgt;
            --layer;
        }
        for (int k = 0; k < m; ++k) {
            word.push_back(staircase_.vertical_arrow(at, layer));
            ++layer;
        }
        e.tgt = staircase_.vertex_at(at, layer);
        e.word = std::move(word);
        e.diag = std::move(diag);
        e.vert = m;
        return e;
    }

    void push_basis_elem(BasisElem e) {
        const int idx = static_cast<int>(basis_.size());
        if (kind_ == Kind::TruncatedPath)
            word_index_[{e.src, e.word}] = idx;
        else
            standard_index_[{e.src, e.diag, e.vert}] = idx;
        basis_.push_back(std::move(e));
    }

    int lookup_word(int src, const std::vector<int>& word) const {
        auto it = word_index_.find({src, word});
        return it == word_index_.end() ? -1 : it->second;
    }

    int standard_index(int base_vertex, int t, const std::vector<int>& diag, int m) const {
        auto it = standard_index_.find({staircase_.vertex_at(base_vertex, t), diag, m});
        return it == standard_index_.end() ? -1 : it->second;
    }

    void finish() {
        idempotent_.assign(quiver_.vertex_count(), -1);
        arrow_elem_.assign(quiver_.arrow_count(), -1);
        by_source_.assign(quiver_.vertex_count(), {});
        by_target_.assign(quiver_.vertex_count(), {});
        for (int b = 0; b < dim(); ++b) {
            const BasisElem& e = basis_[b];
            by_source_[e.src].push_back(b);
            by_target_[e.tgt].push_back(b);
            if (e.word.empty()) idempotent_[e.src] = b;
            if (e.word.size() == 1) arrow_elem_[e.word.front()] = b;
        }
        for (int v = 0; v < static_cast<int>(quiver_.vertex_count()); ++v)
            if (idempotent_[v] < 0) throw std::logic_error("missing trivial path");
        for (int a = 0; a < static_cast<int>(quiver_.arrow_count()); ++a)
            if (arrow_elem_[a] < 0) throw std::logic_error("missing arrow class");
    }

    Kind kind_ = Kind::TruncatedPath;
    int s_ = 1;
    Quiver quiver_;
    Quiver base_;
    StaircaseQuiver staircase_;
    std::vector<BasisElem> basis_;
    std::vector<Relation> relations_;
    std::vector<int> idempotent_;
    std::vector<int> arrow_elem_;
    std::vector<std::vector<int>> by_source_;
    std::vector<std::vector<int>> by_target_;
    std::map<std::pair<int, std::vector<int>>, int> word_index_;
    std::map<std::tuple<int, std::vector<int>, int>, int> standard_index_;
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// kQ/J^s: basis all paths of length < s.
inline AlgebraPtr truncated_path_algebra(const Quiver& q, int s) {
    return std::make_shared<const BoundQuiverAlgebra>(BoundQuiverAlgebra::truncated_path(q, s));
}

/// N_s(Q) with its standard basis.
inline AlgebraPtr nilpotent_quiver_algebra(const Quiver& q, int s) {
    return std::make_shared<const BoundQuiverAlgebra>(BoundQuiverAlgebra::nilpotent_quiver(q, s));
}

/// N_s(Q)/(E_t) = N_{s-t}(Q); the vertex renaming is i_u -> i_{u-t}.
inline AlgebraPtr layer_quotient(const BoundQuiverAlgebra& n, int t) {
    if (t < 0 || t >= n.s()) throw std::invalid_argument("layer_quotient: need 0 <= t < s");
    return nilpotent_quiver_algebra(n.base_quiver(), n.s() - t);
}

/// Bongartz form for N_s(Q): gl.dim <= 2, so the Euler form is
///   sum_v dd_v ee_v - sum_{arrows v->w} dd_v ee_w + sum_{relation arrows} dd ee,
/// with one relation arrow i_t -> j_t per Q-arrow i->j and t = 1..s-1.
/// Takes flattened staircase dimension vectors; filtration monotonicity is
/// not required.
inline std::int64_t euler_form_nsq(const BoundQuiverAlgebra& n, const DimVector& dd,
                                   const DimVector& ee) {
    const StaircaseQuiver& sq = n.staircase();
    if (dd.size() != sq.quiver.vertex_count() || ee.size() != sq.quiver.vertex_count())
        throw std::invalid_argument("euler_form_nsq: dimension vector size mismatch");
    std::int64_t total = 0;
    for (std::size_t v = 0; v < sq.quiver.vertex_count(); ++v) total += dd[v] * ee[v];
    for (const Arrow& a : sq.quiver.arrows()) total -= dd[a.src] * ee[a.tgt];
    for (int a = 0; a < static_cast<int>(sq.base.arrow_count()); ++a) {
        const Arrow& ar = sq.base.arrow(a);
        for (int t = 1; t <= n.s() - 1; ++t)
            total += dd[sq.vertex_at(ar.src, t)] * ee[sq.vertex_at(ar.tgt, t)];
    }
    return total;
}

inline std::int64_t euler_form_nsq(const BoundQuiverAlgebra& n, const DimFiltration& dd,
                                   const DimFiltration& ee) {
    return euler_form_nsq(n, n.staircase().flatten(dd), n.staircase().flatten(ee));
}

}  // namespace nilq
