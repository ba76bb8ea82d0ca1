#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uniserial/errors.hpp"
#include "uniserial/linalg.hpp"
#include "uniserial/matrix.hpp"

namespace uniserial {

// The automorphism x as a list of (eigenvalue, block size) pairs. Together
// with the abelian radical V this pins down g = <x> |x V: x acts on block i
// by a single lower triangular Jordan block of size n_i and eigenvalue
// lambda_i relative to the chain basis v_{i,0}, ..., v_{i,n_i-1}.
struct JordanBlock {
    Rational eigenvalue;
    int size = 0;

    bool operator==(const JordanBlock& o) const {
        return eigenvalue == o.eigenvalue && size == o.size;
    }
};

struct JordanSpec {
    std::vector<JordanBlock> blocks;

    int dim_v() const {
        int d = 0;
        for (const auto& b : blocks) d += b.size;
        return d;
    }
    int block_count() const { return static_cast<int>(blocks.size()); }

    bool single_eigenvalue() const {
        for (const auto& b : blocks)
            if (b.eigenvalue != blocks[0].eigenvalue) return false;
        return true;
    }

    void validate() const {
        if (blocks.empty()) throw InputError("JordanSpec: no blocks");
        for (const auto& b : blocks)
            if (b.size < 1) throw InputError("JordanSpec: block size must be positive");
        // Within one eigenvalue the sizes must be listed descending.
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j)
                if (blocks[i].eigenvalue == blocks[j].eigenvalue &&
                    blocks[i].size < blocks[j].size)
                    throw InputError("JordanSpec: sizes not descending within an eigenvalue");
    }

    bool operator==(const JordanSpec& o) const { return blocks == o.blocks; }
    bool operator!=(const JordanSpec& o) const { return !(*this == o); }
};

// Basis x, v_{1,0}, ..., v_{1,n_1-1}, v_{2,0}, ... with the bracket table
// [x, v_{i,j}] = lambda_i v_{i,j} + v_{i,j+1} (no successor at the chain
// end) and [V, V] = 0.
struct LieAlgebra {
    JordanSpec spec;
    std::vector<int> block_offsets; // offset of v_{i,0} within the V part

    int dim() const { return 1 + spec.dim_v(); }

    // Index into the full basis; 0 is x.
    int basis_index(int block, int j) const {
        return 1 + block_offsets[block] + j;
    }

    std::string basis_label(int index) const {
        if (index == 0) return "x";
        auto [i, j] = v_position(index);
        return "v_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }

    // (block, chain position) of a V basis element.
    std::pair<int, int> v_position(int index) const {
        if (index < 1 || index >= dim()) throw InputError("basis index out of range");
        int off = index - 1;
        for (int i = spec.block_count() - 1; i >= 0; --i)
            if (off >= block_offsets[i]) return {i, off - block_offsets[i]};
        throw InputError("basis index out of range");
    }

    // Bracket of two basis elements as a sparse combination of basis elements.
    std::vector<std::pair<Rational, int>> bracket(int a, int b) const {
        if (a == b) return {};
        if (a != 0 && b != 0) return {}; // V is abelian
        bool flip = (b == 0);
        int v = flip ? a : b;
        auto [i, j] = v_position(v);
        std::vector<std::pair<Rational, int>> out;
        Rational lambda = spec.blocks[i].eigenvalue;
        Rational sign = flip ? Rational(-1) : Rational(1);
        if (lambda != 0) out.emplace_back(sign * lambda, v);
        if (j + 1 < spec.blocks[i].size) out.emplace_back(sign, basis_index(i, j + 1));
        return out;
    }

    // Matrix of ad x on V in the chain basis: block diagonal lower Jordan.
    Matrix ad_x_on_v() const {
        std::vector<Matrix> blocks;
        for (const auto& b : spec.blocks)
            blocks.push_back(Matrix::jordan_lower(b.size, b.eigenvalue));
        return Matrix::block_diagonal(blocks);
    }

    bool operator==(const LieAlgebra& o) const { return spec == o.spec; }
};

inline LieAlgebra build_algebra(JordanSpec spec) {
    spec.validate();
    LieAlgebra g;
    g.spec = std::move(spec);
    int off = 0;
    for (const auto& b : g.spec.blocks) {
        g.block_offsets.push_back(off);
        off += b.size;
    }
    return g;
}

// A representation is stored by the image A of x and one image per chain
// generator v_{i,0}; the images of the deeper chain elements are always the
// derived matrices (ad A - lambda_i)^j applied to the generator image.
struct Representation {
    LieAlgebra algebra;
    int d = 0;
    Matrix a;
    std::vector<Matrix> generators;

    void validate_shape() const {
        if (d < 1) throw InputError("Representation: dimension must be positive");
        if (!a.is_square() || a.rows() != d)
            throw InputError("Representation: A must be d x d");
        if (static_cast<int>(generators.size()) != algebra.spec.block_count())
            throw InputError("Representation: one generator image per block required");
        for (const auto& g : generators)
            if (g.rows() != d || g.cols() != d)
                throw InputError("Representation: generator image must be d x d");
    }
};

// Images of every basis element of g, in basis order (x first).
inline std::vector<Matrix> all_images(const Representation& rep) {
    rep.validate_shape();
    std::vector<Matrix> images;
    images.push_back(rep.a);
    for (int i = 0; i < rep.algebra.spec.block_count(); ++i) {
        const Rational& lambda = rep.algebra.spec.blocks[i].eigenvalue;
        Matrix m = rep.generators[i];
        for (int j = 0; j < rep.algebra.spec.blocks[i].size; ++j) {
            images.push_back(m);
            m = commutator(rep.a, m) - lambda * m;
        }
    }
    return images;
}

struct RelationViolation {
    std::string relation;     // "commutator" | "chain_termination" | "bracket"
    std::vector<int> indices; // basis/block indices involved, 0-based
    Matrix residual;
};

struct Verdict {
    bool ok = true;
    std::vector<RelationViolation> violations;
};

// Checks, on the derived image list: pairwise commutation of the V images,
// termination of each chain ((ad A - lambda_i)^{n_i} on the generator image
// vanishes), and the chain bracket relation itself. The last holds by
// construction for derived images but is kept so that the check stays
// meaningful if the derivation rule ever changes.
inline Verdict verify_representation(const Representation& rep) {
    rep.validate_shape();
    Verdict verdict;
    const auto& spec = rep.algebra.spec;

    std::vector<Matrix> v_images; // images of v_{i,j} in basis order
    for (int i = 0; i < spec.block_count(); ++i) {
        const Rational& lambda = spec.blocks[i].eigenvalue;
        Matrix m = rep.generators[i];
        for (int j = 0; j < spec.blocks[i].size; ++j) {
            v_images.push_back(m);
            m = commutator(rep.a, m) - lambda * m;
        }
        // m is now the image of the would-be v_{i,n_i}; the chain must stop.
        if (!m.is_zero())
            verdict.violations.push_back({"chain_termination", {i}, m});
    }

    int dv = spec.dim_v();
    for (int u = 0; u < dv; ++u)
        for (int w = u + 1; w < dv; ++w) {
            Matrix c = commutator(v_images[u], v_images[w]);
            if (!c.is_zero())
                verdict.violations.push_back({"commutator", {u, w}, c});
        }

    int idx = 0;
    for (int i = 0; i < spec.block_count(); ++i) {
        const Rational& lambda = spec.blocks[i].eigenvalue;
        for (int j = 0; j < spec.blocks[i].size; ++j, ++idx) {
            Matrix expected = (j + 1 < spec.blocks[i].size)
                                  ? v_images[idx + 1]
                                  : Matrix::zero(rep.d, rep.d);
            Matrix res = commutator(rep.a, v_images[idx]) - lambda * v_images[idx] - expected;
            if (!res.is_zero())
                verdict.violations.push_back({"bracket", {i, j}, res});
        }
    }

    verdict.ok = verdict.violations.empty();
    return verdict;
}

namespace detail {

inline bool images_independent(const Representation& rep) {
    return span_rank(all_images(rep)) == rep.algebra.dim();
}

} // namespace detail

// True iff the images of all basis elements of g are linearly independent
// in d^2-space. Requires a verified representation.
inline bool is_faithful(const Representation& rep) {
    if (!verify_representation(rep).ok)
        throw DomainError("is_faithful: not a representation");
    return detail::images_independent(rep);
}

struct SocleSeries {
    // chain[t] = basis of S_t as columns in the original space; chain[0] = {}.
    std::vector<std::vector<Matrix>> chain;
    std::vector<int> factor_dims;
};

namespace detail {

// Quotient bookkeeping: a subspace S of F^d in reduced form plus the
// complement coordinates (non-pivot standard vectors), leftmost pivots.
struct QuotientContext {
    int d = 0;
    std::vector<std::pair<int, Matrix>> reduced; // (pivot position, column)
    std::vector<int> free_positions;

    explicit QuotientContext(int dim) : d(dim) { refresh(); }

    void absorb(const Matrix& v) {
        Matrix w = reduce(v);
        int piv = -1;
        for (int i = 0; i < d; ++i)
            if (w(i, 0) != 0) { piv = i; break; }
        if (piv < 0) throw InconsistencyError("quotient: absorbed vector already in subspace");
        Rational inv = w(piv, 0);
        for (int i = 0; i < d; ++i) w(i, 0) /= inv;
        for (auto& [p, col] : reduced) {
            if (col(piv, 0) == 0) continue;
            Rational f = col(piv, 0);
            for (int i = 0; i < d; ++i) col(i, 0) -= f * w(i, 0);
        }
        reduced.emplace_back(piv, std::move(w));
        refresh();
    }

    Matrix reduce(Matrix v) const {
        for (const auto& [p, col] : reduced) {
            if (v(p, 0) == 0) continue;
            Rational f = v(p, 0);
            for (int i = 0; i < d; ++i) v(i, 0) -= f * col(i, 0);
        }
        return v;
    }

    int quotient_dim() const { return static_cast<int>(free_positions.size()); }

    Matrix project(const Matrix& v) const {
        Matrix w = reduce(v);
        Matrix out(quotient_dim(), 1);
        for (int i = 0; i < quotient_dim(); ++i) out(i, 0) = w(free_positions[i], 0);
        return out;
    }

    Matrix lift(const Matrix& qv) const {
        Matrix v(d, 1);
        for (int i = 0; i < quotient_dim(); ++i) v(free_positions[i], 0) = qv(i, 0);
        return v;
    }

    Matrix induced(const Matrix& m) const {
        Matrix out(quotient_dim(), quotient_dim());
        for (int c = 0; c < quotient_dim(); ++c) {
            Matrix col(d, 1);
            for (int i = 0; i < d; ++i) col(i, 0) = m(i, free_positions[c]);
            out.set_block(0, c, project(col));
        }
        return out;
    }

private:
    void refresh() {
        std::vector<bool> pivot(d, false);
        for (const auto& [p, col] : reduced) pivot[p] = true;
        free_positions.clear();
        for (int i = 0; i < d; ++i)
            if (!pivot[i]) free_positions.push_back(i);
    }
};

} // namespace detail

// Ascending socle series: at each stage, W is the common kernel of the
// V images in the current quotient and the socle is the sum over rational
// eigenvalues mu of the mu-eigenspace of the induced A inside W. Inputs
// whose constituents are not one-dimensional over Q are rejected.
inline SocleSeries socle_series(const Representation& rep) {
    if (!verify_representation(rep).ok)
        throw DomainError("socle_series: not a representation");
    std::vector<Matrix> images = all_images(rep);
    for (std::size_t i = 1; i < images.size(); ++i)
        if (!is_nilpotent(images[i]))
            throw DomainError("socle_series: a radical image is not nilpotent; "
                              "kernel-based socle computation does not apply");

    SocleSeries series;
    series.chain.push_back({});
    detail::QuotientContext ctx(rep.d);
    std::vector<Matrix> s_basis;

    while (ctx.quotient_dim() > 0) {
        int m = ctx.quotient_dim();
        std::vector<Matrix> induced_v;
        for (std::size_t i = 1; i < images.size(); ++i)
            induced_v.push_back(ctx.induced(images[i]));
        Matrix induced_a = ctx.induced(rep.a);

        std::vector<Matrix> w_basis =
            induced_v.empty() ? std::vector<Matrix>{} : common_kernel(induced_v);
        if (w_basis.empty())
            throw InconsistencyError("socle_series: nilpotent images with trivial common kernel");

        int w = static_cast<int>(w_basis.size());
        Matrix k(m, w);
        for (int c = 0; c < w; ++c) k.set_block(0, c, w_basis[c]);

        // A restricted to W: solve K * A_W = A * K column by column.
        Matrix ak = induced_a * k;
        Matrix a_w(w, w);
        for (int c = 0; c < w; ++c) {
            auto sol = solve_linear(k, ak.block(0, c, m, 1));
            if (!sol) throw InconsistencyError("socle_series: W is not A-invariant");
            a_w.set_block(0, c, sol->particular);
        }

        RationalSpectrum spectrum = rational_eigenvalues(a_w);
        if (!spectrum.split)
            throw DomainError("socle_series: spectrum of A on the socle candidate "
                              "is not rational");

        std::vector<Matrix> socle_quot;
        for (const auto& [mu, mult] : spectrum.roots) {
            Matrix shifted = a_w - mu * Matrix::identity(w);
            for (const auto& v : kernel_basis(shifted)) socle_quot.push_back(k * v);
        }
        if (socle_quot.empty())
            throw InconsistencyError("socle_series: empty socle on a nonzero quotient");

        series.factor_dims.push_back(static_cast<int>(socle_quot.size()));
        // Lift through the current coordinates before any absorption changes
        // them.
        std::vector<Matrix> lifted;
        for (const auto& qv : socle_quot) lifted.push_back(ctx.lift(qv));
        for (const auto& v : lifted) {
            s_basis.push_back(v);
            ctx.absorb(v);
        }
        series.chain.push_back(s_basis);
    }
    return series;
}

inline bool is_uniserial(const Representation& rep) {
    for (int f : socle_series(rep).factor_dims)
        if (f != 1) return false;
    return true;
}

// y |-> -R(y)^T. An involution that preserves being a representation,
// faithfulness and uniseriality.
inline Representation dual_representation(const Representation& rep) {
    rep.validate_shape();
    Representation dual = rep;
    dual.a = -rep.a.transpose();
    for (auto& g : dual.generators) g = -g.transpose();
    return dual;
}

// Representation of the subalgebra spanned by x and the selected blocks,
// acting on the same space.
inline Representation restrict_to_blocks(const Representation& rep,
                                         const std::vector<int>& block_subset) {
    rep.validate_shape();
    if (block_subset.empty()) throw InputError("restrict_to_blocks: empty subset");
    std::vector<bool> seen(rep.algebra.spec.block_count(), false);
    for (int b : block_subset) {
        if (b < 0 || b >= rep.algebra.spec.block_count())
            throw InputError("restrict_to_blocks: block index out of range");
        if (seen[b]) throw InputError("restrict_to_blocks: duplicate block index");
        seen[b] = true;
    }
    JordanSpec sub;
    Representation out;
    for (int b = 0; b < rep.algebra.spec.block_count(); ++b) {
        if (!seen[b]) continue;
        sub.blocks.push_back(rep.algebra.spec.blocks[b]);
        out.generators.push_back(rep.generators[b]);
    }
    out.algebra = build_algebra(sub);
    out.d = rep.d;
    out.a = rep.a;
    return out;
}

} // namespace uniserial
