#include <algorithm>
#include <numeric>

#include "sscx/errors.hpp"
#include "sscx/exactlinalg.hpp"

namespace sscx {

SubspaceBasis::SubspaceBasis(std::size_t ambient, SparseMatrix basis, std::vector<std::size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

SubspaceBasis SubspaceBasis::whole(std::size_t ambient) {
    std::vector<std::size_t> idx(ambient);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return SubspaceBasis(ambient, SparseMatrix::identity(ambient), std::move(idx));
}

SubspaceBasis SubspaceBasis::coordinate(std::size_t ambient, std::vector<std::size_t> indices) {
    std::vector<SparseVector> cols;
    cols.reserve(indices.size());
    for (auto i : indices) {
        if (i >= ambient) throw UsageError("coordinate index outside ambient space");
        cols.push_back({{i, Rational(1)}});
    }
    return SubspaceBasis(ambient, SparseMatrix::from_columns(ambient, std::move(cols)), std::move(indices));
}

SubspaceBasis SubspaceBasis::span_of(const SparseMatrix& generators) {
    RowEchelon rre = reduced_row_echelon(generators.transpose());
    return SubspaceBasis(generators.rows(), SparseMatrix::from_columns(generators.rows(), std::move(rre.rows)),
                         std::move(rre.pivots));
}

SubspaceBasis SubspaceBasis::kernel_of(const SparseMatrix& m) {
    const RowEchelon rre = reduced_row_echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : rre.pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    std::vector<std::size_t> slot(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) {
            slot[c] = free_cols.size();
            free_cols.push_back(c);
        }
    }
    std::vector<SparseVector> cols(free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) cols[k].emplace_back(free_cols[k], Rational(1));
    for (std::size_t r = 0; r < rre.rows.size(); ++r) {
        for (const auto& [c, v] : rre.rows[r]) {
            if (c == rre.pivots[r]) continue;
            cols[slot[c]].emplace_back(rre.pivots[r], -v);
        }
    }
    return SubspaceBasis(n, SparseMatrix::from_columns(n, std::move(cols)), std::move(free_cols));
}

std::optional<SparseVector> SubspaceBasis::coordinates(const SparseVector& v) const {
    SparseVector z;
    // v is sorted by index; pivots may not be, so look each one up.
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        auto it = std::lower_bound(v.begin(), v.end(), pivots_[k],
                                   [](const auto& e, std::size_t idx) { return e.first < idx; });
        if (it != v.end() && it->first == pivots_[k]) z.emplace_back(k, it->second);
    }
    if (sscx::apply(basis_, z) != v) return std::nullopt;
    return z;
}

SparseMatrix restrict_map(const SparseMatrix& m, const SubspaceBasis& dom, const SubspaceBasis& cod) {
    if (m.cols() != dom.ambient_dim() || m.rows() != cod.ambient_dim())
        throw UsageError("restrict: subspace ambient dimensions do not match the map");
    std::vector<SparseVector> cols(dom.dim());
    for (std::size_t k = 0; k < dom.dim(); ++k) {
        auto coords = cod.coordinates(sscx::apply(m, dom.vectors().column(k)));
        if (!coords) throw RefutationError("image escapes codomain subspace");
        cols[k] = std::move(*coords);
    }
    return SparseMatrix::from_columns(cod.dim(), std::move(cols));
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw UsageError("subspace_equal: ambient dimensions differ");
    const std::size_t ra = rank(a.vectors());
    const std::size_t rb = rank(b.vectors());
    if (ra != rb) return false;
    return rank(hconcat(a.vectors(), b.vectors())) == ra;
}

bool subspace_contains(const SubspaceBasis& outer, const SubspaceBasis& inner) {
    if (outer.ambient_dim() != inner.ambient_dim()) throw UsageError("subspace_contains: ambient dimensions differ");
    for (std::size_t k = 0; k < inner.dim(); ++k)
        if (!outer.contains(inner.vectors().column(k))) return false;
    return true;
}

} // namespace sscx
