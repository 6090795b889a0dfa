#include <algorithm>
#include <map>
#include <stdexcept>

#include "sscx/exactlinalg.hpp"

namespace sscx {
namespace {

using IntRow = std::vector<std::pair<std::size_t, BigInt>>;

constexpr std::size_t kDenseCutoff = 64;

void make_primitive(IntRow& row) {
    if (row.empty()) return;
    BigInt g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(row.front().second) < 0) g = -g;
    if (g != 1)
        for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// Rows of m with denominators cleared, each reduced to its primitive part.
std::vector<IntRow> integer_rows(const SparseMatrix& m) {
    const SparseMatrix t = m.transpose();
    std::vector<IntRow> rows(t.cols());
    for (std::size_t r = 0; r < t.cols(); ++r) {
        const auto& src = t.column(r);
        BigInt l = 1;
        for (const auto& e : src) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
        rows[r].reserve(src.size());
        for (const auto& [c, v] : src) {
            BigInt x = v.get_num() * (l / v.get_den());
            rows[r].emplace_back(c, std::move(x));
        }
        make_primitive(rows[r]);
    }
    return rows;
}

BigInt entry_at(const IntRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != row.end() && it->first == col) return it->second;
    return 0;
}

// row <- (p/g) * row - (x/g) * pivot, where p is the pivot entry and x the
// entry of row, both in column col. The result vanishes in column col.
IntRow eliminate(const IntRow& row, const IntRow& pivot, std::size_t col) {
    const BigInt p = entry_at(pivot, col);
    const BigInt x = entry_at(row, col);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), x.get_mpz_t());
    const BigInt sr = p / g;
    const BigInt sp = x / g;
    IntRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, sr * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -sp * pivot[j].second);
            ++j;
        } else {
            BigInt v = sr * row[i].second - sp * pivot[j].second;
            if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

struct IntEchelon {
    std::vector<IntRow> rows;          // in increasing pivot order
    std::vector<std::size_t> pivots;
};

// Sparse fraction-free forward elimination. Columns are processed left to
// right; in each column the pivot is the candidate row with fewest nonzeros,
// ties broken by lowest row index, so the result is reproducible.
IntEchelon forward_eliminate(std::vector<IntRow> rows) {
    std::map<std::size_t, std::vector<std::size_t>> by_lead;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!rows[r].empty()) by_lead[rows[r].front().first].push_back(r);

    IntEchelon result;
    while (!by_lead.empty()) {
        auto node = by_lead.extract(by_lead.begin());
        const std::size_t col = node.key();
        auto& candidates = node.mapped();
        std::sort(candidates.begin(), candidates.end());
        std::size_t best = candidates.front();
        for (auto r : candidates)
            if (rows[r].size() < rows[best].size()) best = r;
        for (auto r : candidates) {
            if (r == best) continue;
            rows[r] = eliminate(rows[r], rows[best], col);
            if (!rows[r].empty()) by_lead[rows[r].front().first].push_back(r);
        }
        result.pivots.push_back(col);
        result.rows.push_back(std::move(rows[best]));
    }
    return result;
}

} // namespace

std::size_t rank_sparse(const SparseMatrix& m) {
    return forward_eliminate(integer_rows(m)).pivots.size();
}

std::size_t rank_dense_bareiss(const SparseMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;
    std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc, 0));
    auto rows = integer_rows(m);
    for (std::size_t r = 0; r < nr; ++r)
        for (auto& [c, v] : rows[r]) a[r][c] = std::move(v);
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && sgn(a[piv][col]) == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                BigInt v = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
                    throw std::logic_error("Bareiss division not exact");
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::size_t rank(const SparseMatrix& m) {
    if (m.rows() < kDenseCutoff && m.cols() < kDenseCutoff) return rank_dense_bareiss(m);
    return rank_sparse(m);
}

RowEchelon reduced_row_echelon(const SparseMatrix& m) {
    IntEchelon ech = forward_eliminate(integer_rows(m));
    const std::size_t count = ech.rows.size();
    // Back substitution, bottom-up: every row below is already reduced, so
    // clearing one pivot column never reintroduces another.
    for (std::size_t i = count; i-- > 0;) {
        for (std::size_t s = i + 1; s < count; ++s) {
            if (sgn(entry_at(ech.rows[i], ech.pivots[s])) != 0)
                ech.rows[i] = eliminate(ech.rows[i], ech.rows[s], ech.pivots[s]);
        }
    }
    RowEchelon out;
    out.pivots = std::move(ech.pivots);
    out.rows.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const BigInt lead = entry_at(ech.rows[i], out.pivots[i]);
        SparseVector row;
        row.reserve(ech.rows[i].size());
        for (auto& [c, v] : ech.rows[i]) {
            Rational q(v, lead);
            q.canonicalize();
            row.emplace_back(c, std::move(q));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace sscx
