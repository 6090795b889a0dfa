#include "sscx/exactlinalg.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "sscx/errors.hpp"

namespace sscx {

void normalize(SparseVector& v) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVector out;
    out.reserve(v.size());
    for (auto& [idx, val] : v) {
        if (!out.empty() && out.back().first == idx) {
            out.back().second += val;
        } else {
            out.emplace_back(idx, std::move(val));
        }
    }
    std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
    v = std::move(out);
}

SparseVector axpy(const Rational& alpha, const SparseVector& x, const SparseVector& y) {
    SparseVector out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, alpha * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.push_back(y[j]);
            ++j;
        } else {
            Rational s = alpha * x[i].second + y[j].second;
            if (sgn(s) != 0) out.emplace_back(x[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    if (sgn(alpha) == 0) std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
    return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace_back(i, Rational(1));
    return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVector> columns) {
    SparseMatrix m;
    m.rows_ = rows;
    m.cols_ = std::move(columns);
    for (auto& col : m.cols_) {
        normalize(col);
        if (!col.empty() && col.back().first >= rows) throw UsageError("matrix entry row index out of range");
    }
    return m;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t total = 0;
    for (const auto& c : cols_) total += c.size();
    return total;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
    const auto& col = cols_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != col.end() && it->first == r) return it->second;
    return Rational(0);
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols(), rows_);
    for (std::size_t c = 0; c < cols_.size(); ++c)
        for (const auto& [r, v] : cols_[c]) t.cols_[r].emplace_back(c, v);
    return t;
}

SparseMatrix SparseMatrix::column_range(std::size_t first, std::size_t count) const {
    if (first + count > cols()) throw UsageError("column range out of bounds");
    SparseMatrix m(rows_, 0);
    m.cols_.assign(cols_.begin() + static_cast<std::ptrdiff_t>(first),
                   cols_.begin() + static_cast<std::ptrdiff_t>(first + count));
    return m;
}

SparseMatrix SparseMatrix::select_columns(const std::vector<std::size_t>& which) const {
    SparseMatrix m(rows_, 0);
    m.cols_.reserve(which.size());
    for (auto c : which) m.cols_.push_back(cols_.at(c));
    return m;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
    if (rows_ != other.rows_ || cols() != other.cols()) throw UsageError("dimension mismatch in matrix sum");
    SparseMatrix m(rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c) m.cols_[c] = axpy(Rational(1), cols_[c], other.cols_[c]);
    return m;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const { return *this + (-other); }

SparseMatrix SparseMatrix::operator-() const { return Rational(-1) * *this; }

SparseMatrix operator*(const Rational& s, const SparseMatrix& m) {
    if (sgn(s) == 0) return SparseMatrix(m.rows(), m.cols());
    SparseMatrix out = m;
    for (auto& col : out.cols_)
        for (auto& e : col) e.second *= s;
    return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

SparseVector apply(const SparseMatrix& m, const SparseVector& v) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [c, x] : v) {
        if (c >= m.cols()) throw UsageError("vector index exceeds matrix columns");
        for (const auto& [r, a] : m.column(c)) acc[r] += a * x;
    }
    SparseVector out;
    out.reserve(acc.size());
    for (auto& [r, val] : acc)
        if (sgn(val) != 0) out.emplace_back(r, std::move(val));
    return out;
}

SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw UsageError("dimension mismatch in composition");
    std::vector<SparseVector> cols(b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) cols[c] = sscx::apply(a, b.column(c));
    return SparseMatrix::from_columns(a.rows(), std::move(cols));
}

SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows()) throw UsageError("row mismatch in concatenation");
    std::vector<SparseVector> cols;
    cols.reserve(a.cols() + b.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) cols.push_back(a.column(c));
    for (std::size_t c = 0; c < b.cols(); ++c) cols.push_back(b.column(c));
    return SparseMatrix::from_columns(a.rows(), std::move(cols));
}

SparseMatrix assemble_blocks(std::size_t rows, std::size_t cols,
                             const std::vector<std::tuple<std::size_t, std::size_t, const SparseMatrix*>>& blocks) {
    std::vector<SparseVector> out(cols);
    for (const auto& [r0, c0, block] : blocks) {
        if (r0 + block->rows() > rows || c0 + block->cols() > cols) throw UsageError("block exceeds matrix bounds");
        for (std::size_t c = 0; c < block->cols(); ++c)
            for (const auto& [r, v] : block->column(c)) out[c0 + c].emplace_back(r0 + r, v);
    }
    return SparseMatrix::from_columns(rows, std::move(out));
}

void write_triples(std::ostream& out, const SparseMatrix& m) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c))
            out << r << ' ' << c << ' ' << v.get_num().get_str() << '/' << v.get_den().get_str() << '\n';
}

SparseMatrix read_triples(std::istream& in, std::size_t rows, std::size_t cols) {
    std::vector<SparseVector> columns(cols);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        std::istringstream ls(line);
        std::size_t r = 0, c = 0;
        std::string value;
        if (!(ls >> r >> c >> value)) throw UsageError("malformed triple line: " + line);
        if (r >= rows || c >= cols) throw UsageError("triple index out of range: " + line);
        Rational q(value);
        q.canonicalize();
        columns[c].emplace_back(r, q);
    }
    return SparseMatrix::from_columns(rows, std::move(columns));
}

} // namespace sscx
