#include <bit>

#include "sscx/errors.hpp"
#include "sscx/fiber.hpp"

namespace sscx {
namespace {

Mask above(int i) { return ~((Mask{2} << i) - 1); }

void add_term(Form& f, Mask m, long v) {
    if (v == 0) return;
    auto [it, fresh] = f.emplace(m, v);
    if (!fresh && (it->second += v) == 0) f.erase(it);
}

void lex_subsets(int size, int start, int total, Mask acc, std::vector<Mask>& out) {
    if (size == 0) {
        out.push_back(acc);
        return;
    }
    for (int i = start; i <= total - size; ++i) lex_subsets(size - 1, i + 1, total, acc | (Mask{1} << i), out);
}

} // namespace

int degree(Mask m) { return std::popcount(m); }

int wedge_sign(Mask s, Mask t) {
    if (s & t) return 0;
    int inversions = 0;
    for (Mask rest = t; rest; rest &= rest - 1) inversions += std::popcount(s & above(std::countr_zero(rest)));
    return inversions % 2 ? -1 : 1;
}

Form basis_form(int i) { return Form{{Mask{1} << i, 1}}; }

Form wedge(const Form& a, const Form& b) {
    Form out;
    for (const auto& [ma, va] : a)
        for (const auto& [mb, vb] : b)
            if (int s = wedge_sign(ma, mb)) add_term(out, ma | mb, s * va * vb);
    return out;
}

Form contract(int i, const Form& f) {
    Form out;
    const Mask bit = Mask{1} << i;
    for (const auto& [m, v] : f) {
        if (!(m & bit)) continue;
        add_term(out, m ^ bit, std::popcount(m & above(i)) % 2 ? -v : v);
    }
    return out;
}

Form operator+(const Form& a, const Form& b) {
    Form out = a;
    for (const auto& [m, v] : b) add_term(out, m, v);
    return out;
}

Form scale(long s, const Form& f) {
    Form out;
    for (const auto& [m, v] : f) add_term(out, m, s * v);
    return out;
}

std::string to_string(const TwistedSpace& s) {
    return "(" + std::to_string(s.a) + "," + std::to_string(s.B) + "," + std::to_string(s.c) + ")";
}

FiberModel::FiberModel(int n) : n_(n) {
    if (n < 2 || n > kMaxN) throw UsageError("fiber model needs 2 <= n <= " + std::to_string(kMaxN));
    const int dim = 2 * n;
    subsets_.resize(static_cast<std::size_t>(dim + 1));
    rank_of_.assign(std::size_t{1} << dim, 0);
    for (int a = 0; a <= dim; ++a) {
        auto& list = subsets_[static_cast<std::size_t>(a)];
        lex_subsets(a, 0, dim, 0, list);
        for (std::size_t r = 0; r < list.size(); ++r) rank_of_[list[r]] = static_cast<std::uint32_t>(r);
    }
    for (int i = 0; i < n; ++i) omega_ = omega_ + wedge(basis_form(i), basis_form(n + i));
    for (int i = 0; i < 2; ++i) omega_u_[i] = contract(i, omega_);
    omega_bar_ = omega_ + wedge(basis_form(0), omega_u_[0]) + wedge(basis_form(1), omega_u_[1]);
}

const std::vector<Mask>& FiberModel::subsets(int a) const {
    if (a < 0 || a > dim_v()) throw UsageError("wedge degree out of range");
    return subsets_[static_cast<std::size_t>(a)];
}

std::size_t FiberModel::dim(const TwistedSpace& s) const {
    if (s.a < 0 || s.a > dim_v() || s.B < 0) return 0;
    return subsets_[static_cast<std::size_t>(s.a)].size() * static_cast<std::size_t>(s.B + 1);
}

std::size_t FiberModel::index_of(const TwistedSpace& s, Mask m, int p) const {
    return rank_of_[m] * static_cast<std::size_t>(s.B + 1) + static_cast<std::size_t>(p);
}

std::vector<Monomial> FiberModel::basis_of(const TwistedSpace& s) const {
    std::vector<Monomial> out;
    out.reserve(dim(s));
    for (Mask m : subsets(s.a))
        for (int p = 0; p <= s.B; ++p) out.push_back({m, p});
    return out;
}

Mask FiberModel::perp_mask() const { return ((Mask{1} << dim_v()) - 1) & ~Mask{3}; }

std::vector<int> FiberModel::quotient_indices() const {
    std::vector<int> idx;
    for (int i = 2; i < dim_v(); ++i)
        if (i != n_ && i != n_ + 1) idx.push_back(i);
    return idx;
}

} // namespace sscx
