#include <functional>

#include "sscx/errors.hpp"
#include "sscx/fiber.hpp"
#include "sscx/weights.hpp"

namespace sscx {
namespace {

std::vector<Mask> lex_masks_over(const std::vector<int>& indices, int size) {
    std::vector<Mask> out;
    if (size < 0 || size > static_cast<int>(indices.size())) return out;
    std::function<void(int, int, Mask)> rec = [&](int left, int start, Mask acc) {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        for (int i = start; i <= static_cast<int>(indices.size()) - left; ++i)
            rec(left - 1, i + 1, acc | (Mask{1} << indices[static_cast<std::size_t>(i)]));
    };
    rec(size, 0, 0);
    return out;
}

// Partial derivative d/de_i of e1^p e2^(B-p): (coefficient, new exponent of e1).
std::pair<long, int> partial(int i, int B, int p) {
    if (i == 0) return {p, p - 1};
    return {B - p, p};
}

void check_space(const FiberModel& model, const TwistedSpace& s, const char* what) {
    if (s.a < 0 || s.a > model.dim_v() || s.B < 0)
        throw UsageError(std::string(what) + ": space " + to_string(s) + " out of range");
}

void check_ab(const FiberModel& model, int a, int b, const char* what) {
    if (a < 0 || b < 0 || a + b > model.dim_v() - 2)
        throw UsageError(std::string(what) + ": requires a, b >= 0 and a + b <= 2n-2");
}

} // namespace

std::string to_string(MapKind k) {
    switch (k) {
    case MapKind::d0: return "d0";
    case MapKind::d1: return "d1";
    case MapKind::d2: return "d2";
    case MapKind::d: return "d";
    case MapKind::tr: return "tr";
    case MapKind::wedge_omega_bar: return "wedge_omega_bar";
    }
    return "?";
}

MapKind parse_map_kind(const std::string& name) {
    for (MapKind k : {MapKind::d0, MapKind::d1, MapKind::d2, MapKind::d, MapKind::tr, MapKind::wedge_omega_bar})
        if (to_string(k) == name) return k;
    throw UsageError("unknown map kind '" + name + "'");
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
    if (!(f.dst == g.src))
        throw UsageError("compose: " + to_string(f.dst) + " does not match " + to_string(g.src));
    return {f.src, g.dst, compose(g.matrix, f.matrix)};
}

LinearMap operator+(const LinearMap& f, const LinearMap& g) {
    if (!(f.src == g.src) || !(f.dst == g.dst)) throw UsageError("sum of maps between different spaces");
    return {f.src, f.dst, f.matrix + g.matrix};
}

LinearMap operator*(const Rational& s, const LinearMap& f) { return {f.src, f.dst, s * f.matrix}; }

TwistedSpace codomain(MapKind kind, const TwistedSpace& s) {
    switch (kind) {
    case MapKind::d0: return {s.a - 1, s.B + 1, s.c + 1};
    case MapKind::d1:
    case MapKind::d2:
    case MapKind::d: return {s.a + 1, s.B - 1, s.c};
    case MapKind::tr: return {s.a - 1, s.B - 1, s.c};
    case MapKind::wedge_omega_bar: return {s.a + 2, s.B, s.c};
    }
    throw UsageError("unknown map kind");
}

LinearMap structure_map(const FiberModel& model, MapKind kind, const TwistedSpace& src) {
    check_space(model, src, "structure_map");
    const TwistedSpace dst = codomain(kind, src);
    // A wedge degree outside 0..2n just means a zero codomain; a negative
    // symmetric degree is a caller error.
    if (dst.B < 0) throw UsageError("structure_map: " + to_string(kind) + " not defined on " + to_string(src));

    const int B = src.B;
    std::vector<SparseVector> cols;
    cols.reserve(model.dim(src));
    for (const Monomial& mono : model.basis_of(src)) {
        SparseVector col;
        auto emit = [&](const Form& f, int q, const Rational& coef) {
            for (const auto& [m, v] : f) col.emplace_back(model.index_of(dst, m, q), coef * v);
        };
        const Form lambda{{mono.mask, 1}};
        switch (kind) {
        case MapKind::d0:
            emit(contract(0, lambda), mono.p, 1);
            emit(contract(1, lambda), mono.p + 1, -1);
            break;
        case MapKind::tr:
        case MapKind::d1:
        case MapKind::d2:
        case MapKind::d:
            for (int i = 0; i < 2; ++i) {
                auto [coef, q] = partial(i, B, mono.p);
                if (coef == 0) continue;
                if (kind == MapKind::tr) {
                    emit(contract(i, lambda), q, coef);
                    continue;
                }
                if (kind != MapKind::d2) {
                    Rational w(coef);
                    if (kind == MapKind::d) w /= B + 1;
                    emit(wedge(contract(i, lambda), model.omega()), q, w);
                }
                if (kind != MapKind::d1) emit(wedge(lambda, model.omega_u(i)), q, coef);
            }
            break;
        case MapKind::wedge_omega_bar:
            emit(wedge(lambda, model.omega_bar()), mono.p, 1);
            break;
        }
        cols.push_back(std::move(col));
    }
    return {src, dst, SparseMatrix::from_columns(model.dim(dst), std::move(cols))};
}

LinearMap xi_lift(const FiberModel& model, const TwistedSpace& src) {
    check_space(model, src, "xi_lift");
    const TwistedSpace dst{src.a + 1, src.B + 1, src.c};
    check_space(model, dst, "xi_lift");
    std::vector<SparseVector> cols;
    cols.reserve(model.dim(src));
    for (const Monomial& mono : model.basis_of(src)) {
        SparseVector col;
        const Form mu{{mono.mask, 1}};
        for (const auto& [m, v] : wedge(mu, basis_form(0))) col.emplace_back(model.index_of(dst, m, mono.p + 1), v);
        for (const auto& [m, v] : wedge(mu, basis_form(1))) col.emplace_back(model.index_of(dst, m, mono.p), v);
        cols.push_back(std::move(col));
    }
    return {src, dst, SparseMatrix::from_columns(model.dim(dst), std::move(cols))};
}

SubspaceBasis fiber_wedge_perp(const FiberModel& model, int a, int B) {
    if (a < 0 || a > model.dim_v() - 2 || B < 0) throw UsageError("fiber_wedge_perp: requires 0 <= a <= 2n-2, B >= 0");
    const TwistedSpace s{a, B, 0};
    std::vector<std::size_t> idx;
    for (Mask m : model.subsets(a)) {
        if (m & 3u) continue;
        for (int p = 0; p <= B; ++p) idx.push_back(model.index_of(s, m, p));
    }
    return SubspaceBasis::coordinate(model.dim(s), std::move(idx));
}

std::size_t expected_dim_E(int n, int a, int b) {
    BigInt d = binomial(2 * n - 2, a) * (b + 1) + binomial(2 * n - 2, a - 1) * b;
    return d.get_ui();
}

SubspaceBasis fiber_E(const FiberModel& model, int a, int b) {
    check_ab(model, a, b, "fiber_E");
    const TwistedSpace s{a, b, 0};
    SubspaceBasis e = a == 0 ? SubspaceBasis::whole(model.dim(s))
                             : SubspaceBasis::kernel_of(structure_map(model, MapKind::d0, s).matrix);
    if (e.dim() != expected_dim_E(model.n(), a, b))
        throw RefutationError("fiber_E(" + std::to_string(a) + "," + std::to_string(b) + "): kernel has dimension " +
                              std::to_string(e.dim()) + ", expected " +
                              std::to_string(expected_dim_E(model.n(), a, b)));
    return e;
}

SubspaceBasis fiber_E_by_lifts(const FiberModel& model, int a, int b) {
    check_ab(model, a, b, "fiber_E_by_lifts");
    SparseMatrix gens = fiber_wedge_perp(model, a, b).vectors();
    if (a >= 1 && b >= 1) {
        const SubspaceBasis below = fiber_wedge_perp(model, a - 1, b - 1);
        const LinearMap xi = xi_lift(model, {a - 1, b - 1, 0});
        gens = hconcat(gens, compose(xi.matrix, below.vectors()));
    }
    return SubspaceBasis::span_of(gens);
}

SparseMatrix restricted_d(const FiberModel& model, int a, int b) {
    check_ab(model, a, b, "restricted_d");
    if (b < 1) throw UsageError("restricted_d: requires b >= 1");
    const LinearMap d = structure_map(model, MapKind::d, {a, b, 0});
    return restrict_map(d.matrix, fiber_E(model, a, b), fiber_E(model, a + 1, b - 1));
}

SparseMatrix omega_bar_quotient_map(const FiberModel& model, int t) {
    const std::vector<int> idx = model.quotient_indices();
    const auto src = lex_masks_over(idx, t - 2);
    const auto dst = lex_masks_over(idx, t);
    std::map<Mask, std::size_t> dst_rank;
    for (std::size_t r = 0; r < dst.size(); ++r) dst_rank.emplace(dst[r], r);

    std::vector<SparseVector> cols;
    cols.reserve(src.size());
    for (Mask m : src) {
        SparseVector col;
        for (const auto& [w, v] : wedge(Form{{m, 1}}, model.omega_bar())) {
            auto it = dst_rank.find(w);
            if (it != dst_rank.end()) col.emplace_back(it->second, Rational(v));
        }
        cols.push_back(std::move(col));
    }
    return SparseMatrix::from_columns(dst.size(), std::move(cols));
}

} // namespace sscx
