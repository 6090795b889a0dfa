#include "sscx/complexes.hpp"

#include <tuple>

#include "sscx/errors.hpp"
#include "sscx/weights.hpp"

namespace sscx {
namespace {

void check_t(const FiberModel& model, int t, const char* what) {
    if (t < 0 || t > model.dim_v() - 2) throw UsageError(std::string(what) + ": requires 0 <= t <= 2n-2");
}

std::string label(const char* name, int a, int b) {
    return std::string(name) + "^{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

std::string h_key(int degree) { return "h[" + std::to_string(degree) + "]"; }

std::int64_t flag(bool ok) { return ok ? 1 : 0; }

std::size_t at_or_zero(const std::map<int, std::size_t>& m, int key) {
    auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
}

Report fiber_report(const char* suite, const FiberModel& model, int t) {
    Report rep;
    rep.suite = suite;
    rep.param("n", model.n());
    rep.param("t", t);
    return rep;
}

} // namespace

void compare_cohomology(Report& rep, const std::map<int, std::size_t>& want, const std::map<int, std::size_t>& got) {
    std::map<int, std::size_t> keys = want;
    keys.insert(got.begin(), got.end());
    for (const auto& entry : keys) {
        const int deg = entry.first;
        rep.compare(h_key(deg), static_cast<std::int64_t>(at_or_zero(want, deg)),
                    static_cast<std::int64_t>(at_or_zero(got, deg)));
    }
}

std::optional<std::size_t> complex_defect(const ChainComplex& c) {
    if (c.size() == 0) return std::nullopt;
    if (c.differentials.size() + 1 != c.size()) return 0;
    for (std::size_t i = 0; i < c.differentials.size(); ++i) {
        const SparseMatrix& d = c.differentials[i];
        if (d.cols() != c.dims[i] || d.rows() != c.dims[i + 1]) return i;
    }
    for (std::size_t i = 0; i + 1 < c.differentials.size(); ++i)
        if (!compose(c.differentials[i + 1], c.differentials[i]).is_zero()) return i;
    return std::nullopt;
}

std::map<int, std::size_t> cohomology_dims(const ChainComplex& c) {
    std::vector<std::size_t> ranks;
    ranks.reserve(c.differentials.size());
    for (const auto& d : c.differentials) ranks.push_back(rank(d));
    std::map<int, std::size_t> h;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t dim = c.dims[i];
        if (i < ranks.size()) dim -= ranks[i];
        if (i > 0) dim -= ranks[i - 1];
        if (dim) h[c.degree(i)] = dim;
    }
    return h;
}

long euler_characteristic(const ChainComplex& c) {
    long chi = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        chi += (c.degree(i) % 2 == 0 ? 1 : -1) * static_cast<long>(c.dims[i]);
    return chi;
}

long euler_characteristic(const std::map<int, std::size_t>& cohomology) {
    long chi = 0;
    for (const auto& [deg, dim] : cohomology) chi += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(dim);
    return chi;
}

ChainComplex dualize(const ChainComplex& c) {
    ChainComplex out;
    const std::size_t m = c.size();
    out.degree_offset = m == 0 ? 0 : -(c.degree_offset + static_cast<int>(m) - 1);
    out.twist = -c.twist - 1;
    for (std::size_t k = 0; k < m; ++k) {
        out.dims.push_back(c.dims[m - 1 - k]);
        out.labels.push_back(k < c.labels.size() ? c.labels[m - 1 - k] + "*" : "");
    }
    for (std::size_t k = 0; k + 1 < m; ++k) out.differentials.push_back(c.differentials[m - 2 - k].transpose());
    return out;
}

ChainComplex build_Et(const FiberModel& model, int t) {
    check_t(model, t, "build_Et");
    std::vector<SubspaceBasis> e;
    for (int a = 0; a <= t; ++a) e.push_back(fiber_E(model, a, t - a));
    ChainComplex c;
    c.degree_offset = -t;
    for (int a = 0; a <= t; ++a) {
        c.labels.push_back(label("E", a, t - a));
        c.dims.push_back(e[static_cast<std::size_t>(a)].dim());
    }
    for (int a = 0; a < t; ++a) {
        const LinearMap d = structure_map(model, MapKind::d, {a, t - a, 0});
        c.differentials.push_back(
            restrict_map(d.matrix, e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(a + 1)]));
    }
    return c;
}

ChainComplex build_koszul_S(const FiberModel& model, int t) {
    check_t(model, t, "build_koszul_S");
    std::vector<SubspaceBasis> p;
    for (int a = 0; a <= t; ++a) p.push_back(fiber_wedge_perp(model, a, t - a));
    ChainComplex c;
    c.degree_offset = -t;
    for (int a = 0; a <= t; ++a) {
        c.labels.push_back(label("P", a, t - a));
        c.dims.push_back(p[static_cast<std::size_t>(a)].dim());
    }
    for (int a = 0; a < t; ++a) {
        const LinearMap d2 = structure_map(model, MapKind::d2, {a, t - a, 0});
        c.differentials.push_back(
            restrict_map(d2.matrix, p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(a + 1)]));
    }
    return c;
}

std::map<int, std::size_t> predicted_Et_cohomology(int n, int t) {
    std::map<int, std::size_t> h;
    const int r = 2 * n - 4;
    BigInt v = 0;
    int deg = 0;
    if (t <= n - 2) {
        v = binomial(r, t) - binomial(r, t - 2);
    } else if (t >= n) {
        v = binomial(r, 2 * n - 2 - t) - binomial(r, 2 * n - 4 - t);
        deg = -1;
    }
    if (sgn(v) != 0) h[deg] = v.get_ui();
    return h;
}

Report verify_Et_cohomology(const FiberModel& model, int t) {
    const ChainComplex c = build_Et(model, t);
    const auto h = cohomology_dims(c);
    Report rep = fiber_report("cohomology", model, t);
    compare_cohomology(rep, predicted_Et_cohomology(model.n(), t), h);
    rep.compare("euler", euler_characteristic(c), euler_characteristic(h));
    return rep;
}

Report verify_Et_complex(const FiberModel& model, int t) {
    Report rep = fiber_report("complex", model, t);
    try {
        const ChainComplex c = build_Et(model, t);
        for (int a = 0; a <= t; ++a)
            rep.compare("dim[" + std::to_string(a) + "]", static_cast<std::int64_t>(expected_dim_E(model.n(), a, t - a)),
                        static_cast<std::int64_t>(c.dims[static_cast<std::size_t>(a)]));
        rep.compare("restrictions_ok", 1, 1);
        rep.compare("compositions_zero", 1, flag(verify_complex(c)));
    } catch (const RefutationError&) {
        rep.compare("restrictions_ok", 1, 0);
    }
    return rep;
}

Report verify_dual(const FiberModel& model, int t) {
    const int n = model.n();
    const ChainComplex k = dualize(build_Et(model, t));
    std::map<int, std::size_t> want;
    if (t <= n - 2) want[0] = dim_wedge_sp(2 * n - 4, t).get_ui();
    if (t >= n) want[1] = dim_wedge_sp(2 * n - 4, 2 * n - 2 - t).get_ui();
    std::erase_if(want, [](const auto& e) { return e.second == 0; });
    const auto h = cohomology_dims(k);
    Report rep = fiber_report("dual", model, t);
    rep.compare("leftmost_degree", 0, k.degree_offset);
    rep.compare("twist", -1, k.twist);
    compare_cohomology(rep, want, h);
    rep.compare("euler", predicted_euler_Kt(n, 2, t), BigInt(euler_characteristic(h)));
    return rep;
}

Report verify_koszul(const FiberModel& model, int t) {
    const ChainComplex c = build_koszul_S(model, t);
    std::map<int, std::size_t> want;
    if (BigInt r = binomial(2 * model.n() - 4, t); sgn(r) != 0) want[0] = r.get_ui();
    Report rep = fiber_report("koszul", model, t);
    rep.compare("is_complex", 1, flag(verify_complex(c)));
    compare_cohomology(rep, want, cohomology_dims(c));
    return rep;
}

Report verify_snake(const FiberModel& model, int t) {
    check_t(model, t, "verify_snake");
    Report rep = fiber_report("snake", model, t);

    bool preserved = true, acts_as_d2 = true;
    for (int a = 0; a < t; ++a) {
        const int b = t - a;
        const SubspaceBasis src = fiber_wedge_perp(model, a, b);
        const SubspaceBasis dst = fiber_wedge_perp(model, a + 1, b - 1);
        try {
            const SparseMatrix on_perp = restrict_map(structure_map(model, MapKind::d, {a, b, 0}).matrix, src, dst);
            const SparseMatrix koszul = restrict_map(structure_map(model, MapKind::d2, {a, b, 0}).matrix, src, dst);
            if (!(on_perp == koszul)) acts_as_d2 = false;
        } catch (const RefutationError&) {
            preserved = false;
            acts_as_d2 = false;
        }
    }

    bool quotient_minus_d2 = true;
    for (int a = 1; a <= t; ++a) {
        const int b = t - a;
        if (b < 1) continue;
        const TwistedSpace x{a - 1, b - 1, 0};
        LinearMap lhs = compose(structure_map(model, MapKind::d, {a, b, 0}), xi_lift(model, x)) +
                        Rational(-1) * structure_map(model, MapKind::wedge_omega_bar, x);
        if (b >= 2) lhs = lhs + compose(xi_lift(model, {a, b - 2, 0}), structure_map(model, MapKind::d2, x));
        if (!compose(lhs.matrix, fiber_wedge_perp(model, a - 1, b - 1).vectors()).is_zero())
            quotient_minus_d2 = false;
    }

    const auto h = cohomology_dims(build_Et(model, t));
    const SparseMatrix w = omega_bar_quotient_map(model, t);
    const std::size_t r = rank(w);
    rep.compare("filtration_preserved", 1, flag(preserved));
    rep.compare("acts_as_d2_on_perp", 1, flag(acts_as_d2));
    rep.compare("quotient_is_minus_d2", 1, flag(quotient_minus_d2));
    rep.compare("h[-1]", static_cast<std::int64_t>(at_or_zero(h, -1)), static_cast<std::int64_t>(w.cols() - r));
    rep.compare("h[0]", static_cast<std::int64_t>(at_or_zero(h, 0)), static_cast<std::int64_t>(w.rows() - r));
    return rep;
}

Bicomplex build_bicomplex(const FiberModel& model, int t) {
    check_t(model, t, "build_bicomplex");
    Bicomplex bc;
    bc.t = t;
    bc.terms.resize(static_cast<std::size_t>(t + 1));
    bc.horizontal.resize(static_cast<std::size_t>(t + 1));
    bc.vertical.resize(static_cast<std::size_t>(t + 1));
    for (int j = 0; j <= t; ++j) {
        const int b = t - j;
        for (int c = 0; c <= j; ++c) {
            const TwistedSpace s{j - c, b + c, c};
            bc.terms[static_cast<std::size_t>(j)].push_back(s);
            if (c < j) bc.vertical[static_cast<std::size_t>(j)].push_back(structure_map(model, MapKind::d0, s));
            if (j < t) {
                Rational coef(b, b + c);
                coef.canonicalize();
                if (c % 2) coef = -coef;
                bc.horizontal[static_cast<std::size_t>(j)].push_back(coef * structure_map(model, MapKind::d, s));
            }
        }
    }
    return bc;
}

ChainComplex totalize(const FiberModel& model, const Bicomplex& bc) {
    const int t = bc.t;
    // slots[p] lists (column, level, offset) of the summands of total term p
    std::vector<std::vector<std::tuple<int, int, std::size_t>>> slots(static_cast<std::size_t>(2 * t + 1));
    ChainComplex out;
    out.degree_offset = -t;
    for (int p = 0; p <= 2 * t; ++p) {
        std::size_t dim = 0;
        std::string name;
        for (int j = 0; j <= t; ++j) {
            const int c = p - j;
            if (c < 0 || c > j) continue;
            slots[static_cast<std::size_t>(p)].emplace_back(j, c, dim);
            dim += model.dim(bc.terms[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)]);
            name += (name.empty() ? "" : "+") + to_string(bc.terms[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)]);
        }
        out.dims.push_back(dim);
        out.labels.push_back(name);
    }

    auto offset_in = [&](int p, int j, int c) {
        for (const auto& [jj, cc, off] : slots[static_cast<std::size_t>(p)])
            if (jj == j && cc == c) return off;
        throw std::logic_error("totalize: missing summand");
    };

    for (int p = 0; p < 2 * t; ++p) {
        std::vector<SparseMatrix> signed_v;
        signed_v.reserve(slots[static_cast<std::size_t>(p)].size());
        std::vector<std::tuple<std::size_t, std::size_t, const SparseMatrix*>> blocks;
        for (const auto& [j, c, off] : slots[static_cast<std::size_t>(p)]) {
            if (j < t)
                blocks.emplace_back(offset_in(p + 1, j + 1, c), off,
                                    &bc.horizontal[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)].matrix);
            if (c < j) {
                const SparseMatrix& v = bc.vertical[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)].matrix;
                signed_v.push_back(j % 2 ? -v : v);
            }
        }
        std::size_t k = 0;
        for (const auto& [j, c, off] : slots[static_cast<std::size_t>(p)])
            if (c < j) blocks.emplace_back(offset_in(p + 1, j, c + 1), off, &signed_v[k++]);
        out.differentials.push_back(assemble_blocks(out.dims[static_cast<std::size_t>(p + 1)],
                                                    out.dims[static_cast<std::size_t>(p)], blocks));
    }
    return out;
}

Report verify_bicomplex(const FiberModel& model, int t) {
    const Bicomplex bc = build_bicomplex(model, t);
    Report rep = fiber_report("bicomplex", model, t);

    const auto& H = bc.horizontal;
    const auto& V = bc.vertical;
    auto at = [](const auto& grid, int j, int c) -> const LinearMap& {
        return grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
    };

    bool rows = true, cols = true, squares = true;
    for (int j = 0; j <= t; ++j) {
        for (int c = 0; c <= j; ++c) {
            if (j + 2 <= t && !compose(at(H, j + 1, c), at(H, j, c)).matrix.is_zero()) rows = false;
            if (c + 2 <= j && !compose(at(V, j, c + 1), at(V, j, c)).matrix.is_zero()) cols = false;
            if (j < t) {
                // (j, c) -> (j + 1, c + 1) with the vertical maps signed by (-1)^column
                const Rational s_here = j % 2 ? -1 : 1;
                const Rational s_next = -s_here;
                LinearMap sum = s_next * compose(at(V, j + 1, c), at(H, j, c));
                if (c < j) sum = sum + s_here * compose(at(H, j, c + 1), at(V, j, c));
                if (!sum.matrix.is_zero()) squares = false;
            }
        }
    }

    bool exact = true, kernels = true, level0 = true;
    std::vector<SubspaceBasis> e;
    for (int j = 0; j <= t; ++j) e.push_back(fiber_E(model, j, t - j));
    for (int j = 0; j <= t; ++j) {
        ChainComplex column;
        for (int c = 0; c <= j; ++c) column.dims.push_back(model.dim(bc.terms[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)]));
        for (int c = 0; c < j; ++c) column.differentials.push_back(at(V, j, c).matrix);
        const auto h = cohomology_dims(column);
        if (h.size() != 1 || at_or_zero(h, 0) != e[static_cast<std::size_t>(j)].dim()) exact = false;
        if (j > 0) {
            const SubspaceBasis ker = SubspaceBasis::kernel_of(at(V, j, 0).matrix);
            if (!subspace_equal(ker, fiber_E_by_lifts(model, j, t - j))) kernels = false;
        }
        if (j < t) {
            try {
                const SparseMatrix induced = restrict_map(at(H, j, 0).matrix, e[static_cast<std::size_t>(j)],
                                                          e[static_cast<std::size_t>(j + 1)]);
                if (!(induced == restricted_d(model, j, t - j))) level0 = false;
            } catch (const RefutationError&) {
                level0 = false;
            }
        }
    }

    const ChainComplex total = totalize(model, bc);
    rep.compare("rows_are_complexes", 1, flag(rows));
    rep.compare("columns_are_complexes", 1, flag(cols));
    rep.compare("squares_anticommute", 1, flag(squares));
    rep.compare("columns_exact", 1, flag(exact));
    rep.compare("column_kernels_are_E", 1, flag(kernels));
    rep.compare("level0_is_restricted_d", 1, flag(level0));
    rep.compare("total_is_complex", 1, flag(verify_complex(total)));
    compare_cohomology(rep, cohomology_dims(build_Et(model, t)), cohomology_dims(total));
    return rep;
}

} // namespace sscx
