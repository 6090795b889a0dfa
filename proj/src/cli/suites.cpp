#include "sscx/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <thread>

#include "sscx/complexes.hpp"
#include "sscx/errors.hpp"
#include "sscx/fiber.hpp"
#include "sscx/weights.hpp"

namespace sscx {
namespace {

constexpr int kMaxWeightN = 12;

std::int64_t flag(bool ok) { return ok ? 1 : 0; }

std::vector<std::string> selected(const std::vector<std::string>& requested, const std::vector<std::string>& known) {
    if (requested.empty()) return known;
    for (const auto& c : requested)
        if (std::find(known.begin(), known.end(), c) == known.end()) throw UsageError("unknown check '" + c + "'");
    return requested;
}

bool wants(const std::vector<std::string>& checks, const char* name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
}

Report start(const std::string& suite, const IntFields& params) {
    Report rep;
    rep.suite = suite;
    rep.params = params;
    return rep;
}

// ---- per-(a, b) fiber checks -------------------------------------------------

// Short exact sequence E^{a,b} -> Lambda^a V^* (x) S^b U -> E^{a-1,b+1} given by d0.
Report check_ces(const FiberModel& m, const IntFields& params, int a, int b) {
    Report rep = start("ces", params);
    const int n = m.n();
    const LinearMap d0 = structure_map(m, MapKind::d0, {a, b, 0});
    const SubspaceBasis ker = SubspaceBasis::kernel_of(d0.matrix);
    const SubspaceBasis img = SubspaceBasis::image_of(d0.matrix);
    const SubspaceBasis next = fiber_E(m, a - 1, b + 1);
    const BigInt total = binomial(2 * n, a) * (b + 1);
    const BigInt four = binomial(2 * n - 2, a) * (b + 1) + binomial(2 * n - 2, a - 1) * b +
                        binomial(2 * n - 2, a - 1) * (b + 2) + binomial(2 * n - 2, a - 2) * (b + 1);
    rep.compare("kernel_dim", static_cast<std::int64_t>(expected_dim_E(n, a, b)), static_cast<std::int64_t>(ker.dim()));
    rep.compare("image_is_E", 1, flag(subspace_equal(img, next)));
    rep.compare("dims_add", total, BigInt(static_cast<unsigned long>(ker.dim() + next.dim())));
    rep.compare("filtration_dims", total, four);
    return rep;
}

Report check_xi(const FiberModel& m, const IntFields& params, int a, int b) {
    Report rep = start("xi", params);
    const SubspaceBasis ker = fiber_E(m, a, b);
    const SubspaceBasis lifts = fiber_E_by_lifts(m, a, b);
    rep.compare("dim", static_cast<std::int64_t>(ker.dim()), static_cast<std::int64_t>(lifts.dim()));
    rep.compare("same_span", 1, flag(subspace_equal(ker, lifts)));
    return rep;
}

// (d1 + B d2) o (d1 + (B+1) d2) = 0 out of (a, B); also d o d = 0.
Report check_d2zero(const FiberModel& m, const IntFields& params, int a, int B) {
    Report rep = start("d2zero", params);
    auto combo = [&](int aa, int BB, long w) {
        return structure_map(m, MapKind::d1, {aa, BB, 0}) + Rational(w) * structure_map(m, MapKind::d2, {aa, BB, 0});
    };
    const LinearMap first = combo(a, B, B + 1);
    const LinearMap second = combo(a + 1, B - 1, B);
    rep.compare("composition_zero", 1, flag(compose(second, first).matrix.is_zero()));
    const LinearMap d = compose(structure_map(m, MapKind::d, {a + 1, B - 1, 0}), structure_map(m, MapKind::d, {a, B, 0}));
    rep.compare("d_squared_zero", 1, flag(d.matrix.is_zero()));
    return rep;
}

// d0 o (b+2)(d1 + (b+1) d2) + b (d1 + (b+2) d2) o d0 = 0 out of (a, b).
Report check_anticomm(const FiberModel& m, const IntFields& params, int a, int b) {
    Report rep = start("anticomm", params);
    const TwistedSpace s{a, b, 0};
    const LinearMap right = structure_map(m, MapKind::d1, s) + Rational(b + 1) * structure_map(m, MapKind::d2, s);
    const LinearMap down = structure_map(m, MapKind::d0, s);
    const TwistedSpace s2 = down.dst;
    const LinearMap left = structure_map(m, MapKind::d1, s2) + Rational(b + 2) * structure_map(m, MapKind::d2, s2);
    const LinearMap sum = Rational(b + 2) * compose(structure_map(m, MapKind::d0, right.dst), right) +
                          Rational(b) * compose(left, down);
    rep.compare("anticommutes", 1, flag(sum.matrix.is_zero()));
    return rep;
}

Report check_omegabar(const FiberModel& m, const IntFields& params) {
    Report rep = start("omegabar", params);
    const Form& w = m.omega_bar();
    rep.compare("u_isotropic", 0, contract(1, contract(0, m.omega())).size());
    rep.compare("iota_e1_terms", 0, static_cast<std::int64_t>(contract(0, w).size()));
    rep.compare("iota_e2_terms", 0, static_cast<std::int64_t>(contract(1, w).size()));
    rep.compare("rank_two_terms", m.n() - 2, static_cast<std::int64_t>(w.size()));
    return rep;
}

// ---- weight checks -----------------------------------------------------------

void push_fields(IntFields& f, const PushResult& p) {
    f.emplace_back("zero", flag(p.is_zero()));
    if (p.is_zero()) return;
    f.emplace_back("shift", p.shift);
    for (std::size_t i = 0; i < p.weight->size(); ++i)
        f.emplace_back("w[" + std::to_string(i) + "]", (*p.weight)[i]);
}

Report check_bbw(const IntFields& params, int alpha1, int alpha2, int k) {
    Report rep = start("bbw", params);
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    e[0] = alpha1;
    e[1] = alpha2;
    const PushResult pushed = bbw_pushforward(Weight(std::move(e)));
    push_fields(rep.expected, tphi_closed_form(alpha1, alpha2, k));
    push_fields(rep.computed, pushed);
    return rep;
}

Report check_phics(const IntFields& params, int k) {
    Report rep = start("phics", params);
    const auto survivors = phi_cs_survivors(k);
    rep.compare("survivors", 1, static_cast<std::int64_t>(survivors.size()));
    if (survivors.size() == 1) {
        const CsCandidate& c = survivors.front();
        rep.compare("i", k - 2, c.i);
        rep.compare("j", 0, c.j);
        rep.compare("s", 0, c.s);
        rep.compare("shift", 0, c.push.shift);
        rep.compare("pushed_all_minus_one", 1, flag(*c.push.weight == Weight(std::vector<int>(static_cast<std::size_t>(k), -1))));
    }
    return rep;
}

Report check_pieri(const IntFields& params, int r, int i, int j) {
    Report rep = start("pieri", params);
    rep.compare("identity", 1, flag(pieri_dim_check(r, i, j)));
    return rep;
}

} // namespace

const std::vector<std::string>& fiber_check_names() {
    static const std::vector<std::string> names{"cohomology", "complex", "dual",    "koszul",   "snake",   "bicomplex",
                                                "ces",        "xi",      "d2zero",  "anticomm", "omegabar"};
    return names;
}

const std::vector<std::string>& weight_check_names() {
    static const std::vector<std::string> names{"bbw", "staircase", "euler", "phics", "pieri", "vanishing"};
    return names;
}

std::vector<Task> fiber_tasks(const FiberSuiteOptions& opt) {
    if (opt.n < 2 || opt.n > FiberModel::kMaxN)
        throw UsageError("--n must lie in 2.." + std::to_string(FiberModel::kMaxN));
    const int tmax = 2 * opt.n - 2;
    if (opt.t && (*opt.t < 0 || *opt.t > tmax)) throw UsageError("--t must lie in 0.." + std::to_string(tmax));
    const auto checks = selected(opt.checks, fiber_check_names());
    auto model = std::make_shared<const FiberModel>(opt.n);
    const int n = opt.n;

    std::vector<Task> tasks;
    const int t_lo = opt.t.value_or(0), t_hi = opt.t.value_or(tmax);
    using ComplexCheck = Report (*)(const FiberModel&, int);
    const std::pair<const char*, ComplexCheck> per_t[] = {
        {"cohomology", verify_Et_cohomology}, {"complex", verify_Et_complex}, {"dual", verify_dual},
        {"koszul", verify_koszul},           {"snake", verify_snake},        {"bicomplex", verify_bicomplex}};
    for (const auto& [name, fn] : per_t) {
        if (!wants(checks, name)) continue;
        for (int t = t_lo; t <= t_hi; ++t)
            tasks.push_back({name, {{"n", n}, {"t", t}}, [model, fn = fn, t] { return fn(*model, t); }});
    }

    using PairCheck = Report (*)(const FiberModel&, const IntFields&, int, int);
    struct PairSuite {
        const char* name;
        PairCheck fn;
        int min_a, min_b;
    };
    const PairSuite per_ab[] = {
        {"ces", check_ces, 1, 0}, {"xi", check_xi, 0, 0}, {"d2zero", check_d2zero, 0, 2}, {"anticomm", check_anticomm, 1, 1}};
    for (const auto& ps : per_ab) {
        if (!wants(checks, ps.name)) continue;
        for (int t = t_lo; t <= t_hi; ++t) {
            for (int a = ps.min_a; a <= t - ps.min_b; ++a) {
                const int b = t - a;
                IntFields params{{"n", n}, {"t", t}, {"a", a}, {"b", b}};
                tasks.push_back({ps.name, params, [model, fn = ps.fn, params, a, b] { return fn(*model, params, a, b); }});
            }
        }
    }
    if (wants(checks, "omegabar")) {
        IntFields params{{"n", n}};
        tasks.push_back({"omegabar", params, [model, params] { return check_omegabar(*model, params); }});
    }
    return tasks;
}

std::vector<Task> weight_tasks(const WeightSuiteOptions& opt) {
    const int n = opt.n, k = opt.k;
    if (n < 2 || n > kMaxWeightN) throw UsageError("--n must lie in 2.." + std::to_string(kMaxWeightN));
    if (k < 2 || k > n) throw UsageError("--k must lie in 2..n");
    const int tmax = 2 * n - k;
    if (opt.t && (*opt.t < 0 || *opt.t > tmax)) throw UsageError("--t must lie in 0.." + std::to_string(tmax));

    static const std::vector<std::string> need_k3{"bbw", "staircase", "phics", "vanishing"};
    std::vector<std::string> checks;
    if (opt.checks.empty()) {
        for (const auto& c : weight_check_names())
            if (k >= 3 || !wants(need_k3, c.c_str())) checks.push_back(c);
    } else {
        checks = selected(opt.checks, weight_check_names());
        for (const auto& c : checks)
            if (k < 3 && wants(need_k3, c.c_str())) throw UsageError("check '" + c + "' needs k >= 3");
    }

    std::vector<Task> tasks;
    if (wants(checks, "bbw")) {
        for (int a1 = -1; a1 <= tmax; ++a1)
            for (int a2 = -1; a2 <= a1; ++a2) {
                IntFields params{{"n", n}, {"k", k}, {"alpha1", a1}, {"alpha2", a2}};
                tasks.push_back({"bbw", params, [=] { return check_bbw(params, a1, a2, k); }});
            }
    }
    if (wants(checks, "staircase")) {
        for (int a1 = 0; a1 <= tmax; ++a1)
            for (int a2 = 0; a2 <= a1; ++a2)
                tasks.push_back({"staircase",
                                 {{"n", n}, {"k", k}, {"alpha1", a1}, {"alpha2", a2}},
                                 [=] { return verify_staircase_pushforward(a1, a2, k, n); }});
    }
    if (wants(checks, "euler")) {
        for (int t = opt.t.value_or(0); t <= opt.t.value_or(tmax); ++t)
            tasks.push_back({"euler", {{"n", n}, {"k", k}, {"t", t}}, [=] { return euler_check_Kt(n, k, t); }});
    }
    if (wants(checks, "phics")) {
        IntFields params{{"n", n}, {"k", k}};
        tasks.push_back({"phics", params, [=] { return check_phics(params, k); }});
    }
    if (wants(checks, "pieri")) {
        const int r = k - 2;
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j <= r; ++j) {
                IntFields params{{"n", n}, {"k", k}, {"i", i}, {"j", j}};
                tasks.push_back({"pieri", params, [=] { return check_pieri(params, r, i, j); }});
            }
    }
    if (wants(checks, "vanishing")) {
        for (int a1 = 2 * n - k + 1; a1 <= 2 * n - 2; ++a1)
            for (int a2 = 0; a2 <= a1; ++a2)
                tasks.push_back({"vanishing",
                                 {{"n", n}, {"k", k}, {"alpha1", a1}, {"alpha2", a2}},
                                 [=] { return vanishing_check(a1, a2, k, n); }});
    }
    return tasks;
}

std::vector<TaskOutcome> run_tasks(const std::vector<Task>& tasks, int jobs, bool timing) {
    std::vector<TaskOutcome> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            const Task& task = tasks[i];
            const auto t0 = std::chrono::steady_clock::now();
            TaskOutcome& o = out[i];
            try {
                o.report = task.run();
            } catch (const std::exception& e) {
                o.report = Report{};
                o.report.computed.emplace_back("refuted", 1);
                o.error = task.suite + ": " + e.what();
            }
            o.report.suite = task.suite;
            o.report.params = task.params;
            if (timing)
                o.report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - t0)
                                          .count();
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::stable_sort(out.begin(), out.end(),
                     [](const TaskOutcome& a, const TaskOutcome& b) { return report_less(a.report, b.report); });
    return out;
}

} // namespace sscx
