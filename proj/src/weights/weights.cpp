#include "sscx/weights.hpp"

#include <algorithm>
#include <string>

#include "sscx/errors.hpp"

namespace sscx {
namespace {

int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

Weight padded(std::vector<int> head, int k) {
    head.resize(static_cast<std::size_t>(k), 0);
    return Weight(std::move(head));
}

void require(bool ok, const char* what) {
    if (!ok) throw UsageError(what);
}

} // namespace

bool dominant(const Weight& w) {
    return std::is_sorted(w.entries.rbegin(), w.entries.rend());
}

Weight rho(int k) {
    require(k >= 0, "rho: negative rank");
    std::vector<int> e(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = k - i;
    return Weight(std::move(e));
}

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt weyl_dim_gl(const Weight& lambda) {
    if (!dominant(lambda)) throw UsageError("non-dominant weight");
    BigInt num = 1, den = 1;
    const auto k = lambda.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            num *= lambda[i] - lambda[j] + static_cast<int>(j - i);
            den *= static_cast<int>(j - i);
        }
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

PushResult bbw_pushforward(const Weight& gamma) {
    const int k = static_cast<int>(gamma.size());
    require(k >= 1, "bbw_pushforward: empty weight");
    const Weight r = rho(k);
    std::vector<int> shifted(gamma.entries);
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += r[i];

    int inversions = 0;
    for (std::size_t i = 0; i < shifted.size(); ++i) {
        for (std::size_t j = i + 1; j < shifted.size(); ++j) {
            if (shifted[i] == shifted[j]) return PushResult::zero();
            if (shifted[i] < shifted[j]) ++inversions;
        }
    }
    std::sort(shifted.begin(), shifted.end(), std::greater<>());
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= r[i];
    return PushResult{Weight(std::move(shifted)), inversions};
}

PushResult tphi_closed_form(int alpha1, int alpha2, int k) {
    require(alpha1 >= alpha2 && alpha1 >= -1 && k >= 3, "tphi: requires a1 >= a2, a1 >= -1, k >= 3");
    if (alpha2 >= 0) return PushResult{padded({alpha1, alpha2}, k), 0};
    if (alpha2 >= 2 - k) return PushResult::zero();
    std::vector<int> e(static_cast<std::size_t>(k), -1);
    e.front() = alpha1;
    e.back() = k - 2 + alpha2;
    return PushResult{Weight(std::move(e)), k - 2};
}

PushResult tphi_on_weight(int alpha1, int alpha2, int k) {
    const PushResult closed = tphi_closed_form(alpha1, alpha2, k);
    PushResult pushed = bbw_pushforward(padded({alpha1, alpha2}, k));
    if (!(pushed == closed))
        throw RefutationError("tphi: rho-shift result disagrees with closed form at (" + std::to_string(alpha1) +
                              "," + std::to_string(alpha2) + "), k=" + std::to_string(k));
    return pushed;
}

std::vector<StaircaseTerm> staircase_terms_gr2(int alpha1, int alpha2, int n) {
    require(n >= 1 && alpha1 >= alpha2 && alpha2 >= alpha1 - 2 * n + 2,
            "staircase: weight outside a1 >= a2 >= a1 - 2n + 2");
    std::vector<StaircaseTerm> terms;
    int pos = 0;
    for (int m = alpha1 - 2 * n + 1; m <= alpha2 - 1; ++m)
        terms.push_back({pos++, alpha1 + 1 - m, Weight{alpha2 - 1, m}});
    for (int f = alpha2; f <= alpha1; ++f)
        terms.push_back({pos++, alpha1 - f, Weight{f, alpha2}});
    return terms;
}

std::vector<StaircaseTerm> staircase_terms_three_rows(int alpha1, int alpha2, int k, int n) {
    require(k >= 3 && k <= n && 2 * n - k >= alpha1 && alpha1 >= alpha2 && alpha2 >= 0,
            "three-row staircase: requires 2n-k >= a1 >= a2 >= 0, 3 <= k <= n");
    std::vector<StaircaseTerm> terms;
    int pos = k - 2;
    // top row: last component climbs to -1, wedge exponent falls from 2n to a1 + k
    for (int last = alpha1 - 2 * n + k - 1, j = 2 * n; last <= -1; ++last, --j) {
        std::vector<int> e(static_cast<std::size_t>(k), -1);
        e.front() = alpha2 - 1;
        e.back() = last;
        terms.push_back({pos++, j, Weight(std::move(e))});
    }
    for (int m = 0; m <= alpha2 - 1; ++m)
        terms.push_back({pos++, alpha1 + 1 - m, padded({alpha2 - 1, m}, k)});
    for (int f = alpha2; f <= alpha1; ++f)
        terms.push_back({pos++, alpha1 - f, padded({f, alpha2}, k)});
    return terms;
}

BigInt alternating_dim_sum(const std::vector<StaircaseTerm>& terms, int n) {
    BigInt total = 0;
    for (const auto& t : terms) {
        BigInt d = binomial(2 * n, t.wedge_exp) * weyl_dim_gl(t.weight);
        if (t.position % 2 == 0)
            total += d;
        else
            total -= d;
    }
    return total;
}

Report verify_staircase_pushforward(int alpha1, int alpha2, int k, int n) {
    require(3 <= k && k <= n && 2 * n - k >= alpha1 && alpha1 >= alpha2 && alpha2 >= 0,
            "verify_staircase_pushforward: requires 2n-k >= a1 >= a2 >= 0, 3 <= k <= n");
    Report rep;
    rep.suite = "staircase";
    rep.param("n", n);
    rep.param("k", k);
    rep.param("alpha1", alpha1);
    rep.param("alpha2", alpha2);

    std::vector<StaircaseTerm> image;
    for (const auto& term : staircase_terms_gr2(alpha1, alpha2, n)) {
        const PushResult p = tphi_on_weight(term.weight[0], term.weight[1], k);
        if (p.is_zero()) continue;
        image.push_back({term.position + p.shift, term.wedge_exp, *p.weight});
    }

    bool increasing = true;
    for (std::size_t i = 1; i < image.size(); ++i) {
        if (image[i].position <= image[i - 1].position) {
            if (increasing) rep.offending("offending_position", image[i].position);
            increasing = false;
        }
    }
    const auto expected_shape = staircase_terms_three_rows(alpha1, alpha2, k, n);
    rep.compare("positions_increasing", 1, increasing ? 1 : 0);
    rep.compare("euler_characteristic", BigInt(0), alternating_dim_sum(image, n));
    rep.compare("surviving_terms", static_cast<std::int64_t>(expected_shape.size()),
                static_cast<std::int64_t>(image.size()));
    rep.compare("shape_matches", 1, image == expected_shape ? 1 : 0);
    if (image != expected_shape) {
        for (std::size_t i = 0; i < std::min(image.size(), expected_shape.size()); ++i) {
            if (!(image[i] == expected_shape[i])) {
                rep.offending("offending_position", image[i].position);
                break;
            }
        }
    }
    return rep;
}

BigInt rank_K(int alpha1, int alpha2, int k, int n) {
    require(2 <= k && k <= n && 2 * n - k >= alpha1 && alpha1 >= alpha2 && alpha2 >= 0,
            "rank_K: requires 2n-k >= a1 >= a2 >= 0, 2 <= k <= n");
    BigInt total = 0;
    int sign = 1;
    auto add = [&](int wedge, const Weight& w) {
        BigInt d = binomial(2 * n, wedge) * weyl_dim_gl(w);
        if (sign > 0) total += d; else total -= d;
        sign = -sign;
    };
    for (int m = 0; m <= alpha2 - 1; ++m) add(alpha1 + 1 - m, padded({alpha2 - 1, m}, k));
    for (int f = alpha2; f <= alpha1; ++f) add(alpha1 - f, padded({f, alpha2}, k));
    if (sgn(total) < 0) throw RefutationError("rank_K: negative alternating sum");
    return total;
}

BigInt rank_K_gr2_closed(int alpha1, int alpha2, int n) {
    return binomial(2 * n - 2, 2 * n - 2 - alpha1) * (alpha2 + 1) + binomial(2 * n - 2, 2 * n - 3 - alpha1) * alpha2;
}

BigInt dim_wedge_sp(int r, int m) {
    if (m < 0 || 2 * m > r) return 0;
    return binomial(r, m) - binomial(r, m - 2);
}

BigInt predicted_euler_Kt(int n, int k, int t) {
    const int r = 2 * n - 2 * k;
    if (0 <= t && t <= n - k) return dim_wedge_sp(r, t);
    if (n - k + 2 <= t && t <= 2 * (n - k + 1)) return -dim_wedge_sp(r, 2 * (n - k + 1) - t);
    return 0;
}

BigInt euler_Kt(int n, int k, int t) {
    BigInt chi = 0;
    for (int i = 0; i <= t; ++i) {
        BigInt r = rank_K(2 * n - k - t + i, i, k, n);
        if (i % 2 == 0) chi += r; else chi -= r;
    }
    return chi;
}

Report euler_check_Kt(int n, int k, int t) {
    require(2 <= k && k <= n && 0 <= t && t <= 2 * n - k, "euler_check_Kt: requires 2 <= k <= n, 0 <= t <= 2n-k");
    Report rep;
    rep.suite = "euler";
    rep.param("n", n);
    rep.param("k", k);
    rep.param("t", t);
    rep.compare("euler_characteristic", predicted_euler_Kt(n, k, t), euler_Kt(n, k, t));
    return rep;
}

std::vector<CsCandidate> phi_cs_candidates(int k) {
    require(k >= 3, "phi_cs: requires k >= 3");
    std::vector<CsCandidate> out;
    for (int i = 0; i <= k - 2; ++i) {
        for (int j = 0; j <= k - 2; ++j) {
            for (int s = std::max(0, ceil_half(i + j + 2 - k)); s <= std::min(i, j); ++s) {
                std::vector<int> e{-1, -1};
                e.insert(e.end(), static_cast<std::size_t>(j - s), 1);
                e.insert(e.end(), static_cast<std::size_t>(k - 2 - i - j + 2 * s), 0);
                e.insert(e.end(), static_cast<std::size_t>(i - s), -1);
                Weight w(std::move(e));
                PushResult p = bbw_pushforward(w);
                out.push_back({i, j, s, std::move(w), std::move(p)});
            }
        }
    }
    return out;
}

std::vector<CsCandidate> phi_cs_survivors(int k) {
    auto all = phi_cs_candidates(k);
    std::erase_if(all, [](const CsCandidate& c) { return c.push.is_zero(); });
    return all;
}

bool pieri_dim_check(int r, int i, int j) {
    require(0 <= i && i <= r && 0 <= j && j <= r, "pieri_dim_check: requires 0 <= i, j <= r");
    BigInt rhs = 0;
    // Lambda^i W^* (x) Lambda^j W only contains the terms with s >= i + j - r.
    for (int s = std::max(0, i + j - r); s <= std::min(i, j); ++s) {
        std::vector<int> e;
        e.insert(e.end(), static_cast<std::size_t>(j - s), 1);
        e.insert(e.end(), static_cast<std::size_t>(r - i - j + 2 * s), 0);
        e.insert(e.end(), static_cast<std::size_t>(i - s), -1);
        rhs += weyl_dim_gl(Weight(std::move(e)));
    }
    return binomial(r, i) * binomial(r, j) == rhs;
}

std::vector<StaircaseTerm> k_gr2_left_resolution(int alpha1, int alpha2, int n) {
    require(alpha1 >= alpha2 && alpha2 >= 0 && alpha1 <= 2 * n - 2, "left resolution: requires 2n-2 >= a1 >= a2 >= 0");
    std::vector<StaircaseTerm> terms;
    int pos = 0;
    for (int m = alpha1 + 1 - 2 * n; m <= -1; ++m) terms.push_back({pos++, alpha1 + 1 - m, Weight{alpha2 - 1, m}});
    return terms;
}

Report vanishing_check(int alpha1, int alpha2, int k, int n) {
    require(3 <= k && k <= n && 2 * n - k + 1 <= alpha1 && alpha1 <= 2 * n - 2 && 0 <= alpha2 && alpha2 <= alpha1,
            "vanishing_check: requires 2n-k+1 <= a1 <= 2n-2, 0 <= a2 <= a1, 3 <= k <= n");
    Report rep;
    rep.suite = "vanishing";
    rep.param("n", n);
    rep.param("k", k);
    rep.param("alpha1", alpha1);
    rep.param("alpha2", alpha2);
    const auto terms = k_gr2_left_resolution(alpha1, alpha2, n);
    std::int64_t nonzero = 0;
    for (const auto& t : terms) {
        if (!tphi_on_weight(t.weight[0], t.weight[1], k).is_zero()) {
            if (nonzero == 0) rep.offending("offending_position", t.position);
            ++nonzero;
        }
    }
    rep.compare("resolution_terms", 2 * n - 1 - alpha1, static_cast<std::int64_t>(terms.size()));
    rep.compare("nonzero_pushforwards", 0, nonzero);
    return rep;
}

} // namespace sscx
