#ifndef SSCX_WEIGHTS_HPP
#define SSCX_WEIGHTS_HPP

#include <optional>
#include <vector>

#include "sscx/exactlinalg.hpp"
#include "sscx/report.hpp"

namespace sscx {

/// An integer weight of GL_k, i.e. a label of a Schur functor.
struct Weight {
    std::vector<int> entries;

    Weight() = default;
    Weight(std::initializer_list<int> e) : entries(e) {}
    explicit Weight(std::vector<int> e) : entries(std::move(e)) {}

    std::size_t size() const { return entries.size(); }
    int operator[](std::size_t i) const { return entries[i]; }
    friend bool operator==(const Weight&, const Weight&) = default;
};

/// Weakly decreasing entries.
bool dominant(const Weight& w);
/// (k, k-1, ..., 1).
Weight rho(int k);

/// Dimension of the irreducible GL_k module of highest weight lambda; negative
/// entries are allowed. Throws UsageError("non-dominant weight").
BigInt weyl_dim_gl(const Weight& lambda);

BigInt binomial(int n, int k); // 0 outside 0 <= k <= n

/// Result of the rho-shift algorithm: either zero, or a dominant weight placed
/// `shift` steps to the right in the derived category.
struct PushResult {
    std::optional<Weight> weight;
    int shift = 0;

    static PushResult zero() { return {}; }
    bool is_zero() const { return !weight.has_value(); }
    friend bool operator==(const PushResult&, const PushResult&) = default;
};

/// Borel-Bott-Weil pushforward along a Gr(2,k)-fibration, acting on the first k
/// components: add rho, sort strictly decreasing (zero on a repeat), subtract
/// rho, shift by the number of inversions.
PushResult bbw_pushforward(const Weight& gamma);

/// Closed three-case answer for the pushforward of (a1, a2, 0, ..., 0).
PushResult tphi_closed_form(int alpha1, int alpha2, int k);
/// bbw_pushforward of (a1, a2, 0, ..., 0), cross-checked against the closed form.
/// Requires a1 >= a2, a1 >= -1, k >= 3.
PushResult tphi_on_weight(int alpha1, int alpha2, int k);

struct StaircaseTerm {
    int position = 0;
    int wedge_exp = 0;
    Weight weight;
    friend bool operator==(const StaircaseTerm&, const StaircaseTerm&) = default;
};

/// Terms of the staircase complex on Gr(2, 2n) for (a1, a2); requires
/// a1 >= a2 >= a1 - 2n + 2.
std::vector<StaircaseTerm> staircase_terms_gr2(int alpha1, int alpha2, int n);

/// The three-row staircase on Gr(k, 2n) for 2n - k >= a1 >= a2 >= 0, written
/// out row by row (top row ends at wedge exponent a1 + k), positions starting
/// at k - 2 so they line up with the pushforward of the Gr(2) staircase.
std::vector<StaircaseTerm> staircase_terms_three_rows(int alpha1, int alpha2, int k, int n);

/// sum (-1)^position * C(2n, j) * dim Sigma^weight.
BigInt alternating_dim_sum(const std::vector<StaircaseTerm>& terms, int n);

Report verify_staircase_pushforward(int alpha1, int alpha2, int k, int n);

/// Rank of K^{a1,a2} on Gr(k, 2n) from its staircase resolution.
BigInt rank_K(int alpha1, int alpha2, int k, int n);
/// Closed form for k = 2 via the two-step filtration of E^{a,b}.
BigInt rank_K_gr2_closed(int alpha1, int alpha2, int n);

/// Rank of the m-th symplectic wedge power of a rank-r symplectic bundle.
BigInt dim_wedge_sp(int r, int m);

/// Signed cohomology rank predicted for K_t on IGr(k, 2n): positive in degree 0,
/// negative in degree 1, zero otherwise.
BigInt predicted_euler_Kt(int n, int k, int t);
BigInt euler_Kt(int n, int k, int t);
Report euler_check_Kt(int n, int k, int t);

struct CsCandidate {
    int i = 0, j = 0, s = 0;
    Weight weight;
    PushResult push;
};
/// Candidate terms (i, j, s) of the filtration of wedge powers of S_2(-1)
/// pulled back to the flag variety, with their pushforwards. s runs from
/// max(0, ceil((i+j+2-k)/2)), a superset of the Pieri range.
std::vector<CsCandidate> phi_cs_candidates(int k);
std::vector<CsCandidate> phi_cs_survivors(int k);

/// C(r,i) C(r,j) == sum over max(0, i+j-r) <= s <= min(i,j) of
/// dim Sigma^{(1^{j-s}, 0^{r-i-j+2s}, (-1)^{i-s})}.
bool pieri_dim_check(int r, int i, int j);

/// Weights of the left resolution of K^{a1,a2} on Gr(2, 2n) (top-row staircase
/// terms with second component in [a1 + 1 - 2n, -1]).
std::vector<StaircaseTerm> k_gr2_left_resolution(int alpha1, int alpha2, int n);
/// Pushes the left resolution through tphi_on_weight for k; in the band
/// 2n - k + 1 <= a1 <= 2n - 2 every term must vanish.
Report vanishing_check(int alpha1, int alpha2, int k, int n);

} // namespace sscx

#endif
