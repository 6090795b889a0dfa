#ifndef SSCX_FIBER_HPP
#define SSCX_FIBER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sscx/exactlinalg.hpp"

namespace sscx {

// Exterior algebra on V^* -----------------------------------------------------
//
// A monomial x^{i1} ^ ... ^ x^{ik} with i1 < ... < ik is stored as the bitmask
// of its indices. Forms have small integer coefficients.

using Mask = std::uint32_t;
using Form = std::map<Mask, long>;

int degree(Mask m);
/// Sign of sorting the concatenation s ^ t into increasing order; 0 if they share an index.
int wedge_sign(Mask s, Mask t);
Form basis_form(int i);
Form wedge(const Form& a, const Form& b);
/// Interior product with e_i, evaluating the last slot:
/// (iota_i lambda)(v_1..v_{k-1}) = lambda(v_1..v_{k-1}, e_i).
Form contract(int i, const Form& f);
Form operator+(const Form& a, const Form& b);
Form scale(long s, const Form& f);

// Fiber model -----------------------------------------------------------------

/// Lambda^a V^* (x) S^B U (x) (det U^*)^c. The grade c only travels along.
struct TwistedSpace {
    int a = 0;
    int B = 0;
    int c = 0;
    friend bool operator==(const TwistedSpace&, const TwistedSpace&) = default;
};

std::string to_string(const TwistedSpace& s);

/// Basis element: wedge monomial times e1^p e2^(B-p).
struct Monomial {
    Mask mask = 0;
    int p = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/*
 * V = Q^{2n} with basis e_0..e_{2n-1}, dual basis x^0..x^{2n-1} and
 * omega = sum_{i<n} x^i ^ x^{n+i}. The isotropic plane is U = span(e_0, e_1);
 * its lifts to V^* are x^0, x^1, so U^perp is spanned by x^2..x^{2n-1}, and
 * U sits inside U^perp as span(x^n, x^{n+1}).
 */
class FiberModel {
public:
    static constexpr int kMaxN = 10;

    explicit FiberModel(int n);

    int n() const { return n_; }
    int dim_v() const { return 2 * n_; }

    /// Subsets of size a in lexicographic order of their sorted index lists.
    const std::vector<Mask>& subsets(int a) const;
    std::size_t subset_index(Mask m) const { return rank_of_[m]; }

    std::size_t dim(const TwistedSpace& s) const;
    std::size_t index_of(const TwistedSpace& s, Mask m, int p) const;
    std::vector<Monomial> basis_of(const TwistedSpace& s) const;

    const Form& omega() const { return omega_; }
    /// omega_i = iota_{e_i} omega for the basis vectors of U (i = 0, 1).
    const Form& omega_u(int i) const { return omega_u_[i]; }
    const Form& omega_bar() const { return omega_bar_; }

    /// Indices of V^* whose monomials make up Lambda U^perp.
    Mask perp_mask() const;
    /// Indices of a basis of U^perp / U.
    std::vector<int> quotient_indices() const;

private:
    int n_;
    std::vector<std::vector<Mask>> subsets_;
    std::vector<std::uint32_t> rank_of_;
    Form omega_;
    Form omega_u_[2];
    Form omega_bar_;
};

// Structure maps --------------------------------------------------------------

enum class MapKind { d0, d1, d2, d, tr, wedge_omega_bar };

std::string to_string(MapKind k);
MapKind parse_map_kind(const std::string& name);

/// A matrix together with the twisted spaces it goes between.
struct LinearMap {
    TwistedSpace src;
    TwistedSpace dst;
    SparseMatrix matrix;
};

/// g after f; throws UsageError unless f.dst == g.src (grade included).
LinearMap compose(const LinearMap& g, const LinearMap& f);
LinearMap operator+(const LinearMap& f, const LinearMap& g);
LinearMap operator*(const Rational& s, const LinearMap& f);

TwistedSpace codomain(MapKind kind, const TwistedSpace& src);

/*
 * With lambda_i = iota_{e_i} lambda and P_i = dP/de_i:
 *   d1(lambda (x) P) = sum_i lambda_i ^ omega (x) P_i
 *   d2(lambda (x) P) = sum_i lambda ^ omega_i (x) P_i
 *   d  = d1 / (B + 1) + d2
 *   d0(lambda (x) P) = lambda_1 (x) e2 P - lambda_2 (x) e1 P, one det grade up
 *   tr(lambda (x) P) = sum_i lambda_i (x) P_i
 */
LinearMap structure_map(const FiberModel& model, MapKind kind, const TwistedSpace& src);

/// xi(mu (x) Q) = (mu ^ x^0) (x) e1 Q + (mu ^ x^1) (x) e2 Q, from (a-1, b-1, c) to (a, b, c).
LinearMap xi_lift(const FiberModel& model, const TwistedSpace& src);

// Fiber subspaces -------------------------------------------------------------

/// Lambda^a U^perp (x) S^B U inside (a, B).
SubspaceBasis fiber_wedge_perp(const FiberModel& model, int a, int B);

std::size_t expected_dim_E(int n, int a, int b);

/// E^{a,b} as ker d0 on (a, b, 0); the whole space for a = 0. Throws
/// RefutationError if the dimension differs from expected_dim_E.
SubspaceBasis fiber_E(const FiberModel& model, int a, int b);
/// E^{a,b} spanned by Lambda^a U^perp (x) S^b U and the xi-lifts of
/// Lambda^{a-1} U^perp (x) S^{b-1} U. The independent construction.
SubspaceBasis fiber_E_by_lifts(const FiberModel& model, int a, int b);

/// d restricted to E^{a,b} -> E^{a+1,b-1}, in the bases returned by fiber_E.
SparseMatrix restricted_d(const FiberModel& model, int a, int b);

/// Wedge with omega_bar, Lambda^{t-2} -> Lambda^t on U^perp / U, in the
/// lexicographic monomial bases over quotient_indices().
SparseMatrix omega_bar_quotient_map(const FiberModel& model, int t);

} // namespace sscx

#endif
