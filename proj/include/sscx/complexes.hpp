#ifndef SSCX_COMPLEXES_HPP
#define SSCX_COMPLEXES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sscx/exactlinalg.hpp"
#include "sscx/fiber.hpp"
#include "sscx/report.hpp"

namespace sscx {

/*
 * Cochain complex of finite-dimensional spaces. Term i sits in degree
 * degree_offset + i and differentials[i] maps term i to term i + 1. Only the
 * dimensions are kept with the terms; the maps carry everything else.
 */
struct ChainComplex {
    int degree_offset = 0;
    int twist = 0; // det grade of the whole complex
    std::vector<std::string> labels;
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> differentials;

    std::size_t size() const { return dims.size(); }
    int degree(std::size_t i) const { return degree_offset + static_cast<int>(i); }
};

/// Index of the first differential pair whose composition is nonzero, or of
/// the first differential with the wrong shape; nullopt if C is a complex.
std::optional<std::size_t> complex_defect(const ChainComplex& c);
inline bool verify_complex(const ChainComplex& c) { return !complex_defect(c).has_value(); }

/// Nonzero cohomology dimensions by degree.
std::map<int, std::size_t> cohomology_dims(const ChainComplex& c);
/// sum (-1)^degree dim over the terms.
long euler_characteristic(const ChainComplex& c);
long euler_characteristic(const std::map<int, std::size_t>& cohomology);

/// Reverse the terms and transpose the maps; the old degree d becomes -d, so
/// a complex ending in degree 0 becomes one starting in degree 0. The twist
/// goes to -twist - 1.
ChainComplex dualize(const ChainComplex& c);

/// E^{0,t} -> E^{1,t-1} -> ... -> E^{t,0} in degrees -t..0, maps restricted d.
ChainComplex build_Et(const FiberModel& model, int t);

/// Lambda^i U^perp (x) S^{t-i} U for i = 0..t with differential d2, in
/// degrees -t..0.
ChainComplex build_koszul_S(const FiberModel& model, int t);

/// Degree -1 and 0 cohomology predicted for E_t: dims of the symplectic wedge
/// powers of a rank 2n-4 space, written with binomials.
std::map<int, std::size_t> predicted_Et_cohomology(int n, int t);

/// Cohomology of E_t against the prediction, plus the Euler characteristic.
Report verify_Et_cohomology(const FiberModel& model, int t);
/// Term dimensions of E_t, containment of every image, vanishing compositions.
Report verify_Et_complex(const FiberModel& model, int t);
/// Cohomology of the dual complex K_t (leftmost term in degree 0).
Report verify_dual(const FiberModel& model, int t);
/// The Koszul complex has a single cohomology, C(2n-4, t)-dimensional, in degree 0.
Report verify_koszul(const FiberModel& model, int t);

/// Adds "h[d]" expected/computed pairs over the union of degrees.
void compare_cohomology(Report& rep, const std::map<int, std::size_t>& want, const std::map<int, std::size_t>& got);

/*
 * Filtration and snake-lemma checks for E_t:
 *   d maps Lambda^a U^perp (x) S^b U into the next such piece and acts there as d2;
 *   d(xi x) + xi(d2 x) = omega_bar ^ x on Lambda^{a-1} U^perp (x) S^{b-1} U,
 *     so on the quotient pieces d is -d2 under xi;
 *   kernel and cokernel of omega_bar ^ - on Lambda(U^perp / U) give the
 *     degree -1 and 0 cohomology of E_t.
 */
Report verify_snake(const FiberModel& model, int t);

/*
 * Grid of resolutions. Column j resolves E^{j, t-j}; its level c term is
 * (j - c, t - j + c, c). Vertical maps are d0. The horizontal map out of
 * (j, c) is (-1)^c (b / (b + c)) d with b = t - j; the squares then commute
 * on the nose.
 */
struct Bicomplex {
    int t = 0;
    std::vector<std::vector<TwistedSpace>> terms;    // [column][level]
    std::vector<std::vector<LinearMap>> horizontal;  // [column][level], column < t
    std::vector<std::vector<LinearMap>> vertical;    // [column][level], level < column
};

Bicomplex build_bicomplex(const FiberModel& model, int t);

/// Direct-sum total complex; term p collects (j, c) with j + c = p, and the
/// vertical maps are multiplied by (-1)^j. Degree offset -t puts E^{t,0}'s
/// column kernel in degree 0.
ChainComplex totalize(const FiberModel& model, const Bicomplex& bc);

/// Every structural check of the bicomplex plus cohomology of the totalization.
Report verify_bicomplex(const FiberModel& model, int t);

} // namespace sscx

#endif
