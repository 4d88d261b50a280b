#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "esnorm/generators.hpp"

namespace esnorm {

/// Parameters shared by a whole tower: the field, the prime r | q-1 and
/// the tower exponent m; d = r^m. Validated eagerly.
struct CaseParams {
    CaseParams(const Field& field, std::uint64_t r, std::uint32_t m);

    const Field* field;
    std::uint64_t r;
    std::uint32_t m;

    std::uint64_t d() const;
};

enum class RootVerdict { DeterminantIsOne, RootExists, NoRoot };

const char* to_string(RootVerdict v);

/**
 * Tri-state verdict on whether the tower determinant admits a d-th root,
 * with the rule tag naming the clause that fired and, unless the verdict
 * is NoRoot, a witness lambda with lambda^d equal to the determinant.
 */
struct RootClassification {
    RootVerdict verdict;
    std::string rule;
    std::optional<FieldElement> witness;
};

/// det U = omega^((r-1)r(r+1)/6): 1 for r > 3, omega for r in {2, 3}.
/// The one-argument-omega overloads evaluate the same formula at an
/// explicit primitive r-th root instead of the field's canonical one.
FieldElement det_u_closed(const Field& field, std::uint64_t r);
FieldElement det_u_closed(std::uint64_t r, const FieldElement& omega);

/// det V: omega - 1 for r = 2, 3*omega*(omega - 1) for r = 3, and the
/// Vandermonde product prod_{k=1}^{r-1} (omega^k - 1)^(r-k) for r > 3.
FieldElement det_v_closed(const Field& field, std::uint64_t r);
FieldElement det_v_closed(std::uint64_t r, const FieldElement& omega);

/// legendre(-1, r) * r^r evaluated in F_q; equals det_v_closed(F, r)^2
/// for every r > 3. Throws BadR for r <= 3.
FieldElement det_v_squared_identity(const Field& field, std::uint64_t r);

/// Sign of w_permutation(r): -1 for r = 2, +1 for every odd prime.
int det_w_closed(std::uint64_t r);

/// The tower determinant: (det X)^(r^(m-1)) for X in {U, V} and
/// (det W)^(r^(m-2)) for W. Independent of the tower position i.
FieldElement det_tower_closed(Family family, const CaseParams& c);

/// det U_i is 1 whenever r > 3 or m >= 2; otherwise it is omega and a
/// d-th root exists iff r^2 | q-1.
RootClassification classify_u(const CaseParams& c);

/// det V_i always has a d-th root for r >= 3 or m >= 3; for r = 2 and
/// m <= 2 a root exists iff e is even, or p = 1,3 (mod 8), or
/// p = 7 (mod 8) with m = 2.
RootClassification classify_v(const CaseParams& c);

/// det W_i is 1 whenever r > 2 or m >= 3; otherwise (r = m = 2) it is -1
/// and a fourth root exists iff 8 | q-1. Requires m >= 2.
RootClassification classify_w(const CaseParams& c);

RootClassification classify(Family family, const CaseParams& c);

/// The V-family root-existence claim exactly as printed in the source
/// theorem: no root iff r = 2, e odd, and (m = 2 with p = 1,3,7 (mod 8)
/// or m = 1 with p = 1,3 (mod 8)). Contradicts the proof-backed
/// case analysis in classify_v on a known parameter set; kept so the
/// sweep can pin those disagreement points down. See the errata tests.
bool theorem2_literal_root_exists(const CaseParams& c);

}  // namespace esnorm
