#pragma once

#include "lcalg/algebra.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lcalg {

/// The graded algebras handled here have one generator L_i per grade i, with
/// [L_i λ L_j] = p_ij(∂,λ) L_{i+j}. Grades run from 0 up to the truncation (or
/// the largest grade present when there is none). Every function below throws
/// InvalidParams if the algebra is ungraded or some grade has no unique
/// generator, and NotVirasoroAtZero unless p_00 = κ(∂+2λ) with κ != 0.

struct GradeSplit {
    std::vector<int> I0;  ///< grades i with p_0i != 0
    std::vector<int> I1;  ///< grades i with p_0i == 0
    Report report;
};

/// Checks within the truncation that [G0 λ G1] = 0, that I0 is closed under
/// sums wherever p_ij != 0, and that G1 is a subalgebra. A nonzero p_ij with
/// i in I0, j in I1 is reported with the defect
///   p_ij(∂+λ,μ) p_0,i+j(∂,λ) - p_0i(-λ-μ,λ) p_ij(∂,λ+μ).
GradeSplit split_I0_I1(const ConformalAlgebra& A);

/// b_i = i·b_1 for every grade in range, reading p_0i = κ(∂+a_iλ+b_i).
/// Throws HypothesisViolated if [L_1 λ L_i] = 0 for some i within the
/// truncation, MalformedBracket if some p_0i has the wrong shape.
Report check_b_linear(const ConformalAlgebra& A);

struct GradedProfile {
    std::map<int, Scalar> a_seq;  ///< grades in I0 only
    std::map<int, Scalar> b_seq;
    /// deg_λ p_ij, or nothing for a zero bracket; pairs within the truncation.
    std::map<std::pair<int, int>, std::optional<int>> deg_choices;
    /// a_{j+1} = a_1 + a_j - 1 - deg_λ p_1j whenever p_1j != 0, and
    /// deg_λ p_ij = a_i + a_j - a_{i+j} - 1 for every nonzero bracket.
    /// Pairs whose target weight a_{i+j} is 0 are skipped: the degree relation
    /// needs it nonzero.
    Report invariants;
};

/// Throws MalformedBracket if some nonzero p_0i is not κ(∂+aλ+b).
GradedProfile profile_from_table(const ConformalAlgebra& A);

struct ScanResult {
    Scalar a1;
    int horizon = 0;
    bool admissible = false;
    /// a_0 .. a_N of the first surviving branch.
    std::optional<std::vector<Scalar>> witness_sequence;
    /// deg_λ p_1j for j = 1 .. N-1 along the witness.
    std::optional<std::vector<int>> witness_degrees;
    /// Deepest grade any branch reached when none survived.
    std::optional<int> rejection_depth;
    /// The witness table (ScanRule::Jacobi only), truncated at the horizon.
    std::optional<ConformalAlgebra> witness_table;
};

enum class ScanRule {
    /// Degree bookkeeping only: k = deg_λ p_1j must be a degree at which the
    /// homogeneous equation at (a, Δ_i, Δ_j) = (a_1, a_{j+1}, a_j) has a
    /// solution (k <= 3), and p_11, which is nonzero and skew, needs odd k.
    /// Other diagonal brackets may vanish, so they add no constraint.
    Degrees,
    /// Builds the table: p_1j is the solution found for k, every other entry
    /// of the new grade follows from the Jacobi identity on (L_1, L_{i-1}, L_j),
    /// and the branch survives only if skew-symmetry and every Jacobi identity
    /// of that grade hold.
    Jacobi,
};

/// Finite-horizon search for a weight sequence a_0 = 2, a_1, .., a_N with
/// b_i = 0 and [L_1 λ L_j] != 0, where a_{j+1} = a_1 + a_j - 1 - deg_λ p_1j.
/// Depth first, k in increasing order; the first branch reaching grade N with
/// at most max(1, N/2) distinct values among a_1 .. a_N is the witness. Branches
/// reaching a_{j+1} = 0 are dropped (the solution list needs Δ_i != 0).
/// Non-real a_1 is rejected outright. Admissibility at N is necessary for the
/// infinite statement, not sufficient.
ScanResult scan_a1(const Scalar& a1, int horizon, ScanRule rule = ScanRule::Degrees);

/// {m/n : 1 <= n <= max_den, lo <= m/n <= hi}, increasing, without repeats.
std::vector<Scalar> farey_grid(int max_den, const Scalar& lo, const Scalar& hi);

/// {2} ∪ {2 - 1/p : p <= max_p} ∪ {2 - 2/q : q odd, q <= max_q}.
bool in_admissible_list(const Scalar& a1, int max_p, int max_q);

}  // namespace lcalg
