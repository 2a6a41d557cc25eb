#pragma once

#include "lcalg/poly.hpp"
#include "lcalg/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcalg {

/// Parameters of the intertwiner equation
///   (-λ-μ+aλ+b) f(∂,λ+μ) = f(∂+λ,μ)(∂+Δ_iλ+c_i) - (∂+μ+Δ_jλ+c_j) f(∂,μ)
/// for an unknown f(∂,λ) of total degree <= degree_bound, or of total degree
/// exactly `homogeneous_degree` when that is set.
struct FuncEqInstance {
    Scalar a, b;
    Scalar delta_i, c_i;
    Scalar delta_j, c_j;
    int degree_bound = 0;
    std::optional<int> homogeneous_degree;
};

/// Canonical basis of a solution space: coefficient vectors over the
/// grlex-descending monomial order in reduced row echelon form, so each
/// element has leading coefficient 1.
struct SolutionBasis {
    std::vector<MultiPoly> basis;
    std::size_t dimension() const { return basis.size(); }
};

MultiPoly intertwiner_residual(const FuncEqInstance& inst, const MultiPoly& f);

/// (-λ+aλ-μ) f(∂,λ+μ) - f(∂+λ,μ)(∂+Δ_iλ) + (∂+μ+Δ_jλ) f(∂,μ).
MultiPoly homogeneous_residual(const Scalar& a, const Scalar& delta_i, const Scalar& delta_j, const MultiPoly& f);

/// The second orientation: (-λ-μ+aλ) q(∂,λ+μ) - q(∂+μ,λ)(∂+Δ_0λ+c_0)
/// + (∂+μ+Δ_tλ+c_t) q(∂,μ), with Δ_0, c_0, Δ_t, c_t read from the
/// instance's i and j fields; b is not used.
MultiPoly bcsx_residual(const FuncEqInstance& inst, const MultiPoly& q);

SolutionBasis solve_intertwiner(const FuncEqInstance& inst);
SolutionBasis solve_homogeneous(const Scalar& a, const Scalar& delta_i, const Scalar& delta_j, int k);
SolutionBasis bcsx_variant_solver(const FuncEqInstance& inst);

/// The highest-degree homogeneous part of f.
MultiPoly top_homogeneous_part(const MultiPoly& f);

struct DegreeOffset {
    Scalar expected;   ///< a + Δ_j - Δ_i - 1
    int deg_lambda = 0;
    int total_degree = 0;
    bool holds = false;  ///< deg_λ f == expected
};

/// Compares deg_λ f with a + Δ_j - Δ_i - 1. Throws NotASolution unless f is
/// a nonzero solution of the homogeneous equation.
DegreeOffset degree_offset(const MultiPoly& f, const Scalar& a, const Scalar& delta_i, const Scalar& delta_j);

struct RowParams {
    Scalar a, delta_i, delta_j;
};

/// One row of the homogeneous solution table, instantiated at sample values.
struct TableRow {
    std::string id;      ///< "1a" .. "2d"
    int k = 0;
    int free_params = 0;  ///< how many of (a, Δ_i) the row leaves free
    /// Fills (a, Δ_i, Δ_j) from the free parameter values (unused ones are
    /// ignored); returns nothing if they break the row's hypotheses.
    std::optional<RowParams> (*instantiate)(const Scalar& s, const Scalar& t);
    /// The stated solution at (a, Δ_i).
    MultiPoly (*solution)(const Scalar& a, const Scalar& delta_i);
};

const std::vector<TableRow>& solution_table();

/// Row 2d is encoded with Δ_j = 1, Δ_i = -2, where its polynomial solves.
/// This returns a = 1, Δ_j = 2, Δ_i = -1: no degree 3 solution exists there.
RowParams printed_row_2d_params();

struct TableCheck {
    std::string row;
    bool perturbed = false;
    Scalar a, delta_i, delta_j;
    int k = 0;
    std::size_t expected_dim = 0;
    std::size_t actual_dim = 0;
    bool stated_solves = true;    ///< the stated polynomial has zero defect
    bool matches_stated = true;   ///< the solver's basis is the stated one up to scalar
    bool offset_holds = true;     ///< degree offset of every solution found
    bool passed() const
    {
        return expected_dim == actual_dim && stated_solves && matches_stated && offset_holds;
    }
};

/// Default samples: six Gaussian rationals, two of them non-real.
std::vector<Scalar> default_table_samples();
/// Δ_j shifts applied to break each row's constraint.
std::vector<Scalar> default_perturbations();

/// For every row and every admissible combination of samples: the stated
/// polynomial solves, solve_homogeneous has dimension 1 and returns it up to
/// scalar, and each perturbation of Δ_j gives dimension 0.
std::vector<TableCheck> verify_solution_table_checks(const std::vector<Scalar>& samples,
                                                     const std::vector<Scalar>& perturbations);
Report verify_solution_table(const std::vector<Scalar>& samples);
Report to_report(const std::vector<TableCheck>& checks);

}  // namespace lcalg
