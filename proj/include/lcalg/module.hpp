#pragma once

#include "lcalg/algebra.hpp"
#include "lcalg/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lcalg {

/// Square matrix of (∂,λ)-polynomials; entry (k,j) is the coefficient of v_k
/// in g_λ v_j.
using ActionMatrix = std::vector<std::vector<MultiPoly>>;

/// Element of a free module: one polynomial coordinate per basis vector.
using ModuleElement = std::vector<MultiPoly>;

/// Finite conformal module, free over C[∂] on `basis`, given by action
/// matrices for the generators of its algebra.
class ConformalModule {
public:
    /// Throws InvalidStructure on a non-square matrix, a size mismatch, or an
    /// entry using variables other than ∂, λ.
    ConformalModule(std::vector<std::string> basis, std::map<GenIndex, ActionMatrix> actions);

    std::size_t rank() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::map<GenIndex, ActionMatrix>& actions() const { return actions_; }
    bool has_action(GenIndex g) const { return actions_.count(g) != 0; }
    /// Throws MissingAction.
    const ActionMatrix& action(GenIndex g) const;

    /// Irreducibility as asserted by the constructor that built the module.
    std::optional<bool> irreducible;

private:
    std::vector<std::string> basis_;
    std::map<GenIndex, ActionMatrix> actions_;
};

ActionMatrix zero_action(std::size_t rank);

/// g_Λ u for a single generator, where Λ is a polynomial standing in for λ:
/// g_Λ (sum_j f_j v_j) = sum_{j,k} f_j(∂+Λ) A_kj(∂,Λ) v_k.
ModuleElement act_generator(const ConformalModule& M, GenIndex g, const ModuleElement& u, const MultiPoly& lambda);

/// x_Λ u for an algebra element x = sum h_i(∂) g_i; each term contributes
/// h_i(-Λ) g_i_Λ u.
ModuleElement act(const ConformalModule& M, const GenVector& x, const ModuleElement& u, const MultiPoly& lambda);

ModuleElement basis_vector(const ConformalModule& M, std::size_t j);
std::string to_string(const ModuleElement& u, const std::vector<std::string>& basis);

/// Module axiom a_λ(b_μ v) - [a_λ b]_{λ+μ} v - b_μ(a_λ v) = 0 for every
/// generator pair and basis vector, plus a seeded sesquilinearity spot check.
/// Pairs whose bracket is not materialized are skipped. Throws MissingAction
/// if a generator has no matrix.
Report check_module(const ConformalAlgebra& A, const ConformalModule& M, unsigned seed = 1);

/// M_{a,b}: L_λ v = (∂+aλ+b)v over Vir, flagged irreducible iff a != 0.
ConformalModule rank_one_vir(const Scalar& a, const Scalar& b);

enum class TheoremCase {
    A1NotTwo,  ///< L_0 ~ ∂+Δλ+c, L_1 ~ γ, higher grades act trivially
    A1Two,     ///< L_i ~ c_i(∂+Δλ+c)
};

struct TheoremParams {
    Scalar delta;
    Scalar c;
    Scalar gamma;             ///< first case only
    std::vector<Scalar> ci;   ///< second case only, indexed by grade, ci[0] == 1
};

/// Rank-one module over a graded algebra with one generator per grade and a
/// Virasoro-type grade-zero generator. The first case needs a_1 != 2,
/// gamma != 0 only when a_1 == 1, and Δ != 0 when gamma == 0; the second needs
/// a_1 == 2, Δ != 0 and a c_i for every grade. Throws InvalidParams.
ConformalModule rank_one_theorem_module(const ConformalAlgebra& A, TheoremCase which, const TheoremParams& params);

/// Adjoint module of an algebra without truncation: g_λ g_j = [g λ g_j].
ConformalModule adjoint_module(const ConformalAlgebra& A);
/// Every generator acts by zero.
ConformalModule trivial_module(const ConformalAlgebra& A, std::size_t rank = 1);
ConformalModule direct_sum(const ConformalModule& a, const ConformalModule& b);

struct ActionKernel {
    std::vector<GenIndex> zero_generators;
    /// Canonical basis of {k : sum_g k_g A_g = 0}, vectors indexed by
    /// generator.
    std::vector<Vector> combinations;
};

/// Throws MissingAction if a generator has no matrix.
ActionKernel action_kernel(const ConformalAlgebra& A, const ConformalModule& M);

}  // namespace lcalg
