#pragma once

#include "lcalg/module.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lcalg {

/// Formal symbol g_(n) of the annihilation algebra.
struct Symbol {
    GenIndex gen = 0;
    int index = 0;

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using SymbolCombination = std::map<Symbol, Scalar>;

std::string to_string(const SymbolCombination& c, const ConformalAlgebra& A);

/// Truncated Lie(A)^+: symbols g_(n) with n <= depth.
class AnnihAlgebra {
public:
    AnnihAlgebra(ConformalAlgebra parent, int depth);

    const ConformalAlgebra& parent() const { return parent_; }
    int depth() const { return depth_; }
    std::vector<Symbol> symbols() const;

private:
    ConformalAlgebra parent_;
    int depth_;
};

/// (h(∂) g)_(n) = sum_r h_r (-1)^r n!/(n-r)! g_(n-r), as a combination.
SymbolCombination symbol_of(const AlgebraElement& x, int n);

/// [a_(m), b_(n)] = sum_k C(m,k) (a_(k) b)_(m+n-k). Throws TruncationExceeded
/// if an input or output index exceeds the depth or the bracket is not
/// materialized.
SymbolCombination annih_bracket(const AnnihAlgebra& X, Symbol a, Symbol b);
SymbolCombination annih_bracket(const AnnihAlgebra& X, const SymbolCombination& a, const SymbolCombination& b);

/// Antisymmetry on symbol pairs and Jacobi on unordered symbol triples.
/// Anything that leaves the depth or truncation is reported skipped.
Report check_annih_lie(const AnnihAlgebra& X);

/// g_(n) · u = n! times the λ^n coefficient of g_λ u.
ModuleElement module_action_n(const ConformalModule& M, GenIndex g, int n, const ModuleElement& u);

struct WeightReport {
    Scalar weight;
    std::vector<ModuleElement> basis;
    std::size_t dim() const { return basis.size(); }
};

struct WeightAnalysis {
    int degree_bound = 0;
    std::vector<WeightReport> weights;
    /// Eigenvalues of the compressed operator not found among its diagonal
    /// entries (counted with multiplicity).
    std::size_t unresolved = 0;
    /// dim V[α] <= rank, checked only for declared completely non-trivial
    /// modules; otherwise every entry is skipped.
    Report bound;
};

/// Eigenspaces of L_(1) (with L = `l_gen`) on module elements of ∂-degree
/// <= D. Weights are ordered by first appearance on the diagonal.
WeightAnalysis weight_spaces(const ConformalModule& M, GenIndex l_gen, int degree_bound,
                             bool completely_nontrivial = false);

}  // namespace lcalg
