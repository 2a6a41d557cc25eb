#pragma once

#include "lcalg/poly.hpp"
#include "lcalg/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcalg {

using GenIndex = std::size_t;

/// Generator-indexed vector of polynomials; zero coordinates are not stored.
/// As an algebra element the coordinates are ∂-polynomials; as a bracket
/// value they are polynomials in ∂ and the bracket parameter.
using GenVector = std::map<GenIndex, MultiPoly>;
using AlgebraElement = GenVector;

GenVector& accumulate(GenVector& acc, const GenVector& v, const MultiPoly& factor = MultiPoly(1));
bool is_zero(const GenVector& v);
std::string to_string(const GenVector& v, const std::vector<std::string>& labels);

/// Z+-grading metadata. Each generator has a grade; brackets with grade sum
/// above `truncation` are not materialized.
struct Grading {
    std::vector<int> grades;
    std::optional<int> truncation;
};

/// Lie conformal algebra, free over C[∂] on the listed generators, given by
/// its full λ-bracket table [g_i λ g_j] = sum_k p_ijk(∂,λ) g_k. Both (i,j) and
/// (j,i) are stored; skew-symmetry is checked, never assumed. Pairs inside the
/// truncation that have no table entry bracket to zero.
class ConformalAlgebra {
public:
    using Table = std::map<std::pair<GenIndex, GenIndex>, GenVector>;

    /// Throws InvalidStructure if an entry uses variables other than ∂, λ,
    /// refers to an unknown generator, lies outside the truncation, or breaks
    /// the grading.
    ConformalAlgebra(std::vector<std::string> labels, Table table, std::optional<Grading> grading = {});

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<GenIndex> index_of(const std::string& label) const;

    bool is_graded() const { return grading_.has_value(); }
    const std::optional<Grading>& grading() const { return grading_; }
    std::optional<int> grade(GenIndex g) const;
    std::optional<int> truncation() const { return grading_ ? grading_->truncation : std::nullopt; }
    /// The unique generator of a given grade, if there is exactly one.
    std::optional<GenIndex> generator_of_grade(int grade) const;

    /// Whether [g_i λ g_j] is materialized.
    bool has_entry(GenIndex i, GenIndex j) const;
    /// Throws TruncationExceeded if the entry is not materialized.
    const GenVector& entry(GenIndex i, GenIndex j) const;
    const Table& table() const { return table_; }

private:
    std::vector<std::string> labels_;
    Table table_;
    std::optional<Grading> grading_;
};

AlgebraElement generator(GenIndex g, const MultiPoly& coeff = MultiPoly(1));

/// [x Λ y] where Λ is an arbitrary polynomial standing in for λ:
/// [f(∂)g_i Λ h(∂)g_j] = f(-Λ) h(∂+Λ) p_ij(∂,Λ), extended bilinearly.
/// Coordinates of x and y may involve parameters other than ∂; they are
/// treated as constants. Throws TruncationExceeded on a missing entry.
GenVector bracket_at(const ConformalAlgebra& A, const GenVector& x, const GenVector& y, const MultiPoly& lambda);

/// The λ-bracket of two algebra elements (∂-polynomial coordinates).
GenVector bracket(const ConformalAlgebra& A, const AlgebraElement& x, const AlgebraElement& y);

/// j-th product: j! times the λ^j coefficient of [x λ y].
AlgebraElement jth_product(const ConformalAlgebra& A, const AlgebraElement& x, const AlgebraElement& y,
                           int j);

/// p_ij(∂,λ) + p_ji(∂,-λ-∂); zero iff skew-symmetry holds for the pair.
GenVector skew_defect(const ConformalAlgebra& A, GenIndex i, GenIndex j);

/// [a λ [b μ c]] - [[a λ b] λ+μ c] - [b μ [a λ c]] in (∂, λ, μ).
GenVector jacobi_defect(const ConformalAlgebra& A, GenIndex a, GenIndex b, GenIndex c);

Report check_skew(const ConformalAlgebra& A);
/// Every generator triple; triples touching unmaterialized entries are
/// reported as skipped.
Report check_jacobi(const ConformalAlgebra& A);

/// Normalized Virasoro weight of generator i relative to the Virasoro-type
/// generator l0: if p_{l0,l0} = κ(∂+2λ) and p_{l0,i} = κ(∂+aλ+b), returns
/// (a, b). Returns nothing if p_{l0,i} is zero; throws MalformedBracket if it
/// is not of that shape and NotVirasoroAtZero if p_{l0,l0} is not.
std::optional<std::pair<Scalar, Scalar>> virasoro_weight(const ConformalAlgebra& A, GenIndex l0, GenIndex i);

// Built-in algebras ---------------------------------------------------------

/// Dense structure constants c[a][b][k] of a finite-dimensional algebra.
using StructureConstants = std::vector<std::vector<std::vector<Scalar>>>;

StructureConstants sl2_structure();
/// Two-dimensional non-abelian Lie algebra [x, y] = y.
StructureConstants nonabelian2_structure();
StructureConstants abelian_structure(std::size_t dim);

/// Vir: [L λ L] = (∂+2λ)L.
ConformalAlgebra virasoro();

/// Cur g: [x λ y] = [x, y]. Throws InvalidStructure unless the constants are
/// antisymmetric; the Jacobi identity of g is left to check_jacobi.
ConformalAlgebra current(const StructureConstants& g, std::vector<std::string> labels = {});

/// Vir ⋉_a Cur g: [L λ x] = (∂+aλ)x, [x λ L] = ((a-1)∂+aλ)x.
ConformalAlgebra vir_semidirect_current(const Scalar& a, const StructureConstants& g,
                                        std::vector<std::string> labels = {});

/// B(p) truncated at grade N: [L_i λ L_j] = ((i+p)∂+(i+j+2p)λ)L_{i+j}.
/// Throws InvalidStructure if p == 0 or N < 0.
ConformalAlgebra block(const Scalar& p, int truncation);

/// Multiplication table m[x][y][z] of a commutative associative unital
/// algebra, with optional grades on its basis.
struct CommutativeAlgebra {
    std::vector<std::string> labels;
    StructureConstants mult;
    std::optional<std::vector<int>> grades;
};

/// C[T]/(T^n) on the basis 1, T, ..., T^{n-1}, graded by T-degree.
CommutativeAlgebra truncated_polynomial_algebra(int n);

/// V(A) = Vir ⊗ A: [L_x λ L_y] = (∂+2λ)L_{xy}. Throws InvalidStructure if the
/// table is not commutative, associative, and unital.
ConformalAlgebra map_virasoro(const CommutativeAlgebra& A);

/// V(C[T]) truncated at grade N: generators L⊗T^i for i <= N, brackets with
/// i+j > N not materialized.
ConformalAlgebra map_virasoro_polynomial(int truncation);

}  // namespace lcalg
