#pragma once

#include "lcalg/expr.hpp"
#include "lcalg/module.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcalg {

/// Line-oriented spec format. `#` starts a comment outside quotes.
///
///   [constants]
///   w = "d + 2*l"                  # usable as $w in later expressions
///
///   [algebra]
///   builtin = "block"              # virasoro | current | vir_semidirect |
///   p = "1"                        #   block | map_virasoro
///   truncation = 8
///
///   [algebra]                      # or an explicit table
///   generators = "L, x"
///   grades = "0, 1"                # optional
///   truncation = 2                 # optional, needs grades
///   p_00 = "d + 2*l"               # target: the generator of grade g_0 + g_0
///   p_0_1_1 = "d + l"              # coefficient of generator 1 in [g_0 λ g_1]
///
///   [module M]
///   basis = "v"
///   L = "d + l + 3"                # action of generator L; rows split by ';',
///   act_1 = "0"                    #   entries by ','; act_<n> names index n
///   virasoro = "L"                 # the generator used for weights
///   completely_nontrivial = true
///
/// `p_IJ` takes two single-digit indices; `p_I_J` and `p_I_J_K` take any. The
/// two-index forms need grades unless there is a single generator.
/// Module builtins: rank_one_vir (a, b), theorem (case = 1|2, delta, c, gamma,
/// ci = "1, 0, .."), adjoint, trivial (rank). Current algebras take
/// lie = "sl2" | "nonabelian2" | "abelian:<n>"; map_virasoro takes
/// truncation = N (C[T] cut at grade N) or quotient = n (C[T]/(T^n)).
///
/// Errors: ParseError (with line and column), UnknownGenerator,
/// DuplicateDefinition.

struct ModuleSpec {
    std::string name;
    ConformalModule module;
    std::optional<GenIndex> virasoro;
    bool completely_nontrivial = false;
};

struct SpecFile {
    ConstantTable constants;
    ConformalAlgebra algebra;
    std::vector<ModuleSpec> modules;

    /// The named module, or the first one when `name` is empty. Throws
    /// SpecError if there is none.
    const ModuleSpec& module(std::string_view name = {}) const;
};

SpecFile parse_spec(std::string_view text);
/// Reads a file; an unreadable file is a SpecError.
SpecFile load_spec(const std::string& path);

/// "a, b; c, d" into rows of polynomials. Entries may use `$name` constants.
std::vector<std::vector<MultiPoly>> parse_poly_rows(std::string_view text, const ConstantTable* constants = nullptr,
                                                    int line = 0, int column_offset = 0);

}  // namespace lcalg
