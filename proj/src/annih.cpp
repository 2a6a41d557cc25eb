#include "lcalg/annih.hpp"

#include "lcalg/errors.hpp"

#include <algorithm>

namespace lcalg {

std::string to_string(const SymbolCombination& c, const ConformalAlgebra& A)
{
    std::string out;
    for (const auto& [s, k] : c) {
        if (k.is_zero()) continue;
        Scalar coef = k;
        bool negative = k.is_real() && sgn(k.re()) < 0;
        if (negative) coef = -k;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (!coef.is_one()) out += (coef.is_real() ? coef.to_string() : "(" + coef.to_string() + ")") + "*";
        out += A.labels()[s.gen] + "_(" + std::to_string(s.index) + ")";
    }
    return out.empty() ? "0" : out;
}

AnnihAlgebra::AnnihAlgebra(ConformalAlgebra parent, int depth) : parent_(std::move(parent)), depth_(depth)
{
    if (depth < 0) throw InvalidParams("depth must be non-negative");
}

std::vector<Symbol> AnnihAlgebra::symbols() const
{
    std::vector<Symbol> out;
    for (GenIndex g = 0; g < parent_.size(); ++g)
        for (int n = 0; n <= depth_; ++n) out.push_back({g, n});
    return out;
}

namespace {

void add_to(SymbolCombination& acc, const Symbol& s, const Scalar& k)
{
    if (k.is_zero()) return;
    Scalar& slot = acc[s];
    slot += k;
    if (slot.is_zero()) acc.erase(s);
}

}  // namespace

SymbolCombination symbol_of(const AlgebraElement& x, int n)
{
    SymbolCombination out;
    for (const auto& [g, h] : x) {
        for (const auto& [e, c] : h.terms()) {
            int r = e[0];
            if (r > n) continue;
            // n!/(n-r)!
            Scalar falling = 1;
            for (int t = 0; t < r; ++t) falling *= Scalar(n - t);
            add_to(out, {g, n - r}, (r % 2 ? -c : c) * falling);
        }
    }
    return out;
}

SymbolCombination annih_bracket(const AnnihAlgebra& X, Symbol a, Symbol b)
{
    const ConformalAlgebra& A = X.parent();
    const std::string where = "[" + A.labels()[a.gen] + "_(" + std::to_string(a.index) + "), " +
                              A.labels()[b.gen] + "_(" + std::to_string(b.index) + ")]";
    if (a.index > X.depth() || b.index > X.depth()) throw TruncationExceeded(where + ": index beyond depth");
    if (a.index < 0 || b.index < 0) throw InvalidParams(where + ": negative index");

    GenVector br = bracket(A, generator(a.gen), generator(b.gen));
    int top = 0;
    for (const auto& [g, p] : br) {
        Degree dl = p.degree(Var::L);
        if (!dl.is_minus_infinity()) top = std::max(top, dl.value());
    }
    SymbolCombination out;
    for (int k = 0; k <= std::min(a.index, top); ++k) {
        AlgebraElement prod = jth_product(A, generator(a.gen), generator(b.gen), k);
        if (prod.empty()) continue;
        Scalar binom = binomial(static_cast<unsigned>(a.index), static_cast<unsigned>(k));
        for (const auto& [s, c] : symbol_of(prod, a.index + b.index - k)) add_to(out, s, binom * c);
    }
    for (const auto& [s, c] : out)
        if (s.index > X.depth()) throw TruncationExceeded(where + ": result leaves the depth");
    return out;
}

SymbolCombination annih_bracket(const AnnihAlgebra& X, const SymbolCombination& a, const SymbolCombination& b)
{
    SymbolCombination out;
    for (const auto& [sa, ka] : a)
        for (const auto& [sb, kb] : b)
            for (const auto& [s, k] : annih_bracket(X, sa, sb)) add_to(out, s, ka * kb * k);
    return out;
}

namespace {

class BracketCache {
public:
    explicit BracketCache(const AnnihAlgebra& X) : X_(X) {}

    const SymbolCombination& get(Symbol a, Symbol b)
    {
        auto key = std::make_pair(a, b);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, annih_bracket(X_, a, b)).first;
        return it->second;
    }

    SymbolCombination get(Symbol a, const SymbolCombination& b)
    {
        SymbolCombination out;
        for (const auto& [sb, kb] : b)
            for (const auto& [s, k] : get(a, sb)) add_to(out, s, kb * k);
        return out;
    }

private:
    const AnnihAlgebra& X_;
    std::map<std::pair<Symbol, Symbol>, SymbolCombination> cache_;
};

std::string symbol_label(const ConformalAlgebra& A, Symbol s)
{
    return A.labels()[s.gen] + "_(" + std::to_string(s.index) + ")";
}

}  // namespace

Report check_annih_lie(const AnnihAlgebra& X)
{
    Report r;
    r.name = "annih";
    const ConformalAlgebra& A = X.parent();
    const std::vector<Symbol> syms = X.symbols();
    BracketCache cache(X);

    for (std::size_t i = 0; i < syms.size(); ++i)
        for (std::size_t j = i; j < syms.size(); ++j) {
            std::string id = "antisym(" + symbol_label(A, syms[i]) + "," + symbol_label(A, syms[j]) + ")";
            try {
                SymbolCombination sum = cache.get(syms[i], syms[j]);
                for (const auto& [s, k] : cache.get(syms[j], syms[i])) add_to(sum, s, k);
                if (sum.empty())
                    r.pass(id);
                else
                    r.fail(id, {to_string(sum, A)});
            } catch (const TruncationExceeded& e) {
                r.skip(id, e.what());
            }
        }

    for (std::size_t i = 0; i < syms.size(); ++i)
        for (std::size_t j = i + 1; j < syms.size(); ++j)
            for (std::size_t k = j + 1; k < syms.size(); ++k) {
                Symbol x = syms[i], y = syms[j], z = syms[k];
                std::string id = "jacobi(" + symbol_label(A, x) + "," + symbol_label(A, y) + "," +
                                 symbol_label(A, z) + ")";
                try {
                    SymbolCombination sum = cache.get(x, cache.get(y, z));
                    for (const auto& [s, c] : cache.get(y, cache.get(z, x))) add_to(sum, s, c);
                    for (const auto& [s, c] : cache.get(z, cache.get(x, y))) add_to(sum, s, c);
                    if (sum.empty())
                        r.pass(id);
                    else
                        r.fail(id, {to_string(sum, A)});
                } catch (const TruncationExceeded& e) {
                    r.skip(id, e.what());
                }
            }
    return r;
}

ModuleElement module_action_n(const ConformalModule& M, GenIndex g, int n, const ModuleElement& u)
{
    if (n < 0) throw InvalidParams("n must be non-negative");
    ModuleElement full = act_generator(M, g, u, l_var());
    const Scalar scale = factorial(static_cast<unsigned>(n));
    for (auto& p : full) p = coeff_of(p, Var::L, n) * scale;
    return full;
}

namespace {

// Coordinates of F_D: basis vector j times ∂^k, ordered by (k, j).
struct Filtration {
    std::size_t rank;
    int degree;

    std::size_t size() const { return rank * static_cast<std::size_t>(degree + 1); }
    std::size_t index(std::size_t j, int k) const { return static_cast<std::size_t>(k) * rank + j; }

    ModuleElement element(const Vector& coords) const
    {
        ModuleElement u(rank);
        for (int k = 0; k <= degree; ++k)
            for (std::size_t j = 0; j < rank; ++j) {
                const Scalar& c = coords[index(j, k)];
                if (!c.is_zero()) u[j] += c * d_var().pow(static_cast<unsigned>(k));
            }
        return u;
    }
};

// Divides (x - root) out of a polynomial given low-to-high as often as it
// goes; returns the count.
std::size_t root_multiplicity(std::vector<Scalar>& poly, const Scalar& root)
{
    std::size_t mult = 0;
    for (;;) {
        if (poly.size() <= 1) return mult;
        // synthetic division by (x - root)
        std::vector<Scalar> q(poly.size() - 1);
        Scalar carry = 0;
        for (std::size_t i = poly.size(); i-- > 1;) {
            carry = poly[i] + carry * root;
            q[i - 1] = carry;
        }
        Scalar remainder = poly[0] + carry * root;
        if (!remainder.is_zero()) return mult;
        poly = std::move(q);
        ++mult;
    }
}

}  // namespace

WeightAnalysis weight_spaces(const ConformalModule& M, GenIndex l_gen, int degree_bound, bool completely_nontrivial)
{
    if (degree_bound < 0) throw InvalidParams("degree bound must be non-negative");
    WeightAnalysis out;
    out.degree_bound = degree_bound;
    out.bound.name = "weight-bound";

    const Filtration src{M.rank(), degree_bound};
    // images, then the degree they reach
    std::vector<ModuleElement> images;
    int reach = degree_bound;
    for (int k = 0; k <= degree_bound; ++k)
        for (std::size_t j = 0; j < M.rank(); ++j) {
            ModuleElement u(M.rank());
            u[j] = d_var().pow(static_cast<unsigned>(k));
            ModuleElement img = module_action_n(M, l_gen, 1, u);
            for (const auto& p : img) {
                Degree dd = p.degree(Var::D);
                if (!dd.is_minus_infinity()) reach = std::max(reach, dd.value());
            }
            images.push_back(std::move(img));
        }
    const Filtration dst{M.rank(), reach};
    Matrix T(dst.size(), src.size());
    for (int k = 0; k <= degree_bound; ++k)
        for (std::size_t j = 0; j < M.rank(); ++j) {
            std::size_t col = src.index(j, k);
            const ModuleElement& img = images[col];
            for (std::size_t t = 0; t < M.rank(); ++t)
                for (const auto& [e, c] : img[t].terms()) T(dst.index(t, e[0]), col) = c;
        }

    const std::size_t n = src.size();
    Matrix compressed(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) compressed(r, c) = T(r, c);
    std::vector<Scalar> charpoly = characteristic_polynomial(compressed);

    std::vector<Scalar> candidates;
    for (std::size_t i = 0; i < n; ++i) {
        const Scalar& s = compressed(i, i);
        if (std::find(candidates.begin(), candidates.end(), s) == candidates.end()) candidates.push_back(s);
    }
    std::size_t resolved = 0;
    for (const auto& alpha : candidates) {
        std::size_t mult = root_multiplicity(charpoly, alpha);
        if (mult == 0) continue;
        resolved += mult;
        Matrix shifted = T;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= alpha;
        WeightReport w;
        w.weight = alpha;
        for (const auto& v : nullspace(shifted)) w.basis.push_back(src.element(v));
        if (w.basis.empty()) continue;
        std::string id = "dim V[" + alpha.to_string() + "] <= rank";
        if (!completely_nontrivial)
            out.bound.skip(id, "module not declared completely non-trivial");
        else if (w.dim() <= M.rank())
            out.bound.pass(id);
        else
            out.bound.fail(id, {std::to_string(w.dim())}, "rank " + std::to_string(M.rank()));
        out.weights.push_back(std::move(w));
    }
    out.unresolved = n - resolved;
    return out;
}

}  // namespace lcalg
