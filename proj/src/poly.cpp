#include "lcalg/poly.hpp"

#include <ostream>
#include <stdexcept>

namespace lcalg {

char var_symbol(Var v)
{
    switch (v) {
    case Var::D: return 'd';
    case Var::L: return 'l';
    case Var::M: return 'm';
    case Var::N: return 'n';
    }
    return '?';
}

int total_degree(const Exponent& e)
{
    int t = 0;
    for (int x : e) t += x;
    return t;
}

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const
{
    int ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta > tb;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

int Degree::value() const
{
    if (!finite_) throw std::logic_error("degree of the zero polynomial has no integer value");
    return value_;
}

std::string Degree::to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

MultiPoly::MultiPoly(const Scalar& constant)
{
    if (!constant.is_zero()) terms_.emplace(Exponent{}, constant);
}

MultiPoly MultiPoly::var(Var v)
{
    Exponent e{};
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Scalar& c)
{
    MultiPoly p;
    for (int x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && lcalg::total_degree(terms_.begin()->first) == 0);
}

bool MultiPoly::involves(Var v) const
{
    auto idx = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_)
        if (e[idx] != 0) return true;
    return false;
}

bool MultiPoly::only_uses(std::initializer_list<Var> vars) const
{
    for (std::size_t i = 0; i < kNumVars; ++i) {
        bool allowed = false;
        for (Var v : vars) allowed = allowed || static_cast<std::size_t>(v) == i;
        if (!allowed && involves(static_cast<Var>(i))) return false;
    }
    return true;
}

Scalar MultiPoly::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar MultiPoly::leading_coefficient() const
{
    return terms_.empty() ? Scalar(0) : terms_.begin()->second;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e;
            for (std::size_t i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) coef *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly MultiPoly::pow(unsigned n) const
{
    MultiPoly result(1);
    MultiPoly base = *this;
    while (n) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return result;
}

Degree MultiPoly::total_degree() const
{
    if (terms_.empty()) return Degree::minus_infinity();
    // grlex-descending: the first term has maximal total degree
    return Degree(lcalg::total_degree(terms_.begin()->first));
}

Degree MultiPoly::degree(Var v) const
{
    if (terms_.empty()) return Degree::minus_infinity();
    auto idx = static_cast<std::size_t>(v);
    int best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e[idx]);
    return Degree(best);
}

namespace {

bool negative_sign(const Scalar& c)
{
    if (c.is_real()) return sgn(c.re()) < 0;
    if (sgn(c.re()) == 0) return sgn(c.im()) < 0;
    return false;
}

std::string monomial_text(const Exponent& e)
{
    std::string out;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += var_symbol(static_cast<Var>(i));
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = negative_sign(c);
        Scalar mag = neg ? -c : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;

        std::string mono = monomial_text(e);
        std::string coef;
        if (!mag.is_real() && sgn(mag.re()) != 0)
            coef = "(" + mag.to_string() + ")";
        else
            coef = mag.to_string();

        if (mono.empty())
            out += coef;
        else if (mag.is_one())
            out += mono;
        else
            out += coef + "*" + mono;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly substitute(const MultiPoly& p, const std::vector<std::pair<Var, MultiPoly>>& images)
{
    std::array<const MultiPoly*, kNumVars> image{};
    for (const auto& [v, expr] : images) image[static_cast<std::size_t>(v)] = &expr;

    // powers[i][k] = image_i^k, built lazily
    std::array<std::vector<MultiPoly>, kNumVars> powers;
    auto power_of = [&](std::size_t i, int k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.emplace_back(1);
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * *image[i]);
        return cache[static_cast<std::size_t>(k)];
    };

    MultiPoly out;
    for (const auto& [e, c] : p.terms()) {
        Exponent kept{};
        MultiPoly term(c);
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (image[i])
                term *= power_of(i, e[i]);
            else
                kept[i] = e[i];
        }
        out += term * MultiPoly::monomial(kept);
    }
    return out;
}

MultiPoly substitute(const MultiPoly& p, Var var, const MultiPoly& expr)
{
    return substitute(p, {{var, expr}});
}

MultiPoly coeff_of(const MultiPoly& p, Var var, int k)
{
    auto idx = static_cast<std::size_t>(var);
    MultiPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (e[idx] != k) continue;
        Exponent rest = e;
        rest[idx] = 0;
        out += MultiPoly::monomial(rest, c);
    }
    return out;
}

MultiPoly homogeneous_part(const MultiPoly& p, int k)
{
    MultiPoly out;
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) == k) out += MultiPoly::monomial(e, c);
    return out;
}

Degrees degrees(const MultiPoly& p)
{
    Degrees d;
    d.total = p.total_degree();
    for (std::size_t i = 0; i < kNumVars; ++i) d.per_var[i] = p.degree(static_cast<Var>(i));
    return d;
}

std::optional<Scalar> proportionality(const MultiPoly& p, const MultiPoly& q)
{
    if (q.is_zero()) return std::nullopt;
    if (p.is_zero()) return Scalar(0);
    if (p.terms().size() != q.terms().size()) return std::nullopt;
    Scalar factor = p.leading_coefficient() / q.leading_coefficient();
    if (p == q * factor) return factor;
    return std::nullopt;
}

}  // namespace lcalg
