#include "lcalg/snf.hpp"

#include <stdexcept>

namespace lcalg {

UniPoly::UniPoly(const Scalar& c)
{
    if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::x() { return UniPoly(std::vector<Scalar>{0, 1}); }

UniPoly UniPoly::from_multi(const MultiPoly& p)
{
    if (!p.only_uses({Var::D})) throw std::invalid_argument("expected a polynomial in d only: " + p.to_string());
    std::vector<Scalar> c;
    for (const auto& [e, s] : p.terms()) {
        auto k = static_cast<std::size_t>(e[0]);
        if (c.size() <= k) c.resize(k + 1);
        c[k] = s;
    }
    return UniPoly(std::move(c));
}

MultiPoly UniPoly::to_multi() const
{
    MultiPoly p;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) p += MultiPoly::monomial({static_cast<int>(k), 0, 0, 0}, c_[k]);
    return p;
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monic() const
{
    if (is_zero()) return *this;
    Scalar inv = leading().inverse();
    UniPoly out = *this;
    for (auto& s : out.c_) s *= inv;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const
{
    UniPoly out = *this;
    for (auto& s : out.c_) s = -s;
    return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const
{
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly rem = *this;
    std::vector<Scalar> q(std::max(0, degree() - divisor.degree() + 1));
    const Scalar inv = divisor.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        auto shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        Scalar f = rem.leading() * inv;
        q[shift] = f;
        for (std::size_t k = 0; k < divisor.c_.size(); ++k) rem.c_[k + shift] -= f * divisor.c_[k];
        rem.trim();
    }
    return {UniPoly(std::move(q)), rem};
}

bool UniPoly::divides(const UniPoly& other) const
{
    if (is_zero()) return other.is_zero();
    return other.divmod(*this).second.is_zero();
}

PolyMatrix PolyMatrix::identity(std::size_t n)
{
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = UniPoly(1);
    return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<UniPoly>>& rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    PolyMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

std::string PolyMatrix::to_string() const
{
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) out += "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out += ", ";
            out += (*this)(r, c).to_string();
        }
    }
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
    PolyMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

UniPoly determinant(const PolyMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return UniPoly(1);
    PolyMatrix a = m;
    UniPoly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return {};
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)).divmod(prev).first;
            a(i, k) = UniPoly();
        }
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

namespace {

struct Work {
    PolyMatrix U, D, V;

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D(a, c), D(b, c));
        for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(a, c), U(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, a), D(r, b));
        for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, a), V(r, b));
    }
    // row[target] -= q * row[source]
    void row_sub(std::size_t target, std::size_t source, const UniPoly& q)
    {
        for (std::size_t c = 0; c < D.cols(); ++c) D(target, c) -= q * D(source, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U(target, c) -= q * U(source, c);
    }
    // col[target] -= q * col[source]
    void col_sub(std::size_t target, std::size_t source, const UniPoly& q)
    {
        for (std::size_t r = 0; r < D.rows(); ++r) D(r, target) -= q * D(r, source);
        for (std::size_t r = 0; r < V.rows(); ++r) V(r, target) -= q * V(r, source);
    }
    void scale_row(std::size_t r, const Scalar& s)
    {
        for (std::size_t c = 0; c < D.cols(); ++c) D(r, c) = D(r, c) * UniPoly(s);
        for (std::size_t c = 0; c < U.cols(); ++c) U(r, c) = U(r, c) * UniPoly(s);
    }
};

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& mx)
{
    Work w{PolyMatrix::identity(mx.rows()), mx, PolyMatrix::identity(mx.cols())};
    const std::size_t n = std::min(mx.rows(), mx.cols());
    SmithForm out;
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // minimal-degree pivot, row-major ties
            std::size_t pr = 0, pc = 0;
            int best = -1;
            for (std::size_t r = t; r < mx.rows(); ++r)
                for (std::size_t c = t; c < mx.cols(); ++c) {
                    const UniPoly& e = w.D(r, c);
                    if (!e.is_zero() && (best < 0 || e.degree() < best)) {
                        best = e.degree();
                        pr = r;
                        pc = c;
                    }
                }
            if (best < 0) break;
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < mx.rows(); ++r) {
                if (w.D(r, t).is_zero()) continue;
                w.row_sub(r, t, w.D(r, t).divmod(w.D(t, t)).first);
                if (!w.D(r, t).is_zero()) clean = false;
            }
            for (std::size_t c = t + 1; c < mx.cols(); ++c) {
                if (w.D(t, c).is_zero()) continue;
                w.col_sub(c, t, w.D(t, c).divmod(w.D(t, t)).first);
                if (!w.D(t, c).is_zero()) clean = false;
            }
            if (!clean) continue;

            // divisibility: pull an offending row into row t and retry
            bool divides_all = true;
            for (std::size_t r = t + 1; r < mx.rows() && divides_all; ++r)
                for (std::size_t c = t + 1; c < mx.cols(); ++c)
                    if (!w.D(t, t).divides(w.D(r, c))) {
                        w.row_sub(t, r, UniPoly(-1));
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (w.D(t, t).is_zero()) break;
        w.scale_row(t, w.D(t, t).leading().inverse());
        out.invariants.push_back(w.D(t, t));
    }
    out.U = std::move(w.U);
    out.D = std::move(w.D);
    out.V = std::move(w.V);
    return out;
}

TorsionSplit torsion_split(const PolyMatrix& presentation)
{
    SmithForm s = smith_normal_form(presentation);
    TorsionSplit out;
    out.free_rank = static_cast<int>(presentation.rows()) - static_cast<int>(s.invariants.size());
    for (const auto& d : s.invariants)
        if (d.degree() > 0) out.torsion.push_back(d);
    return out;
}

}  // namespace lcalg
