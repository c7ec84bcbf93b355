#ifndef LEFSURF_MPOLY_HPP
#define LEFSURF_MPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "lefsurf/poly.hpp"

namespace lefsurf {

// Sparse multivariate polynomial over Q with named variables.  Monomials
// keyed by exponent vectors over the variable list (shared by reference
// semantics: operations require identical variable lists).
class MPoly {
public:
    using Exp = std::vector<unsigned>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const Rat& c)
    {
        MPoly p(std::move(vars));
        if (sgn(c) != 0) p.terms_[Exp(p.vars_.size(), 0)] = c;
        return p;
    }

    static MPoly variable(std::vector<std::string> vars, const std::string& name)
    {
        MPoly p(std::move(vars));
        Exp e(p.vars_.size(), 0);
        bool found = false;
        for (std::size_t i = 0; i < p.vars_.size(); ++i)
            if (p.vars_[i] == name) {
                e[i] = 1;
                found = true;
                break;
            }
        if (!found) fail(ErrorCode::UsageError, "unknown variable " + name);
        p.terms_[e] = Rat(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exp, Rat>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }

    MPoly operator-() const
    {
        MPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    MPoly operator+(const MPoly& o) const
    {
        check_vars(o);
        MPoly r(*this);
        for (auto& [e, c] : o.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = c;
            } else {
                it->second += c;
                if (sgn(it->second) == 0) r.terms_.erase(it);
            }
        }
        return r;
    }

    MPoly operator-(const MPoly& o) const { return *this + (-o); }

    MPoly operator*(const MPoly& o) const
    {
        check_vars(o);
        MPoly r(vars_);
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_) {
                Exp e(e1.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                Rat& slot = r.terms_[e];
                slot += c1 * c2;
                if (sgn(slot) == 0) r.terms_.erase(e);
            }
        return r;
    }

    MPoly operator*(const Rat& s) const
    {
        if (sgn(s) == 0) return MPoly(vars_);
        MPoly r(*this);
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }

    MPoly pow(unsigned k) const
    {
        MPoly acc = constant(vars_, Rat(1));
        MPoly base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    bool operator==(const MPoly& o) const
    {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

    long total_degree() const
    {
        long d = -1;
        for (auto& [e, c] : terms_) {
            long s = 0;
            for (auto x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    long degree_in(const std::string& var) const
    {
        std::size_t idx = var_index(var);
        long d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[idx]));
        return d;
    }

    bool is_homogeneous() const
    {
        long d = -1;
        for (auto& [e, c] : terms_) {
            long s = 0;
            for (auto x : e) s += x;
            if (d == -1) d = s;
            else if (d != s) return false;
        }
        return true;
    }

    // full evaluation over any commutative ring via an embedding of Q
    template <class S, class Embed>
    S eval_full(const std::vector<S>& point, Embed&& embed) const
    {
        S acc{};
        for (auto& [e, c] : terms_) {
            S term = embed(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) term = term * point[i];
            acc = acc + term;
        }
        return acc;
    }

    Rat eval_rat(const std::vector<Rat>& point) const
    {
        return eval_full(point, [](const Rat& c) { return c; });
    }

    // substitute each variable by the given polynomial (same variable set)
    MPoly substitute(const std::vector<MPoly>& images) const
    {
        if (images.size() != vars_.size())
            fail(ErrorCode::InternalError, "substitute arity mismatch");
        MPoly acc(vars_);
        for (auto& [e, c] : terms_) {
            MPoly term = constant(vars_, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) term = term * images[i].pow(e[i]);
            acc = acc + term;
        }
        return acc;
    }

    // univariate extraction: polynomial must involve only `var`
    QPoly to_univariate(const std::string& var) const
    {
        std::size_t idx = var_index(var);
        std::vector<Rat> c(static_cast<std::size_t>(degree_in(var)) + 1, Rat(0));
        for (auto& [e, coef] : terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != idx && e[i] > 0)
                    fail(ErrorCode::UsageError, "polynomial is not univariate in " + var);
            c[e[idx]] = coef;
        }
        return QPoly(std::move(c));
    }

    // bivariate extraction: outer variable `xo`, inner variable `xi`
    QQPoly to_bivariate(const std::string& xo, const std::string& xi) const
    {
        std::size_t ox = var_index(xo), ix = var_index(xi);
        std::vector<std::vector<Rat>> grid(
            static_cast<std::size_t>(degree_in(xo)) + 1,
            std::vector<Rat>(static_cast<std::size_t>(degree_in(xi)) + 1, Rat(0)));
        for (auto& [e, coef] : terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != ox && i != ix && e[i] > 0)
                    fail(ErrorCode::UsageError, "polynomial involves extra variables");
            grid[e[ox]][e[ix]] = coef;
        }
        std::vector<QPoly> outer;
        for (auto& row : grid) outer.emplace_back(std::move(row));
        return QQPoly(std::move(outer));
    }

    std::string str() const;

private:
    std::size_t var_index(const std::string& var) const
    {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == var) return i;
        fail(ErrorCode::UsageError, "unknown variable " + var);
    }

    void check_vars(const MPoly& o) const
    {
        if (vars_ != o.vars_) fail(ErrorCode::InternalError, "variable list mismatch");
    }

    std::vector<std::string> vars_;
    std::map<Exp, Rat> terms_;
};

inline std::string MPoly::str() const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += sgn(c) > 0 ? " + " : " - ";
        else if (sgn(c) < 0) s += "-";
        Rat a = abs(c);
        bool all_zero = true;
        for (auto x : e) all_zero = all_zero && x == 0;
        bool unit = (a == 1) && !all_zero;
        if (!unit) s += a.get_str();
        bool first = unit;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first || !unit) s += first && unit ? "" : "*";
            s += vars_[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
            first = false;
        }
    }
    return s;
}

// Parse an expression over the given variables: integer/rational literals,
// + - * ^ and parentheses; whitespace-insensitive.
MPoly parse_poly(const std::string& text, std::vector<std::string> vars);

// The standard variable lists accepted by the tools.
std::vector<std::string> standard_vars(int projective_n = -1);

} // namespace lefsurf

#endif
