#include "lefsurf/finite_field.hpp"

#include <algorithm>

namespace lefsurf {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 mod p");
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

void trim_u64(std::vector<std::uint64_t>& v)
{
    while (!v.empty() && v.back() == 0) v.pop_back();
}

} // namespace

// ----------------------------------------------------------------- FF

FF::FF(std::uint64_t p, unsigned k, std::vector<std::uint64_t> mod)
    : p_(p), k_(k), mod_(std::move(mod))
{
    q_ = 1;
    for (unsigned i = 0; i < k_; ++i) q_ *= static_cast<unsigned long>(p_);
}

FFPtr FF::prime_field(std::uint64_t p)
{
    if (p < 2 || p >= (1ULL << 31))
        fail(ErrorCode::Unsupported, "characteristic out of range");
    std::vector<std::uint64_t> mod{0, 1}; // w
    return FFPtr(new FF(p, 1, std::move(mod)));
}

FFPtr FF::extension(std::uint64_t p, unsigned k)
{
    if (k == 0) fail(ErrorCode::InternalError, "extension degree 0");
    if (k == 1) return prime_field(p);
    if (p < 2 || p >= (1ULL << 31))
        fail(ErrorCode::Unsupported, "characteristic out of range");
    // odometer over the lower coefficients (c_0, ..., c_{k-1})
    FFPtr base = prime_field(p);
    std::vector<std::uint64_t> lower(k, 0);
    while (true) {
        std::vector<std::uint64_t> cand(lower);
        cand.push_back(1); // monic
        if (base->is_irreducible(cand)) return FFPtr(new FF(p, k, std::move(cand)));
        unsigned i = 0;
        while (i < k && ++lower[i] == p) lower[i++] = 0;
        if (i == k) fail(ErrorCode::InternalError, "no irreducible found");
    }
}

FFPtr FF::with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus)
{
    trim_u64(modulus);
    if (modulus.size() < 2 || modulus.back() != 1)
        fail(ErrorCode::InternalError, "modulus must be monic of degree >= 1");
    unsigned k = static_cast<unsigned>(modulus.size() - 1);
    return FFPtr(new FF(p, k, std::move(modulus)));
}

std::uint64_t FF::add(std::uint64_t a, std::uint64_t b) const
{
    std::uint64_t s = a + b;
    if (s >= p_) s -= p_;
    return s;
}

std::uint64_t FF::sub(std::uint64_t a, std::uint64_t b) const
{
    return a >= b ? a - b : a + p_ - b;
}

std::uint64_t FF::mul(std::uint64_t a, std::uint64_t b) const
{
    return mulmod_u64(a, b, p_);
}

std::uint64_t FF::inv_mod_p(std::uint64_t a) const { return invmod_u64(a, p_); }

FFElem FF::zero() const
{
    return FFElem(shared_from_this(), std::vector<std::uint64_t>(k_, 0));
}

FFElem FF::onev() const
{
    std::vector<std::uint64_t> c(k_, 0);
    c[0] = 1 % p_;
    return FFElem(shared_from_this(), std::move(c));
}

FFElem FF::from_int(const Int& n) const
{
    Int r = n % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    std::vector<std::uint64_t> c(k_, 0);
    c[0] = r.get_ui();
    return FFElem(shared_from_this(), std::move(c));
}

FFElem FF::from_rat(const Rat& r) const
{
    FFElem num = from_int(Int(r.get_num()));
    FFElem den = from_int(Int(r.get_den()));
    if (den.is_zero()) fail(ErrorCode::BadReduction, "denominator divisible by p");
    return num * den.inverse();
}

FFElem FF::gen() const
{
    std::vector<std::uint64_t> c(k_, 0);
    if (k_ >= 2) c[1] = 1;
    else c[0] = 1 % p_;
    return FFElem(shared_from_this(), std::move(c));
}

FFElem FF::from_coeffs(std::vector<std::uint64_t> c) const
{
    c.resize(k_, 0);
    for (auto& x : c) x %= p_;
    return FFElem(shared_from_this(), std::move(c));
}

FFElem FF::element(const Int& n) const
{
    Int m = n;
    std::vector<std::uint64_t> c(k_, 0);
    for (unsigned i = 0; i < k_ && m != 0; ++i) {
        Int digit = m % static_cast<unsigned long>(p_);
        if (digit < 0) digit += static_cast<unsigned long>(p_);
        c[i] = digit.get_ui();
        m = (m - digit) / static_cast<unsigned long>(p_);
    }
    return FFElem(shared_from_this(), std::move(c));
}

std::vector<std::uint64_t> FF::poly_mulmod(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) const
{
    std::vector<unsigned __int128> acc(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j)
            acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
    std::vector<std::uint64_t> r(2 * k_);
    for (unsigned i = 0; i < 2 * k_; ++i)
        r[i] = static_cast<std::uint64_t>(acc[i] % p_);
    // reduce modulo the monic modulus
    for (unsigned i = 2 * k_; i-- > k_;) {
        std::uint64_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (unsigned j = 0; j < k_; ++j)
            r[i - k_ + j] = sub(r[i - k_ + j], mul(c, mod_[j]));
    }
    r.resize(k_);
    return r;
}

bool FF::is_irreducible(const std::vector<std::uint64_t>& monic) const
{
    // Rabin test over F_p: x^(p^k) == x mod f and gcd(x^(p^(k/t)) - x, f) = 1
    // for every prime t | k.
    FFPtr base = k_ == 1 ? shared_from_this() : prime_field(p_);
    unsigned deg = static_cast<unsigned>(monic.size() - 1);
    std::vector<FFElem> fc;
    for (auto c : monic) fc.push_back(base->from_coeffs({c}));
    FPoly f(fc);
    auto xpow = [&](unsigned e_deg) {
        Int e = 1;
        for (unsigned i = 0; i < e_deg; ++i) e *= static_cast<unsigned long>(p_);
        return fpoly_powmod_x(e, f);
    };
    FPoly x = FPoly::monomial(base->onev(), 1);
    FPoly top = xpow(deg);
    if (!((top - x) % f).zero()) return false;
    std::vector<unsigned> primes;
    unsigned m = deg;
    for (unsigned t = 2; t * t <= m; ++t)
        while (m % t == 0) {
            primes.push_back(t);
            m /= t;
        }
    if (m > 1) primes.push_back(m);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (unsigned t : primes) {
        FPoly g = xpow(deg / t) - x;
        if (g.zero()) return false;
        FPoly d = poly_gcd(f, g);
        if (d.degree() != 0) return false;
    }
    return true;
}

// -------------------------------------------------------------- FFElem

FFElem::FFElem(FFPtr field, std::vector<std::uint64_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs))
{
    c_.resize(field_->k(), 0);
    for (auto& x : c_) x %= field_->p();
}

bool FFElem::is_zero() const
{
    for (auto x : c_)
        if (x != 0) return false;
    return true;
}

bool FFElem::is_one() const
{
    if (!field_) return false;
    if (c_.empty() || c_[0] != 1 % field_->p()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

FFElem FFElem::one() const
{
    if (!field_) fail(ErrorCode::InternalError, "one() on unattached element");
    return field_->onev();
}

FFElem FFElem::operator-() const
{
    if (!field_) return FFElem();
    FFElem r(*this);
    for (auto& x : r.c_) x = x == 0 ? 0 : field_->p() - x;
    return r;
}

FFElem FFElem::operator+(const FFElem& o) const
{
    if (!field_) return o;
    if (!o.field_) return *this;
    FFElem r(*this);
    for (unsigned i = 0; i < field_->k(); ++i) r.c_[i] = field_->add(c_[i], o.c_[i]);
    return r;
}

FFElem FFElem::operator-(const FFElem& o) const
{
    if (!o.field_) return *this;
    if (!field_) return -o;
    FFElem r(*this);
    for (unsigned i = 0; i < field_->k(); ++i) r.c_[i] = field_->sub(c_[i], o.c_[i]);
    return r;
}

FFElem FFElem::operator*(const FFElem& o) const
{
    if (!field_ || !o.field_) return FFElem(); // zero
    return FFElem(field_, field_->poly_mulmod(c_, o.c_));
}

bool FFElem::operator==(const FFElem& o) const
{
    if (!field_ && !o.field_) return true;
    if (!field_) return o.is_zero();
    if (!o.field_) return is_zero();
    return c_ == o.c_;
}

FFElem FFElem::inverse() const
{
    if (!field_ || is_zero()) fail(ErrorCode::DivisionByZero, "inverse of 0 in F_q");
    if (field_->k() == 1)
        return FFElem(field_, {field_->inv_mod_p(c_[0])});
    // extended Euclid in F_p[w] against the modulus
    const auto p = field_->p();
    auto polymod = [&](std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b,
                       std::vector<std::uint64_t>& q) {
        q.assign(a.size(), 0);
        trim_u64(a);
        std::vector<std::uint64_t> bb(b);
        trim_u64(bb);
        std::uint64_t inv_lb = invmod_u64(bb.back(), p);
        while (a.size() >= bb.size() && !a.empty()) {
            std::uint64_t coef = mulmod_u64(a.back(), inv_lb, p);
            std::size_t shift = a.size() - bb.size();
            if (shift < q.size()) q[shift] = (q[shift] + coef) % p;
            for (std::size_t i = 0; i < bb.size(); ++i) {
                std::uint64_t t = mulmod_u64(coef, bb[i], p);
                a[i + shift] = a[i + shift] >= t ? a[i + shift] - t : a[i + shift] + p - t;
            }
            trim_u64(a);
        }
        return a;
    };
    std::vector<std::uint64_t> r0 = field_->modulus(), r1 = c_;
    trim_u64(r1);
    std::vector<std::uint64_t> t0{}, t1{1};
    while (!r1.empty()) {
        std::vector<std::uint64_t> q;
        std::vector<std::uint64_t> r2 = polymod(r0, r1, q);
        // t2 = t0 - q*t1 mod p
        std::vector<std::uint64_t> t2(std::max(t0.size(), q.size() + t1.size()), 0);
        for (std::size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < t1.size(); ++j) {
                std::uint64_t m = mulmod_u64(q[i], t1[j], p);
                t2[i + j] = t2[i + j] >= m ? t2[i + j] - m : t2[i + j] + p - m;
            }
        trim_u64(t2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) fail(ErrorCode::InternalError, "modulus not irreducible");
    std::uint64_t scale = invmod_u64(r0[0], p);
    for (auto& x : t0) x = mulmod_u64(x, scale, p);
    return FFElem(field_, std::move(t0));
}

FFElem FFElem::pow(const Int& e) const
{
    if (!field_) {
        if (e == 0) fail(ErrorCode::InternalError, "0^0 of unattached element");
        return FFElem();
    }
    Int exp = e;
    FFElem base = *this;
    if (exp < 0) {
        base = base.inverse();
        exp = -exp;
    }
    FFElem acc = field_->onev();
    std::size_t nbits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (exp == 0) return acc;
    for (std::size_t i = nbits; i-- > 0;) {
        acc = acc * acc;
        if (mpz_tstbit(exp.get_mpz_t(), i)) acc = acc * base;
    }
    return acc;
}

bool FFElem::is_square() const
{
    if (!field_ || is_zero()) return true;
    if (field_->p() == 2) return true;
    Int e = (field_->q() - 1) / 2;
    return pow(e).is_one();
}

FFElem FFElem::sqrt() const
{
    if (!field_) return FFElem();
    if (is_zero()) return *this;
    if (field_->p() == 2) fail(ErrorCode::Unsupported, "sqrt in characteristic 2");
    if (!is_square()) fail(ErrorCode::NotASquare, "sqrt of a non-square");
    const Int q = field_->q();
    FFElem r;
    if (q % 4 == 3) {
        r = pow((q + 1) / 4);
    } else {
        // Tonelli-Shanks with the first non-square in enumeration order
        Int s = q - 1;
        unsigned long e = 0;
        while (s % 2 == 0) {
            s /= 2;
            ++e;
        }
        FFElem n;
        for (Int idx = 2;; ++idx) {
            n = field_->element(idx);
            if (!n.is_zero() && !n.is_square()) break;
        }
        FFElem g = n.pow(s);
        FFElem x = pow((s + 1) / 2);
        FFElem b = pow(s);
        unsigned long rr = e;
        while (!b.is_one()) {
            unsigned long m = 0;
            FFElem t = b;
            while (!t.is_one()) {
                t = t * t;
                ++m;
            }
            FFElem gs = g;
            for (unsigned long i = 0; i + m + 1 < rr; ++i) gs = gs * gs;
            x = x * gs;
            g = gs * gs;
            b = b * g;
            rr = m;
        }
        r = x;
    }
    FFElem neg = -r;
    return r.lex_less(neg) ? r : neg;
}

bool FFElem::lex_less(const FFElem& o) const
{
    return c_ < o.c_;
}

std::string FFElem::str() const
{
    if (!field_) return "0";
    if (field_->k() == 1) return std::to_string(c_[0]);
    std::string s = "[";
    for (unsigned i = 0; i < field_->k(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s + "]";
}

// --------------------------------------------------------------- FPoly

FPoly fpoly_from_qpoly(const QPoly& f, const FFPtr& field)
{
    std::vector<FFElem> c;
    for (long i = 0; i <= f.degree(); ++i)
        c.push_back(field->from_rat(f[static_cast<std::size_t>(i)]));
    return FPoly(std::move(c));
}

FPoly fpoly_powmod(const FPoly& base, const Int& e, const FPoly& f)
{
    if (e < 0) fail(ErrorCode::InternalError, "negative exponent");
    FPoly acc(base.lead().one());
    FPoly b = base % f;
    std::size_t nbits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = nbits; i-- > 0;) {
        acc = (acc * acc) % f;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * b) % f;
    }
    return acc;
}

FPoly fpoly_powmod_x(const Int& e, const FPoly& f)
{
    FPoly x = FPoly::monomial(f.lead().one(), 1);
    return fpoly_powmod(x, e, f);
}

} // namespace lefsurf
