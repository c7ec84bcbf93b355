#include "lefsurf/pencil.hpp"

#include <algorithm>

#include <json.hpp>

namespace lefsurf {

namespace {

// t -> 1/s model at infinity: a_inf = s^(4m) a(1/s), b_inf = s^(6m) b(1/s)
// with minimal m, then reduced by (s^4, s^6) while possible.
void infinity_model(const QPoly& a, const QPoly& b, QPoly& a_inf, QPoly& b_inf)
{
    long m = 0;
    while (4 * m < a.degree() || 6 * m < b.degree()) ++m;
    // s^(4m) a(1/s): coefficient of s^(4m - i) is a_i
    std::vector<Rat> ac(static_cast<std::size_t>(4 * m) + 1, Rat(0));
    for (long i = 0; i <= a.degree(); ++i)
        ac[static_cast<std::size_t>(4 * m - i)] = a[static_cast<std::size_t>(i)];
    std::vector<Rat> bc(static_cast<std::size_t>(6 * m) + 1, Rat(0));
    for (long i = 0; i <= b.degree(); ++i)
        bc[static_cast<std::size_t>(6 * m - i)] = b[static_cast<std::size_t>(i)];
    a_inf = QPoly(std::move(ac));
    b_inf = QPoly(std::move(bc));
    auto ord = [](const QPoly& f) {
        if (f.zero()) return std::numeric_limits<long>::max() / 4;
        long v = 0;
        while (sgn(f[static_cast<std::size_t>(v)]) == 0) ++v;
        return v;
    };
    while ((a_inf.zero() || ord(a_inf) >= 4) && (b_inf.zero() || ord(b_inf) >= 6) &&
           !(a_inf.zero() && b_inf.zero())) {
        // divide a by s^4 and b by s^6
        auto shift_down = [](const QPoly& f, long k) {
            if (f.zero()) return f;
            std::vector<Rat> v;
            for (long i = k; i <= f.degree(); ++i)
                v.push_back(f[static_cast<std::size_t>(i)]);
            return QPoly(std::move(v));
        };
        a_inf = shift_down(a_inf, 4);
        b_inf = shift_down(b_inf, 6);
    }
}

long order_at_zero(const QPoly& f)
{
    if (f.zero()) fail(ErrorCode::InternalError, "order of zero polynomial");
    long v = 0;
    while (sgn(f[static_cast<std::size_t>(v)]) == 0) ++v;
    return v;
}

} // namespace

PencilFibration critical_locus(const QPoly& a, const QPoly& b, bool strict)
{
    PencilFibration out;
    out.a = a;
    out.b = b;
    QPoly a3 = a * a * a;
    QPoly b2 = b * b;
    out.delta = (a3 * Rat(4) + b2 * Rat(27)) * Rat(-16);
    if (out.delta.zero())
        fail(ErrorCode::NotLefschetz, "discriminant vanishes identically");
    out.delta_radical = out.delta.degree() >= 1 ? squarefree_part(out.delta)
                                                : QPoly(Rat(1));

    // affine critical points
    std::vector<CriticalPoint> pts;
    if (out.delta_radical.degree() >= 1) {
        auto roots = roots_with_rational_detection(out.delta_radical);
        for (auto& z : roots) {
            CriticalPoint cp;
            cp.z = z;
            cp.delta_order = root_multiplicity(out.delta, z);
            cp.kind = vanishes_at(a, z) ? FibreKind::cusp : FibreKind::node;
            cp.lefschetz = cp.delta_order == 1 && cp.kind == FibreKind::node;
            pts.push_back(std::move(cp));
        }
        std::sort(pts.begin(), pts.end(), [](const CriticalPoint& x, const CriticalPoint& y) {
            return algebraic_order_before(x.z, y.z);
        });
    }

    // the fibre at infinity
    infinity_model(a, b, out.a_inf, out.b_inf);
    {
        QPoly ai3 = out.a_inf * out.a_inf * out.a_inf;
        QPoly bi2 = out.b_inf * out.b_inf;
        QPoly delta_inf = (ai3 * Rat(4) + bi2 * Rat(27)) * Rat(-16);
        if (delta_inf.zero())
            fail(ErrorCode::NotLefschetz, "degenerate model at infinity");
        long ord_inf = order_at_zero(delta_inf);
        if (ord_inf > 0) {
            CriticalPoint cp;
            cp.at_infinity = true;
            cp.delta_order = static_cast<int>(ord_inf);
            bool a_vanishes = sgn(out.a_inf[0]) == 0;
            cp.kind = a_vanishes ? FibreKind::cusp : FibreKind::node;
            cp.lefschetz = cp.delta_order == 1 && cp.kind == FibreKind::node;
            pts.push_back(std::move(cp));
            out.smooth_at_infinity = false;
        }
    }

    out.critical = std::move(pts);
    out.r = static_cast<long>(out.critical.size());
    out.lefschetz = true;
    for (auto& cp : out.critical) out.lefschetz = out.lefschetz && cp.lefschetz;

    if (strict) {
        for (auto& cp : out.critical) {
            if (cp.kind == FibreKind::cusp)
                fail(ErrorCode::NotLefschetz,
                     std::string("cuspidal fibre at ") +
                         (cp.at_infinity ? "infinity" : cp.z.str()));
            if (cp.delta_order != 1)
                fail(ErrorCode::NotLefschetz,
                     std::string("multiple discriminant root at ") +
                         (cp.at_infinity ? "infinity" : cp.z.str()));
        }
    } else {
        // affine cusps are fatal even in the tolerant mode (the fibre-level
        // machinery requires nodal fibres); an additive fibre at infinity is
        // recorded as a flag, being a compactification artifact
        for (auto& cp : out.critical)
            if (cp.kind == FibreKind::cusp && !cp.at_infinity)
                fail(ErrorCode::NotLefschetz, "cuspidal fibre at " + cp.z.str());
    }
    return out;
}

namespace {

// Extract Weierstrass data from a cubic pencil f + t g whose members all
// have a flex at [0:1:0] with the line at infinity as tangent, i.e. f in
// long Weierstrass shape (unit y^2 coefficient) and g without y^2:
//   y^2 + A1(t) x y + A3(t) y = x^3 + A2(t) x^2 + A4(t) x + A6(t)
// with the Ai linear in t.  Every member is then an honest plane cubic,
// and a generic pencil of this shape has 12 nodal members.
PencilFibration cubic_pencil_to_weierstrass(const MPoly& f, const MPoly& g)
{
    std::vector<std::string> vars = f.vars();
    auto coeff_y = [&](const MPoly& h, unsigned j) {
        MPoly out(vars);
        std::size_t yi = 0;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == "y") yi = i;
        for (auto& [e, c] : h.terms()) {
            if (e[yi] != j) continue;
            MPoly::Exp e2 = e;
            e2[yi] = 0;
            MPoly term = MPoly::constant(vars, c);
            for (std::size_t i = 0; i < vars.size(); ++i)
                for (unsigned k = 0; k < e2[i]; ++k)
                    term = term * MPoly::variable(vars, vars[i]);
            out = out + term;
        }
        return out;
    };

    if (f.degree_in("y") != 2 || g.degree_in("y") > 1)
        fail(ErrorCode::Unsupported,
             "cubic pencil must share a flex at infinity: f with y^2, g without");
    if (f.total_degree() > 3 || g.total_degree() > 3)
        fail(ErrorCode::Unsupported, "pencil members must be cubics");
    MPoly fy2 = coeff_y(f, 2);
    if (fy2.total_degree() != 0)
        fail(ErrorCode::Unsupported, "y^2 coefficient must be constant");
    Rat scale = Rat(1) / fy2.terms().begin()->second;

    MPoly t = MPoly::variable(vars, "t");
    // member = y^2 + L(x,t) y - C(x,t) after scaling f
    MPoly Lpart = (coeff_y(f, 1) * scale) + t * coeff_y(g, 1);
    MPoly Cpart = -((coeff_y(f, 0) * scale) + t * coeff_y(g, 0));
    if (Lpart.degree_in("x") > 1)
        fail(ErrorCode::Unsupported, "y-linear coefficient must be linear in x");

    // long form data: y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
    QQPoly L = Lpart.zero() ? QQPoly() : Lpart.to_bivariate("x", "t");
    QQPoly C = Cpart.to_bivariate("x", "t");
    if (C.degree() != 3) fail(ErrorCode::Unsupported, "pencil member not cubic in x");
    QPoly a1 = L[1], a3 = L[0];
    QPoly lead = C[3];
    if (lead.degree() != 0)
        fail(ErrorCode::Unsupported, "x^3 coefficient must be constant");
    Rat c3 = lead[0];
    // normalise x^3 coefficient to 1 by (x, y) -> (c3 x', c3 y') ... using
    // the standard (u^2, u^3) change with u^... : dividing the equation by
    // c3^2 and rescaling keeps a1, a3 adjusted by powers of c3.
    // Substitute x = X/c3, y = Y/c3, multiply by c3^2:
    //   Y^2 + a1 c3^0 ... — work it out: (Y/c3)^2*c3^2 = Y^2, the xy term
    //   a1 (X/c3)(Y/c3) c3^2 = a1 X Y, y term a3 (Y/c3) c3^2 = a3 c3 Y,
    //   x^3 term c3 (X/c3)^3 c3^2 = X^3, etc.
    QPoly A1 = a1;
    QPoly A3 = a3 * c3;
    QPoly A2 = C[2];
    QPoly A4 = C[1] * c3;
    QPoly A6 = C[0] * c3 * c3;
    // long -> short: b2 = a1^2 + 4a2, b4 = 2a4 + a1 a3, b6 = a3^2 + 4a6,
    // c4 = b2^2 - 24 b4, c6 = -b2^3 + 36 b2 b4 - 216 b6,
    // y^2 = x^3 - 27 c4 x - 54 c6
    QPoly b2 = A1 * A1 + A2 * Rat(4);
    QPoly b4 = A4 * Rat(2) + A1 * A3;
    QPoly b6 = A3 * A3 + A6 * Rat(4);
    QPoly c4 = b2 * b2 - b4 * Rat(24);
    QPoly c6 = -(b2 * b2 * b2) + b2 * b4 * Rat(36) - b6 * Rat(216);
    QPoly A = c4 * Rat(-27);
    QPoly B = c6 * Rat(-54);
    return critical_locus(A, B, false);
}

} // namespace

PencilFibration make_pencil(const SurfaceSpec& spec)
{
    switch (spec.kind) {
        case SurfaceKind::weierstrass:
            return critical_locus(spec.a, spec.b, false);
        case SurfaceKind::cubic_pencil:
            return cubic_pencil_to_weierstrass(spec.f, spec.g);
        case SurfaceKind::projective:
            fail(ErrorCode::Unsupported,
                 "general projective surfaces are supported only by the counting oracle");
    }
    fail(ErrorCode::InternalError, "unreachable");
}

GenusBounds genus_and_bounds(long fibre_degree, long D, long N, long r_observed)
{
    GenusBounds gb{0, 0, 0, true, true};
    gb.genus = static_cast<int>((fibre_degree - 1) * (fibre_degree - 2) / 2);
    Int Dz(static_cast<long>(D));
    Int rb = 1;
    for (long i = 0; i <= N; ++i) rb *= Dz;
    gb.r_bound = rb;
    gb.g_bound = Dz * Dz - 2 * Dz + 1;
    gb.r_ok = Int(r_observed) <= gb.r_bound;
    gb.g_ok = Int(gb.genus) <= gb.g_bound;
    return gb;
}

BlowupResult blowup_at_point(const SurfaceSpec& spec, const std::vector<Rat>& point)
{
    if (spec.kind != SurfaceKind::projective)
        fail(ErrorCode::Unsupported, "blowup expects a projective surface");
    int N = spec.ambient_n;
    if (static_cast<int>(point.size()) != N + 1)
        fail(ErrorCode::UsageError, "point has wrong length");

    // P must lie on S
    for (auto& F : spec.equations)
        if (sgn(F.eval_rat(point)) != 0)
            fail(ErrorCode::PointNotOnSurface, "equations do not vanish at the point");

    // linear change moving P to [0:...:0:1]: swap a nonzero coordinate to
    // position N, then shear x_i -> x_i + (P_i/P_N) x_N
    int pivot = -1;
    for (int i = N; i >= 0; --i)
        if (sgn(point[static_cast<std::size_t>(i)]) != 0) {
            pivot = i;
            break;
        }
    if (pivot < 0) fail(ErrorCode::UsageError, "zero point is not projective");

    std::vector<std::string> xv;
    for (int i = 0; i <= N; ++i) xv.push_back("x" + std::to_string(i));
    std::vector<MPoly> images;
    std::vector<Rat> p2 = point;
    std::swap(p2[static_cast<std::size_t>(pivot)], p2[static_cast<std::size_t>(N)]);
    for (int i = 0; i <= N; ++i) {
        int src = i;
        if (i == pivot) src = N;
        else if (i == N) src = pivot;
        MPoly img = MPoly::variable(xv, "x" + std::to_string(src));
        images.push_back(img);
    }
    // now the point is p2 with p2[N] != 0; shear so it becomes e_N
    std::vector<MPoly> shear;
    for (int i = 0; i <= N; ++i) {
        MPoly img = MPoly::variable(xv, "x" + std::to_string(i));
        if (i < N) {
            Rat c = p2[static_cast<std::size_t>(i)] / p2[static_cast<std::size_t>(N)];
            if (sgn(c) != 0)
                img = img + MPoly::variable(xv, "x" + std::to_string(N)) * c;
        }
        shear.push_back(img);
    }

    std::vector<std::string> all = xv;
    for (int j = 0; j < N; ++j) all.push_back("y" + std::to_string(j));

    BlowupResult out;
    out.n = N;
    out.vars = all;
    out.center = point;
    for (auto& F : spec.equations) {
        MPoly moved = F.substitute(images).substitute(shear);
        // re-embed into the combined variable list
        MPoly lifted(all);
        for (auto& [e, c] : moved.terms()) {
            MPoly term = MPoly::constant(all, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k)
                    term = term * MPoly::variable(all, xv[i]);
            lifted = lifted + term;
        }
        out.equations.push_back(lifted);
    }
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            MPoly m = MPoly::variable(all, "x" + std::to_string(i)) *
                          MPoly::variable(all, "y" + std::to_string(j)) -
                      MPoly::variable(all, "x" + std::to_string(j)) *
                          MPoly::variable(all, "y" + std::to_string(i));
            out.minors.push_back(m);
        }
    return out;
}

std::vector<Rat> blowdown(const BlowupResult& bl, const std::vector<Rat>& xy_point)
{
    if (static_cast<int>(xy_point.size()) != 2 * bl.n + 1)
        fail(ErrorCode::UsageError, "product point has wrong length");
    return std::vector<Rat>(xy_point.begin(), xy_point.begin() + bl.n + 1);
}

bool is_isotrivial(const QPoly& a, const QPoly& b)
{
    // j = c a^3 / delta constant <=> a^3 * delta(t0) = delta * a^3(t0) for
    // a generic t0 (checked as polynomials)
    QPoly a3 = a * a * a;
    QPoly b2 = b * b;
    QPoly delta = a3 * Rat(4) + b2 * Rat(27);
    if (delta.zero()) return true;
    // proportionality of a3 and delta as polynomials
    if (a3.zero()) return true; // j identically 0
    if (a3.degree() != delta.degree()) return false;
    QPoly cross = a3 * delta.lead() - delta * a3.lead();
    return cross.zero();
}

SurfaceSpec surface_from_json_text(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    SurfaceSpec s;
    std::string kind = j.at("kind").get<std::string>();
    if (j.contains("field")) {
        std::string f = j["field"].get<std::string>();
        if (f == "QQ") {
            s.field.finite = false;
        } else if (f == "Fq") {
            s.field.finite = true;
            s.field.p = j.at("p").get<std::uint64_t>();
            s.field.k = j.contains("k") ? j["k"].get<unsigned>() : 1;
        } else {
            fail(ErrorCode::UsageError, "field must be QQ or Fq");
        }
    }
    auto uni = [&](const std::string& key) {
        MPoly p = parse_poly(j.at(key).get<std::string>(), standard_vars());
        return p.to_univariate("t");
    };
    if (kind == "weierstrass") {
        s.kind = SurfaceKind::weierstrass;
        s.a = uni("a");
        s.b = uni("b");
    } else if (kind == "cubic_pencil") {
        s.kind = SurfaceKind::cubic_pencil;
        s.f = parse_poly(j.at("f").get<std::string>(), standard_vars());
        s.g = parse_poly(j.at("g").get<std::string>(), standard_vars());
    } else if (kind == "projective") {
        s.kind = SurfaceKind::projective;
        s.ambient_n = j.at("N").get<int>();
        std::vector<std::string> vars;
        for (int i = 0; i <= s.ambient_n; ++i) vars.push_back("x" + std::to_string(i));
        for (auto& eq : j.at("equations")) {
            MPoly p = parse_poly(eq.get<std::string>(), vars);
            if (!p.is_homogeneous())
                fail(ErrorCode::UsageError, "projective equations must be homogeneous");
            s.equations.push_back(std::move(p));
        }
    } else {
        fail(ErrorCode::UsageError, "kind must be weierstrass|cubic_pencil|projective");
    }
    return s;
}

} // namespace lefsurf
