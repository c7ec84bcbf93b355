#ifndef LEFSURF_PENCIL_HPP
#define LEFSURF_PENCIL_HPP

#include <optional>
#include <string>
#include <vector>

#include "lefsurf/algebraic.hpp"
#include "lefsurf/mpoly.hpp"

namespace lefsurf {

struct FieldDesc {
    bool finite = false;   // false: Q
    std::uint64_t p = 0;
    unsigned k = 1;
};

enum class SurfaceKind { weierstrass, cubic_pencil, projective };

struct SurfaceSpec {
    SurfaceKind kind = SurfaceKind::weierstrass;
    FieldDesc field;
    // weierstrass: y^2 = x^3 + a(t) x + b(t)
    QPoly a, b;
    // cubic_pencil: members f + t*g in variables x, y (affine cubics)
    MPoly f, g;
    // projective: equations in x0..xN
    int ambient_n = 0;
    std::vector<MPoly> equations;
};

// Parse/serialise the surface description file (JSON, one object).
SurfaceSpec surface_from_json_text(const std::string& text);

enum class FibreKind { node, cusp };

struct CriticalPoint {
    bool at_infinity = false;
    AlgebraicNumber z;      // meaningful when !at_infinity
    int delta_order = 0;    // ord of the (minimal) discriminant
    FibreKind kind = FibreKind::node;
    bool lefschetz = false; // delta_order == 1 (hence a node)
};

struct PencilFibration {
    QPoly a, b;          // generic fibre y^2 = x^3 + a(t)x + b(t)
    QPoly delta;         // -16(4a^3 + 27b^2)
    QPoly delta_radical; // squarefree part, monic
    std::vector<CriticalPoint> critical; // ordered: affine by (Re, Im), infinity last
    long r = 0;          // #Z
    int genus = 1;
    bool lefschetz = true;   // all critical points Lefschetz
    bool smooth_at_infinity = true;
    // minimal model at infinity (t = 1/s cleared): y^2 = x^3 + a_inf(s) x + b_inf(s)
    QPoly a_inf, b_inf;
};

// Critical locus of the Weierstrass pencil, with per-point nodal
// certificates.  strict = true raises NotLefschetz on any multiple
// discriminant root or cuspidal fibre (reporting the offending point);
// strict = false records the defects in the certificates.
PencilFibration critical_locus(const QPoly& a, const QPoly& b, bool strict);

// Build a fibration from a surface description.  Cubic pencils are
// normalised to Weierstrass form when the members depend on y only
// through y^2 (completing the square in y handles a linear term);
// general projective input is Unsupported here (the counting oracle
// accepts it directly).  Cuspidal degenerations raise NotLefschetz.
PencilFibration make_pencil(const SurfaceSpec& spec);

struct GenusBounds {
    int genus;
    Int r_bound;   // D^(N+1)
    Int g_bound;   // D^2 - 2D + 1
    bool r_ok = true;
    bool g_ok = true;
};

// Genus of a smooth plane-curve fibre of degree d and the paper-level
// sanity bounds for a degree-D surface in P^N with r critical values.
GenusBounds genus_and_bounds(long fibre_degree, long D, long N, long r_observed);

struct BlowupResult {
    int n = 0;                          // ambient P^N
    // graph-closure generators in the product P^N x P^(N-1):
    // minors x_i y_j - x_j y_i (i < j < N) plus the original equations
    std::vector<MPoly> minors;          // in variables x0..xN, y0..y(N-1)
    std::vector<MPoly> equations;       // pulled back F_k(x)
    std::vector<std::string> vars;      // combined variable list
    std::vector<Rat> center;            // the blown-up point (normalised)
    // Segre coordinates w_ab = x_a y_b are implied; projection to the
    // first factor is the blowdown map.
};

// Blowup of the surface at a point P (moved to [0:...:0:1] by a linear
// change of coordinates first).  Equations are graph-closure generators;
// no saturation is performed (exact for the plane case).
BlowupResult blowup_at_point(const SurfaceSpec& spec, const std::vector<Rat>& point);

// Blowdown: first-factor projection of a product point.
std::vector<Rat> blowdown(const BlowupResult& bl, const std::vector<Rat>& xy_point);

// j-invariant is constant (isotrivial pencil) iff a^3 and delta are
// proportional.
bool is_isotrivial(const QPoly& a, const QPoly& b);

} // namespace lefsurf

#endif
