#pragma once

#include <array>
#include <ostream>

#include "fanocone/rat.hpp"

namespace fanocone {

/// The triple (n, k, d) fixing the double blow-up of P^{n-k} x P^k: first along
/// a degree-d hypersurface C in a fiber over P^{n-k}, then along the strict
/// transform of a fiber S over P^k. Always valid once constructed.
class Geometry {
public:
    /// Throws std::invalid_argument naming the violated constraint unless
    /// n >= 3, 2 <= k <= n-1 and d >= 1.
    Geometry(int n, int k, int d);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] int d() const { return d_; }

    friend bool operator==(const Geometry&, const Geometry&) = default;

private:
    int n_;
    int k_;
    int d_;
};

std::ostream& operator<<(std::ostream& os, const Geometry& g);

/// Divisor class in the basis (H, L, E, F): pullbacks of the two hyperplane
/// classes and the two exceptional divisors.
struct DivClass {
    Rat h, l, e, f;

    DivClass& operator+=(const DivClass& o);
    DivClass& operator-=(const DivClass& o);
    friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
    friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
    friend DivClass operator-(const DivClass& a) { return DivClass{-a.h, -a.l, -a.e, -a.f}; }
    friend DivClass operator*(const Rat& s, const DivClass& a) { return DivClass{s * a.h, s * a.l, s * a.e, s * a.f}; }
    friend bool operator==(const DivClass&, const DivClass&) = default;

    [[nodiscard]] std::array<Rat, 4> coords() const { return {h, l, e, f}; }

    static DivClass H() { return {Rat(1), Rat(0), Rat(0), Rat(0)}; }
    static DivClass L() { return {Rat(0), Rat(1), Rat(0), Rat(0)}; }
    static DivClass E() { return {Rat(0), Rat(0), Rat(1), Rat(0)}; }
    static DivClass F() { return {Rat(0), Rat(0), Rat(0), Rat(1)}; }
};

std::ostream& operator<<(std::ostream& os, const DivClass& D);

/// Curve class in the basis (l, h, e, f): strict transforms of a line in a
/// fiber of each projection, a line in a fiber of the first exceptional
/// divisor and a line in a fiber of the second.
struct CurveClass {
    Rat cl, ch, ce, cf;

    CurveClass& operator+=(const CurveClass& o);
    CurveClass& operator-=(const CurveClass& o);
    friend CurveClass operator+(CurveClass a, const CurveClass& b) { return a += b; }
    friend CurveClass operator-(CurveClass a, const CurveClass& b) { return a -= b; }
    friend CurveClass operator*(const Rat& s, const CurveClass& a) {
        return CurveClass{s * a.cl, s * a.ch, s * a.ce, s * a.cf};
    }
    friend bool operator==(const CurveClass&, const CurveClass&) = default;

    static CurveClass l() { return {Rat(1), Rat(0), Rat(0), Rat(0)}; }
    static CurveClass h() { return {Rat(0), Rat(1), Rat(0), Rat(0)}; }
    static CurveClass e() { return {Rat(0), Rat(0), Rat(1), Rat(0)}; }
    static CurveClass f() { return {Rat(0), Rat(0), Rat(0), Rat(1)}; }
};

/// Coefficients of a boundary x*H0 + y*L0 + z*E + w*F + u*D supported on the
/// five effective generators.
struct DeltaCoeffs {
    Rat x, y, z, w, u;

    friend bool operator==(const DeltaCoeffs&, const DeltaCoeffs&) = default;
    [[nodiscard]] std::array<Rat, 5> coords() const { return {x, y, z, w, u}; }
};

std::ostream& operator<<(std::ostream& os, const DeltaCoeffs& c);

/// The same boundary rewritten in the (H, L, E, F) basis.
struct GreekCoeffs {
    Rat alpha, beta, gamma, delta;

    friend bool operator==(const GreekCoeffs&, const GreekCoeffs&) = default;
};

/// Intersection pairing; diag(1, 1, -1, -1) between the two bases.
Rat pair(const DivClass& D, const CurveClass& c);

struct NamedCurves {
    CurveClass l0;  // l - e
    CurveClass h0;  // h - d*e
    CurveClass e0;  // e - f
    CurveClass f;
};

NamedCurves named_curves(const Geometry& g);

struct NamedDivisors {
    DivClass H0;  // H - E
    DivClass L0;  // L - F
    DivClass D;   // d*L - E - F
};

NamedDivisors named_divisors(const Geometry& g);

/// -K = (n-k+1)H + (k+1)L - (n-k)E - (k-1)F
DivClass anticanonical(const Geometry& g);

DivClass delta_class(const DeltaCoeffs& c, const Geometry& g);
GreekCoeffs delta_to_greek(const DeltaCoeffs& c, const Geometry& g);

}  // namespace fanocone
