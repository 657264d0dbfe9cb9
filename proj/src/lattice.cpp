#include "fanocone/lattice.hpp"

#include <stdexcept>
#include <string>

namespace fanocone {

Geometry::Geometry(int n, int k, int d) : n_(n), k_(k), d_(d) {
    if (n < 3) throw std::invalid_argument("n must be >= 3 (got n=" + std::to_string(n) + ")");
    if (k < 2 || k > n - 1)
        throw std::invalid_argument("k must satisfy 2 <= k <= n-1 (got n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ")");
    if (d < 1) throw std::invalid_argument("d must be >= 1 (got d=" + std::to_string(d) + ")");
}

std::ostream& operator<<(std::ostream& os, const Geometry& g) {
    return os << '(' << g.n() << ',' << g.k() << ',' << g.d() << ')';
}

DivClass& DivClass::operator+=(const DivClass& o) {
    h += o.h;
    l += o.l;
    e += o.e;
    f += o.f;
    return *this;
}

DivClass& DivClass::operator-=(const DivClass& o) {
    h -= o.h;
    l -= o.l;
    e -= o.e;
    f -= o.f;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const DivClass& D) {
    return os << '(' << D.h << ',' << D.l << ',' << D.e << ',' << D.f << ')';
}

CurveClass& CurveClass::operator+=(const CurveClass& o) {
    cl += o.cl;
    ch += o.ch;
    ce += o.ce;
    cf += o.cf;
    return *this;
}

CurveClass& CurveClass::operator-=(const CurveClass& o) {
    cl -= o.cl;
    ch -= o.ch;
    ce -= o.ce;
    cf -= o.cf;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const DeltaCoeffs& c) {
    return os << '(' << c.x << ',' << c.y << ',' << c.z << ',' << c.w << ',' << c.u << ')';
}

Rat pair(const DivClass& D, const CurveClass& c) {
    return D.h * c.cl + D.l * c.ch - D.e * c.ce - D.f * c.cf;
}

NamedCurves named_curves(const Geometry& g) {
    const Rat d(g.d());
    return NamedCurves{
        CurveClass::l() - CurveClass::e(),
        CurveClass::h() - d * CurveClass::e(),
        CurveClass::e() - CurveClass::f(),
        CurveClass::f(),
    };
}

NamedDivisors named_divisors(const Geometry& g) {
    return NamedDivisors{
        DivClass::H() - DivClass::E(),
        DivClass::L() - DivClass::F(),
        Rat(g.d()) * DivClass::L() - DivClass::E() - DivClass::F(),
    };
}

DivClass anticanonical(const Geometry& g) {
    const long n = g.n();
    const long k = g.k();
    return DivClass{Rat(n - k + 1), Rat(k + 1), Rat(-(n - k)), Rat(-(k - 1))};
}

DivClass delta_class(const DeltaCoeffs& c, const Geometry& g) {
    const Rat d(g.d());
    return DivClass{c.x, c.y + d * c.u, -c.x + c.z - c.u, -c.y + c.w - c.u};
}

GreekCoeffs delta_to_greek(const DeltaCoeffs& c, const Geometry& g) {
    const Rat d(g.d());
    return GreekCoeffs{
        .alpha = c.x,
        .beta = c.y + d * c.u,
        .gamma = -c.x + c.z - c.u,
        .delta = -c.y + c.w - c.u,
    };
}

}  // namespace fanocone
