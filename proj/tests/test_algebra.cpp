#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "darboux/forms.hpp"
#include "darboux/int_linalg.hpp"
#include "darboux/matrix.hpp"
#include "darboux/parse.hpp"
#include "darboux/poly_gcd.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/resultant.hpp"
#include "darboux/roots.hpp"
#include "darboux/scalar.hpp"

using namespace darboux;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> YZ{"y", "z"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Polynomial<Rational> qpoly(const std::string& s,
                           std::vector<std::string> vars = XY) {
    return parse_polynomial<Rational>(s, std::move(vars), Rational());
}

Polynomial<GFp> ppoly(const std::string& s, std::uint64_t p,
                      std::vector<std::string> vars = XY) {
    return parse_polynomial<GFp>(s, std::move(vars), GFp(0, p));
}

std::mt19937_64 rng(20240811);

Polynomial<GFp> random_gfp_poly(std::uint64_t p, int maxdeg,
                                const std::vector<std::string>& vars = XY) {
    Polynomial<GFp> f(vars, GFp(0, p));
    std::uniform_int_distribution<int> dcoef(0, static_cast<int>(p) - 1);
    for (int i = 0; i <= maxdeg; ++i)
        for (int j = 0; i + j <= maxdeg; ++j) {
            std::vector<int> e(vars.size(), 0);
            e[0] = i;
            e[1] = j;
            f.add_term(e, GFp(static_cast<std::uint64_t>(dcoef(rng)), p));
        }
    return f;
}

} // namespace

TEST_CASE("rational scalar basics") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(3, -6).sign() == -1);
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational::from_decimal("33512488960").str() == "33512488960");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("prime field arithmetic and square roots") {
    GFp a(17, 29), b(25, 29);
    CHECK((a * b).value() == (17 * 25) % 29);
    CHECK((a / b * b) == a);
    CHECK(GFp(28, 29).is_square());       // -1 is a QR mod 29
    CHECK(GFp(24, 29).is_square());       // -5 as well
    CHECK_FALSE(GFp(2, 29).is_square());
    auto r = GFp(24, 29).sqrt();
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == GFp(24, 29));
    CHECK(GFp(2, 31).is_square());
    auto r31 = GFp(2, 31).sqrt();
    REQUIRE(r31.has_value());
    CHECK((*r31) * (*r31) == GFp(2, 31));
    CHECK(GFp::from_signed(-5, 29) == GFp(24, 29));
    CHECK(GFp(27, 29).balanced() == -2);
}

TEST_CASE("dual numbers differentiate polynomials exactly") {
    // f(a + eps) = f(a) + f'(a) eps, 40 random samples over F_29
    for (int trial = 0; trial < 40; ++trial) {
        auto f = random_gfp_poly(29, 3);
        auto fx = f.derivative("x");
        std::uniform_int_distribution<int> d(0, 28);
        GFp ax(static_cast<std::uint64_t>(d(rng)), 29);
        GFp ay(static_cast<std::uint64_t>(d(rng)), 29);
        auto fd = f.map_scalars([](const GFp& c) { return Dual<GFp>(c); },
                                Dual<GFp>(GFp(0, 29)));
        std::vector<Dual<GFp>> pt{Dual<GFp>(ax, GFp(1, 29)), Dual<GFp>(ay)};
        Dual<GFp> v = fd.eval(pt);
        std::vector<GFp> base{ax, ay};
        CHECK(v.real() == f.eval(base));
        CHECK(v.eps() == fx.eval(base));
    }
    // eps^2 = 0 exactly
    Dual<GFp> eps(GFp(0, 29), GFp(1, 29));
    CHECK((eps * eps).is_zero());
}

TEST_CASE("polynomial parser and printer") {
    auto f = qpoly("(x*y - z^2)^2 - x*z^3", XYZ);
    CHECK(f.total_degree() == 4);
    CHECK(f.is_homogeneous());
    auto g = qpoly("x^2 - 2*x*y + y^2");
    CHECK(g == qpoly("(x - y)^2"));
    CHECK(qpoly("-x + 3").str() == "-x + 3");
    CHECK(qpoly("(27*x + 125*y)/512", XYZ).coeff_in("x", 1).constant_term() ==
          Rational(27, 512));
    CHECK_THROWS_AS(qpoly("x +"), ParseError);
    CHECK_THROWS_AS(qpoly("w + 1"), std::invalid_argument);
    CHECK(FieldSpec::parse("GF(29)").p == 29);
    CHECK(FieldSpec::parse("QQ").rational);
    CHECK_THROWS_AS(FieldSpec::parse("GF(30)"), ParseError);
}

TEST_CASE("substitution and evaluation") {
    auto f = qpoly("x^2 - y^3", XYZ);
    auto sub = f.substitute("y", qpoly("y - 4*z", XYZ));
    CHECK(sub == qpoly("x^2 - (y - 4*z)^3", XYZ));
    std::vector<Rational> pt{Rational(2), Rational(3), Rational(0)};
    CHECK(sub.eval(pt) == Rational(4 - 27));
    // simultaneous swap really is simultaneous
    auto h = qpoly("x^2 + y", XY);
    std::map<std::string, Polynomial<Rational>> images{
        {"x", qpoly("y", XY)}, {"y", qpoly("x", XY)}};
    CHECK(h.substitute(images) == qpoly("y^2 + x", XY));
}

TEST_CASE("wedge product") {
    // dC ^ omega for the cusp fixture
    Form1<Rational> dC(Chart::AffineXY, qpoly("2*x"), qpoly("-3*y^2"));
    Form1<Rational> omega(Chart::AffineXY, qpoly("-2*y"), qpoly("3*x"));
    auto w = wedge(dC, omega);
    CHECK(w.c == qpoly("6*(x^2 - y^3)"));
    CHECK(wedge(omega, omega).is_zero());
    // antisymmetry + bilinearity on random inputs
    for (int t = 0; t < 20; ++t) {
        Form1<GFp> f(Chart::AffineXY, random_gfp_poly(29, 2), random_gfp_poly(29, 2));
        Form1<GFp> g(Chart::AffineXY, random_gfp_poly(29, 2), random_gfp_poly(29, 2));
        CHECK(wedge(f, g).c == -wedge(g, f).c);
        GFp s(7, 29);
        CHECK(wedge(f * s, g).c == wedge(f, g).c * s);
        Form1<GFp> fg = f + g;
        CHECK(wedge(fg, g).c == (wedge(f, g) + wedge(g, g)).c);
    }
    // chart at infinity, fixed basis dy^dz
    Form1<Rational> a(Chart::InfinityYZ, qpoly("-3*y^2", YZ), qpoly("1", YZ));
    Form1<Rational> b(Chart::InfinityYZ, qpoly("3*z", YZ), qpoly("-y", YZ));
    CHECK(wedge(a, b).c == qpoly("-3*(z - y^3)", YZ));
    Form1<Rational> bad(Chart::AffineXY, qpoly("1"), qpoly("0"));
    CHECK_THROWS_AS(wedge(a, bad), ChartMismatchError);
}

TEST_CASE("exterior derivative") {
    Form1<Rational> omega(Chart::AffineXY, qpoly("-2*y"), qpoly("3*x"));
    CHECK(exterior_derivative(omega).c == qpoly("5"));
    // d(dC) = 0 for random C
    for (int t = 0; t < 20; ++t) {
        auto C = random_gfp_poly(29, 4);
        auto dC = gradient_form(C, Chart::AffineXY);
        CHECK(exterior_derivative(dC).is_zero());
    }
    Form1<Rational> winf(Chart::InfinityYZ, qpoly("3*z", YZ), qpoly("-y", YZ));
    CHECK(exterior_derivative(winf).c == qpoly("-4", YZ));
}

TEST_CASE("exact division") {
    CHECK(exact_divide(qpoly("6*(x^2-y^3)"), qpoly("x^2-y^3")) == qpoly("6"));
    CHECK(exact_divide(qpoly("x^2-1"), qpoly("x-1")) == qpoly("x+1"));
    CHECK_THROWS_AS(exact_divide(qpoly("x^2+1"), qpoly("x-1")), NotDivisibleError);
    auto out = try_exact_divide(qpoly("x^2+1"), qpoly("x-1"));
    CHECK_FALSE(out.exact);
    CHECK_FALSE(out.remainder.is_zero());
    // exact_divide(a*b, b) == a on random pairs
    for (int t = 0; t < 25; ++t) {
        auto a = random_gfp_poly(31, 3);
        auto b = random_gfp_poly(31, 2);
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("resultants") {
    CHECK(resultant(qpoly("y - x"), qpoly("y + x"), "y") == qpoly("2*x"));
    auto r = resultant(qpoly("x^2 - y^3"), qpoly("3*y^2"), "y");
    CHECK(r == qpoly("27*x^4"));
    auto f = qpoly("x^2*y - y^3 + x");
    CHECK(resultant(f, f, "y").is_zero());
}

TEST_CASE("nullspace") {
    auto id3 = Matrix<Rational>::identity(3, Rational());
    CHECK(bareiss_kernel(id3).kernel.empty());
    CHECK(id3.kernel_basis().empty());

    Matrix<Rational> z2(2, 2, Rational());
    CHECK(bareiss_kernel(z2).kernel.size() == 2);

    // printed 7x4 eta matrix of construction 11_2
    const int rows[7][4] = {{0, 10, 2, 7},  {2, 6, 0, 5},  {2, 2, 0, 3},
                            {0, 2, 2, 3},   {0, 2, 2, 3},  {0, 2, 2, 3},
                            {1, 4, 2, 5}};
    Matrix<Rational> m(7, 4, Rational());
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 4; ++j) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(rows[i][j]);
    auto res = bareiss_kernel(m);
    CHECK(res.rank == 3);
    REQUIRE(res.kernel.size() == 1);
    auto v = normalize_to_coprime_integers(res.kernel[0]);
    CHECK(v == std::vector<Rational>{Rational(2), Rational(1), Rational(2), Rational(-2)});

    // rank + kernel dimension = columns, and M*v = 0 exactly (random)
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 15; ++t) {
        Matrix<Rational> a(5, 7, Rational());
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 7; ++j)
                a.at(i, j) = Rational(d(rng), 1 + std::abs(d(rng)));
        auto kr = bareiss_kernel(a);
        CHECK(kr.rank + kr.kernel.size() == 7);
        CHECK(kr.rank == a.rank());  // plain Gauss-Jordan agrees
        for (const auto& k : kr.kernel) {
            auto mv = a.multiply(k);
            for (const auto& c : mv) CHECK(c.is_zero());
        }
    }
}

TEST_CASE("certified integer kernel matches exact elimination") {
    std::uniform_int_distribution<long> d(-50, 50);
    for (int t = 0; t < 10; ++t) {
        std::vector<std::vector<Integer>> m(6, std::vector<Integer>(9));
        Matrix<Rational> q(6, 9, Rational());
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 9; ++j) {
                long v = d(rng);
                m[i][j] = Integer(v);
                q.at(i, j) = Rational(v);
            }
        auto cert = IntegerKernel::compute(m);
        CHECK(cert.rank == q.rank());
        CHECK(cert.rank + cert.kernel.size() == 9);
    }
}

TEST_CASE("multivariate gcd and squarefree tests") {
    auto a = qpoly("x^2 - y^3", XYZ);
    auto b = qpoly("x*y - z^2", XYZ);
    CHECK(poly_gcd(a * b, b * b) == b / b.lex_leading_coeff());
    CHECK(coprime(a, b));
    CHECK_FALSE(coprime(a * b, b));
    CHECK(is_squarefree(a));
    CHECK_FALSE(is_squarefree(a * a));
    CHECK_FALSE(is_squarefree(qpoly("x^2*y", XYZ)));
    CHECK(is_squarefree(qpoly("x*y*(x + y - z)", XYZ)));
    // gcd over a prime field
    auto f = ppoly("x^2 - y^2", 29);
    auto g = ppoly("x - y", 29);
    CHECK(poly_gcd(f, g) == g);
}

TEST_CASE("rational root extraction is exact and complete") {
    // (x-2)^2 (3x+1) (x^2+1)
    auto f = qpoly("(x-2)^2 * (3*x+1) * (x^2+1)", {"x"});
    auto uf = as_univariate(f, "x");
    auto rep = rational_roots(uf);
    REQUIRE(rep.roots.size() == 2);
    CHECK(rep.roots[0].first == Rational(-1, 3));
    CHECK(rep.roots[0].second == 1);
    CHECK(rep.roots[1].first == Rational(2));
    CHECK(rep.roots[1].second == 2);
    CHECK(rep.unresolved_degree == 2);

    // big coefficients, root with large denominator
    auto g = qpoly("(51*x - 71)^3 * (x^2 - 2)", {"x"});
    auto rg = rational_roots(as_univariate(g, "x"));
    REQUIRE(rg.roots.size() == 1);
    CHECK(rg.roots[0].first == Rational(71, 51));
    CHECK(rg.roots[0].second == 3);
    CHECK(rg.unresolved_degree == 2);

    // roots at 0 and integer roots that straddle bisection midpoints
    auto h = qpoly("x^2 * (x - 1) * (x + 1) * (x - 4)", {"x"});
    auto rh = rational_roots(as_univariate(h, "x"));
    REQUIRE(rh.roots.size() == 4);

    auto ord = upoly::order_at(as_univariate(g, "x"), Rational(71, 51));
    CHECK(ord == 3);
}

TEST_CASE("gfp roots by exhaustion") {
    auto f = ppoly("(x - 3)^2 * (x - 11)", 29, {"x"});
    auto roots = gfp_roots(as_univariate(f, "x"));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first == GFp(3, 29));
    CHECK(roots[0].second == 2);
    CHECK(roots[1].first == GFp(11, 29));
}

TEST_CASE("reduction mod p") {
    CHECK(reduce_mod(Rational(1, 4), 29) == GFp(22, 29));
    CHECK(reduce_mod(Rational(-63, 1), 29) == GFp(24, 29));
    CHECK_THROWS_AS(reduce_mod(Rational(1, 29), 29), std::domain_error);
    // polynomial reduction
    auto f = qpoly("x/4 - 63*y");
    auto fp = f.map_scalars([](const Rational& c) { return reduce_mod(c, 29); },
                            GFp(0, 29));
    CHECK(fp == ppoly("22*x - 5*y", 29));
}
