#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "dap/dap.hpp"

using namespace dap;

namespace {

using QS = Series<Rational>;

QS make(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    int order = static_cast<int>(c.size()) - 1;
    return QS(order, std::move(c));
}

std::vector<long> take(const QS& s) {
    std::vector<long> out;
    for (auto& q : s.c) {
        REQUIRE(denominator(q) == 1);
        out.push_back(numerator(q).convert_to<long>());
    }
    return out;
}

}  // namespace

TEST_CASE("single-marker polynomials behave as a ring", "[series]") {
    Poly1 one = p1(1);
    Poly1 y = p1(1, 1);
    CHECK((one + y).degree() == 1);
    CHECK(((one + y) * (one - y)).at(0) == 1);
    CHECK(((one + y) * (one - y)).at(2) == -1);
    CHECK(((one + y) * (one - y)).at(1) == 0);
    CHECK((y - y).degree() == -1);  // exact cancellation trims to the zero poly
    CHECK(p1(0).c.empty());
}

TEST_CASE("double-marker polynomials track both degrees", "[series]") {
    Poly2 y = p2(1, 1, 0);
    Poly2 z = p2(1, 0, 1);
    Poly2 prod = y * z + p2(2, 0, 0);
    CHECK(prod.at(1, 1) == 1);
    CHECK(prod.at(0, 0) == 2);
    CHECK(prod.at(1, 0) == 0);
    CHECK((y * y * z).at(2, 1) == 1);
    CHECK((z - z) == Poly2{});
}

TEST_CASE("series construction and access guard their bounds", "[series]") {
    auto s = make({1, 2, 3});
    CHECK(s.order == 2);
    CHECK(s.at(2) == Rational(3));
    CHECK_THROWS_AS(s.at(3), series_error);
    CHECK_THROWS_AS(s.at(-1), series_error);
    CHECK_THROWS_AS(QS::monomial(3, 4, Rational(1)), series_error);
    CHECK_THROWS_AS(s.truncated(5), series_error);
    CHECK(s.truncated(1).order == 1);
    CHECK(s.padded(4).at(4) == 0);
    CHECK(make({0, 0, 5}).valuation() == 2);
    CHECK(QS::zero(3).valuation() == 4);
    CHECK_THROWS_AS(QS(2, {Rational(1)}), internal_error);
}

TEST_CASE("series arithmetic on hand-multiplied fixtures", "[series]") {
    auto a = make({1, 1, 1, 0, 0});
    CHECK(take(a * a) == std::vector<long>{1, 2, 3, 2, 1});
    CHECK(take(a + a) == std::vector<long>{2, 2, 2, 0, 0});
    auto geom = div(QS::constant(6, Rational(1)), make({1, -1, 0, 0, 0, 0, 0}));
    CHECK(take(geom) == std::vector<long>{1, 1, 1, 1, 1, 1, 1});
    // mixed orders truncate to the shorter operand
    CHECK((make({1, 1}) * make({1, 1, 1})).order == 1);
    CHECK(take(scale(make({1, 2}), Rational(3))) == std::vector<long>{3, 6});
}

TEST_CASE("series division demands an invertible constant", "[series]") {
    CHECK_THROWS_AS(div(make({1, 1}), make({0, 1})), series_error);
    auto q = div(make({0, 1, 0}), make({2, 0, 0}));
    CHECK(q.at(1) == Rational(1, 2));
}

TEST_CASE("cancelled division strips a common power of x", "[series]") {
    // x / (x - x^2) = 1/(1-x)
    auto num = QS::monomial(6, 1, Rational(1));
    auto den = QS::monomial(6, 1, Rational(1)) - QS::monomial(6, 2, Rational(1));
    CHECK(take(div_cancel(num, den)) == std::vector<long>{1, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS(div_cancel(QS::constant(6, Rational(1)), den), series_error);
    CHECK_THROWS_AS(div_cancel(num, QS::zero(6)), series_error);
}

TEST_CASE("shifts by powers of x and the derivative", "[series]") {
    auto s = make({1, 2, 3});
    CHECK(take(shift_mul_x(s, 2)) == std::vector<long>{0, 0, 1, 2, 3});
    CHECK(take(shift_div_x(shift_mul_x(s, 2), 2)) == std::vector<long>{1, 2, 3});
    CHECK_THROWS_AS(shift_div_x(make({1, 2, 3}), 1), series_error);
    CHECK(take(deriv_x(make({5, 1, 3, 2}))) == std::vector<long>{1, 6, 6});
}

TEST_CASE("series square root inverts squaring", "[series]") {
    auto s = make({1, 1, 0, 0, 0});
    CHECK(take(sqrt_series(s * s)) == std::vector<long>{1, 1, 0, 0, 0});
    // sqrt(1 - 4x) carries doubled Catalan numbers
    auto r = sqrt_series(make({1, -4, 0, 0, 0, 0}));
    CHECK(take(r) == std::vector<long>{1, -2, -2, -4, -10, -28});
    CHECK_THROWS_AS(sqrt_series(make({4, 1})), series_error);
}

TEST_CASE("integrality detection", "[series]") {
    CHECK(is_integral(make({1, 2, 3})));
    auto s = make({1, 1});
    s.c[1] = Rational(1, 2);
    CHECK_FALSE(is_integral(s));
}

TEST_CASE("marker evaluation and differentiation", "[series]") {
    Series<Poly1> s = Series<Poly1>::zero(2);
    s.c[0] = p1(1);
    s.c[1] = p1(1, 1) + p1(2);     // 2 + y
    s.c[2] = p1(3, 2);             // 3 y^2
    CHECK(take(eval_marker(s)) == std::vector<long>{1, 3, 3});
    CHECK(take(eval_marker(s, Rational(2))) == std::vector<long>{1, 4, 12});
    CHECK(take(eval_marker(deriv_marker(s))) == std::vector<long>{0, 1, 6});
    CHECK(take(eval_marker(deriv_marker(deriv_marker(s)))) == std::vector<long>{0, 0, 6});
}

TEST_CASE("two-marker evaluation hits each variable separately", "[series]") {
    Series<Poly2> s = Series<Poly2>::zero(1);
    s.c[1] = p2(1, 2, 0) + p2(5, 1, 3);  // y^2 + 5 y z^3
    auto in_y = eval_z(s, Rational(1));  // z := 1, polynomial in y
    CHECK(in_y.c[1].at(2) == 1);
    CHECK(in_y.c[1].at(1) == 5);
    auto in_z = eval_y(s, Rational(1));  // y := 1, polynomial in z
    CHECK(in_z.c[1].at(0) == 1);
    CHECK(in_z.c[1].at(3) == 5);
    CHECK(take(eval_marker(eval_y(s, Rational(1)), Rational(1))) == std::vector<long>{0, 6});
    auto lifted = lift2(make({1, 2, 3}));
    CHECK(take(eval_marker(eval_z(lifted, Rational(7)), Rational(9))) ==
          std::vector<long>{1, 2, 3});
    CHECK(take(eval_marker(lift(make({4, 5})))) == std::vector<long>{4, 5});
}

TEST_CASE("linear equation solver reproduces the geometric series", "[series]") {
    int n = 8;
    auto x = QS::monomial(n, 1, Rational(1));
    auto a = solve_linear_fe(x, x, n);
    CHECK(take(a) == std::vector<long>{0, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS(solve_linear_fe(x, QS::constant(n, Rational(1)), n), series_error);
    CHECK_THROWS_AS(solve_linear_fe(x.truncated(3), x, 8), series_error);
}

TEST_CASE("quadratic equation solver reproduces Motzkin numbers", "[series]") {
    int n = 8;
    auto x = QS::monomial(n, 1, Rational(1));
    // T = x + x T + x T^2 shifts the Motzkin sequence up by one
    auto t = solve_quadratic_fe(x, x, x, n);
    CHECK(take(t) == std::vector<long>{0, 1, 1, 2, 4, 9, 21, 51, 127});
    CHECK_THROWS_AS(solve_quadratic_fe(QS::constant(n, Rational(1)), x, x, n), series_error);
    CHECK_THROWS_AS(solve_quadratic_fe(x, QS::constant(n, Rational(1)), x, n), series_error);
}

TEST_CASE("fixed-point solver agrees with the quadratic one", "[series]") {
    int n = 10;
    // T = x + T^2 generates the Catalan numbers on the positive indices
    auto t = solve_fixed_point<Rational>(
        [&](const QS& s) { return QS::monomial(s.order, 1, Rational(1)) + s * s; }, n);
    CHECK(take(t) == std::vector<long>{0, 1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862});
    // a map that fails to contract is reported, not looped forever
    CHECK_THROWS_AS(solve_fixed_point<Rational>(
                        [&](const QS& s) { return s + QS::constant(s.order, Rational(1)); }, 6),
                    series_error);
}
