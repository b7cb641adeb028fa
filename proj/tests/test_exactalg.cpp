#include "jackd/exactalg.hpp"

#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace jackd;

namespace {

// Deterministic generator for the randomized algebra checks.
struct Lcg {
    std::uint64_t state = 0x2545F4914F6CDD1DULL;
    int next(int lo, int hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<int>((state >> 33) % (hi - lo + 1));
    }
};

Rat random_rat(Lcg& rng, int lo, int hi, int max_den) {
    Rat q(rng.next(lo, hi), rng.next(1, max_den));
    q.canonicalize();
    return q;
}

AlphaPoly random_poly(Lcg& rng, int max_deg) {
    std::vector<Rat> c(rng.next(0, max_deg) + 1);
    for (Rat& x : c) x = random_rat(rng, -4, 4, 3);
    return AlphaPoly(std::move(c));
}

// Cofactor-expansion determinant, the independent oracle.
Rat det_cofactor(const std::vector<std::vector<Rat>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rat(1);
    if (n == 1) return m[0][0];
    Rat acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Rat>> sub(n - 1, std::vector<Rat>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        const Rat term = m[0][j] * det_cofactor(sub);
        acc += (j % 2 == 0) ? term : Rat(-term);
    }
    return acc;
}

XPoly x_power(int k) {
    std::vector<AlphaPoly> c(k + 1);
    c[k] = AlphaPoly(1);
    return XPoly(std::move(c));
}

}  // namespace

TEST_CASE("ring operations are canonical and distribute") {
    const AlphaPoly a = AlphaPoly::variable();
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(AlphaPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(0)}).degree() == 0);

    Lcg rng;
    for (int trial = 0; trial < 1000; ++trial) {
        const AlphaPoly p = random_poly(rng, 4);
        const AlphaPoly q = random_poly(rng, 4);
        const AlphaPoly r = random_poly(rng, 4);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        const Rat at(3, 2);
        CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    }
}

TEST_CASE("rendering") {
    CHECK(AlphaPoly().to_string() == "0");
    CHECK((-AlphaPoly::variable()).to_string() == "-1*a^1");
    const AlphaPoly p(std::vector<Rat>{Rat(0), Rat(2), Rat(2)});
    CHECK(p.to_string() == "2*a^1 + 2*a^2");
    CHECK(AlphaPoly(Rat(3, 2)).to_string() == "3/2");
    CHECK(AlphaPoly::linear(Rat(-1), Rat(1)).to_string() == "1 - 1*a^1");
}

TEST_CASE("json round trip") {
    const AlphaPoly p(std::vector<Rat>{Rat(-1, 2), Rat(0), Rat(7)});
    CHECK(AlphaPoly::from_json(p.to_json()) == p);
    CHECK(p.to_json() == R"({"coeffs":["-1/2","0","7"]})");
}

TEST_CASE("forward differences") {
    CHECK(forward_difference(x_power(2), 2) == AlphaPoly(2));
    CHECK(forward_difference(x_power(2), 3).is_zero());
    // Falling factorial x(x-1)...(x-k+1) has k-th difference k! at 0.
    for (int k = 0; k <= 10; ++k) {
        XPoly p = XPoly::constant(AlphaPoly(1));
        for (int t = 0; t < k; ++t)
            p = p.times_linear(AlphaPoly(1), AlphaPoly(Rat(-t)));
        CHECK(forward_difference(p, k) == AlphaPoly(Rat(factorial(k))));
    }
    // First difference of (a + 2 - a*x)(1 - a*x) at the origin is -3a.
    const AlphaPoly a = AlphaPoly::variable();
    XPoly p = XPoly::constant(AlphaPoly(1));
    p = p.times_linear(-a, a + AlphaPoly(2));
    p = p.times_linear(-a, AlphaPoly(1));
    CHECK(forward_difference(p, 1) == AlphaPoly::linear(Rat(-3), Rat(0)));
}

TEST_CASE("interpolation") {
    using Pt = std::pair<Rat, Rat>;
    CHECK(newton_interpolate({Pt{Rat(0), Rat(1)}, Pt{Rat(1), Rat(1)}}) ==
          std::vector<Rat>{Rat(1)});
    CHECK(newton_interpolate({Pt{Rat(0), Rat(0)}, Pt{Rat(1), Rat(1)},
                              Pt{Rat(2), Rat(4)}}) ==
          std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    // Samples of 2a^2 + 2a at 0, 1, 2.
    CHECK(newton_interpolate({Pt{Rat(0), Rat(0)}, Pt{Rat(1), Rat(4)},
                              Pt{Rat(2), Rat(12)}}) ==
          std::vector<Rat>{Rat(0), Rat(2), Rat(2)});
    CHECK_THROWS_AS(newton_interpolate({Pt{Rat(1), Rat(0)}, Pt{Rat(1), Rat(1)}}),
                    std::domain_error);
}

TEST_CASE("exact determinants") {
    std::vector<std::vector<Rat>> eye(3, std::vector<Rat>(3, Rat(0)));
    for (int i = 0; i < 3; ++i) eye[i][i] = Rat(1);
    CHECK(det_exact(eye) == 1);
    CHECK(det_exact({{Rat(1), Rat(1)}, {Rat(1), Rat(2)}}) == 1);

    // Vandermonde at nodes 9, 4, 0, -3.
    const std::vector<int> nodes{9, 4, 0, -3};
    std::vector<std::vector<Rat>> v(4, std::vector<Rat>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v[i][j] = Rat(pow_int(Int(nodes[i]), j));
    CHECK(abs(det_exact(v)) == 45360);

    Lcg rng;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<Rat>> m(4, std::vector<Rat>(4));
        for (auto& row : m)
            for (Rat& x : row) x = random_rat(rng, -5, 5, 2);
        CHECK(det_exact(m) == det_cofactor(m));
    }
}

TEST_CASE("scaled falling factorial basis") {
    // Constant polynomials stay in degree zero.
    CHECK(falling_factorial_expand(XPoly::constant(AlphaPoly(5))) ==
          std::vector<AlphaPoly>{AlphaPoly(5)});
    // Round trip through assembled inputs.
    Lcg rng;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<AlphaPoly> coeffs(rng.next(1, 9));
        for (AlphaPoly& c : coeffs) c = random_poly(rng, 3);
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
        if (coeffs.empty()) coeffs.push_back(AlphaPoly(1));
        const XPoly assembled = falling_factorial_assemble(coeffs);
        CHECK(falling_factorial_expand(assembled) == coeffs);
    }
    // Plain x is not expressible with polynomial coefficients.
    CHECK_THROWS_AS(falling_factorial_expand(x_power(1)), std::domain_error);
    CHECK_THROWS_AS(AlphaPoly::variable().div_exact_alpha_power(2), std::domain_error);
}
