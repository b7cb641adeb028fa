#include "jackd/spectra.hpp"

#include "jackd/jack_oracle.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace jackd;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
const AlphaPoly kAlpha = AlphaPoly::variable();
}  // namespace

TEST_CASE("signed count polynomials") {
    CHECK(eta(P({2, 1})) == -kAlpha);
    CHECK(eta(P({3, 2})) == kAlpha * Rat(2) + kAlpha * kAlpha * Rat(2));
    CHECK(eta(P({1, 1})) == AlphaPoly(-1));
    CHECK(eta(Partition()) == AlphaPoly(1));
    CHECK(eta(P({10, 6, 3, 1})).eval(Rat(1)) == 4242315);
}

TEST_CASE("route agreement across symbolic forms") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const AlphaPoly reference = eta(lam);
            CHECK(eta_minor_sum(lam) == reference);
            CHECK(eta_rencontres(lam, lam.part(1)) == reference);
            if (n <= 6) CHECK(eta_rencontres(lam, lam.part(1) + 2) == reference);
        }
    CHECK(eta_rencontres(P({5}), 5).eval(Rat(1)) == 44);
    CHECK_THROWS_AS(eta_rencontres(P({3, 1}), 2), std::domain_error);
}

TEST_CASE("parameter zero closed form") {
    CHECK(eta_alpha0(P({2, 1})) == 0);
    CHECK(eta_alpha0(P({2, 2})) == 1);
    CHECK(eta_alpha0(P({1, 1, 1, 1, 1})) == 4);
    for (int n = 0; n <= 9; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(eta_alpha0(lam) == eta(lam).eval(Rat(0)));
}

TEST_CASE("two- and three-row closed forms at parameter one") {
    CHECK(eta1_two_row(5, 2) == 4);
    CHECK(eta1_two_row(5, 2) == eta(P({3, 2})).eval(Rat(1)));
    for (int n = 3; n <= 9; ++n) {
        // The shape (n-1, 1) evaluates to minus the one-row value over n,
        // divided by n - 1.
        const Rat one_row = eta(P({n})).eval(Rat(1));
        CHECK(eta1_two_row(n, 1) == -one_row / Rat(n - 1));
        for (int k = 0; 2 * k <= n; ++k) {
            const Partition lam =
                (k == 0) ? P({n}) : Partition(std::vector<int>{n - k, k});
            CHECK(eta1_two_row(n, k) == eta1_closed(lam));
        }
    }
    CHECK_THROWS_AS(eta1_two_row(4, 3), std::domain_error);

    CHECK(eta1_three_row(P({2, 2, 2})) == 7);
    CHECK(eta1_three_row(P({2, 2, 2})) == eta(P({2, 2, 2})).eval(Rat(1)));
    for (int n = 3; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n))
            if (lam.length() == 3) CHECK(eta1_three_row(lam) == eta1_closed(lam));
    CHECK_THROWS_AS(eta1_three_row(P({3, 1})), std::domain_error);
}

TEST_CASE("determinant form at parameter one") {
    CHECK(eta1_det(P({6})) == 265);
    CHECK(eta1_det(P({2, 1})) == -1);
    CHECK(eta1_det(P({1, 1, 1})) == 2);
    CHECK(eta1_det(P({10, 6, 3, 1})) == 4242315);
}

TEST_CASE("closed, determinant, and minor routes agree up to size 12") {
    for (int n = 9; n <= 12; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const Rat closed = eta1_closed(lam);
            CHECK(closed == eta1_det(lam));
            CHECK(closed == eta_minor_sum(lam).eval(Rat(1)));
        }
}

TEST_CASE("closed forms at parameter two on every shape") {
    CHECK(eta2_closed(P({2})) == 2);
    CHECK(eta2_closed(P({1, 1})) == -1);
    CHECK(eta2_closed(P({2, 2})) == 5);
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(eta2_closed(lam) == eta(lam).eval(Rat(2)));
    CHECK(eta2_two_row(4, 2) == 5);
    CHECK(eta2_doubly_even(P({2, 2})) == 5);
    CHECK_THROWS_AS(eta2_doubly_even(P({2, 1})), std::domain_error);
}

TEST_CASE("method dispatch agreement and validation") {
    const Partition lam = P({4, 2, 1});
    const Rat at1 = eta_at(lam, Rat(1));
    for (EtaMethod m : {EtaMethod::Auto, EtaMethod::Colored, EtaMethod::Minors,
                        EtaMethod::Rencontres, EtaMethod::Closed1, EtaMethod::Det1})
        CHECK(eta_at(lam, Rat(1), m) == at1);
    const Rat at2 = eta_at(lam, Rat(2));
    for (EtaMethod m : {EtaMethod::Auto, EtaMethod::Colored, EtaMethod::Minors,
                        EtaMethod::Rencontres, EtaMethod::Closed2})
        CHECK(eta_at(lam, Rat(2), m) == at2);
    CHECK_THROWS_AS(eta_at(lam, Rat(2), EtaMethod::Closed1), std::domain_error);
    CHECK_THROWS_AS(eta_at(lam, Rat(1), EtaMethod::Closed2), std::domain_error);
    CHECK_THROWS_AS(parse_eta_method("fastest"), std::invalid_argument);
}

TEST_CASE("wide one-row shapes avoid enumeration") {
    for (int n = 1; n <= 7; ++n)
        CHECK(one_row_derangement_poly(n) == derangement_count_poly(P({n})));
    // Wide enough that only the subset-free routes can touch it.
    const AlphaPoly wide = one_row_derangement_poly(30);
    CHECK(wide.degree() == 29);
    CHECK(wide == eta_minor_sum(P({30})));
}

TEST_CASE("complete graph immanants") {
    CHECK(complete_graph_immanant(P({1, 1, 1, 1})) == -3);
    CHECK(complete_graph_immanant(P({2, 1})) == -2);
    CHECK(complete_graph_immanant(P({2, 1, 1})) == 3);
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(complete_graph_immanant(lam) == complete_graph_immanant_direct(lam));
}

TEST_CASE("immanantal polynomials") {
    CHECK(immanant_char_poly(P({2})) == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    // Characteristic polynomial of the complete graph on four vertices.
    CHECK(immanant_char_poly(P({1, 1, 1, 1})) ==
          std::vector<Rat>{Rat(-3), Rat(-8), Rat(-6), Rat(0), Rat(1)});
    for (const Partition& lam : partitions_of(5))
        CHECK(immanant_char_poly(lam) == immanant_char_poly_direct(lam));
}

TEST_CASE("spectrum tables") {
    const SpectrumTable t3 = spectrum_table(3, AlphaSpec::fixed(Rat(1)));
    REQUIRE(t3.rows.size() == 3);
    CHECK(t3.rows[0].shape == P({3}));
    CHECK(t3.rows[0].eta_value == 2);
    CHECK(t3.rows[0].mult == 1);
    CHECK(t3.rows[1].eta_value == -1);
    CHECK(t3.rows[1].mult == 4);
    CHECK(t3.rows[2].eta_value == 2);
    CHECK(t3.rows[2].mult == 1);

    const SpectrumTable t22 = spectrum_table(2, AlphaSpec::fixed(Rat(2)));
    CHECK(t22.rows[0].eta_value == 2);
    CHECK(t22.rows[0].mult == 1);
    CHECK(t22.rows[1].eta_value == -1);
    CHECK(t22.rows[1].mult == 2);

    const SpectrumTable sym4 = spectrum_table(4, AlphaSpec::sym());
    CHECK(sym4.rows[0].eta_poly ==
          kAlpha * kAlpha * kAlpha * Rat(6) + kAlpha * kAlpha * Rat(3));
    CHECK_FALSE(sym4.rows[0].has_mult);

    // Multiplicities add up to the relevant group orders.
    Int total1 = 0;
    for (const SpectrumRow& row : spectrum_table(5, AlphaSpec::fixed(Rat(1))).rows)
        total1 += row.mult;
    CHECK(total1 == factorial(5));
    Int total2 = 0;
    for (const SpectrumRow& row : spectrum_table(4, AlphaSpec::fixed(Rat(2))).rows)
        total2 += row.mult;
    CHECK(total2 == odd_double_factorial(4));

    CHECK_THROWS_AS(spectrum_table(13, AlphaSpec::sym()), std::length_error);
    CHECK_THROWS_AS(spectrum_table(9, AlphaSpec::fixed(Rat(2))), std::length_error);

    const std::string csv = spectrum_table(3, AlphaSpec::fixed(Rat(1))).to_csv();
    CHECK(csv == "shape,eta,mult\n\"3\",2,1\n\"2,1\",-1,4\n\"1,1,1\",2,1\n");
}
