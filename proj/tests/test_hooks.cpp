#include "jackd/hooks.hpp"

#include "jackd/colored.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace jackd;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
const AlphaPoly kAlpha = AlphaPoly::variable();
}  // namespace

TEST_CASE("single-cell hooks") {
    CHECK(lower_hook(P({2, 1}), {1, 1}) == kAlpha + AlphaPoly(2));
    CHECK(lower_hook(P({5}), {1, 5}) == AlphaPoly(1));
    CHECK(lower_hook(P({10, 6, 3, 1}), {1, 1}) == AlphaPoly::linear(Rat(9), Rat(4)));
    CHECK(upper_hook(P({2, 1}), {1, 1}) == AlphaPoly::linear(Rat(2), Rat(1)));
    CHECK(upper_hook(P({1}), {1, 1}) == kAlpha);
    CHECK(upper_hook(P({4}), {1, 1}) == AlphaPoly::linear(Rat(4), Rat(0)));
    CHECK_THROWS_AS(lower_hook(P({2, 1}), {2, 2}), std::domain_error);
}

TEST_CASE("first-row products") {
    CHECK(principal_lower_hook_product(P({2, 1})) == kAlpha + AlphaPoly(2));
    CHECK(principal_lower_hook_product(Partition()) == AlphaPoly(1));
    CHECK(principal_lower_hook_product(P({5})).eval(Rat(1)) == 120);
    // 13!/(12*9*5)
    CHECK(principal_lower_hook_product(P({10, 6, 3, 1})).eval(Rat(1)) == 11531520);
}

TEST_CASE("shifted first-row products and their zeros") {
    const Partition lam = P({10, 6, 3, 1});
    for (int j = 0; j <= 10; ++j) {
        CHECK(shifted_first_row_product(lam, j) ==
              first_row_product_poly(lam).eval(Rat(j)));
        const bool zero1 = shifted_first_row_product(lam, j).eval(Rat(1)) == 0;
        const bool vertical = j == 0 || j == 5 || j == 9;
        CHECK(zero1 == !vertical);
        const bool zero2 = shifted_first_row_product(lam, j).eval(Rat(2)) == 0;
        CHECK(zero2 == (j == 5 || j == 6 || j == 7));
    }
    CHECK(shifted_first_row_product(P({4, 2}), 0) ==
          principal_lower_hook_product(P({4, 2})));

    // The zero set at parameter 1 is exactly the complement of the vertical
    // edge indices, for every shape.
    for (int n = 1; n <= 8; ++n)
        for (const Partition& shape : partitions_of(n)) {
            const auto nu = boundary_vertical_indices(shape);
            const std::set<int> vertical(nu.begin(), nu.end());
            for (int j = 0; j <= shape.part(1); ++j)
                CHECK((shifted_first_row_product(shape, j).eval(Rat(1)) != 0) ==
                      (vertical.count(j) > 0));
        }
}

TEST_CASE("column minors") {
    CHECK(column_minor(P({2, 1}), {1}) == P({1}));
    CHECK(column_minor(P({2, 1}), {2}) == P({1, 1}));
    CHECK(column_minor(P({4, 2}), {}) == P({4, 2}));
    CHECK_THROWS_AS(column_minor(P({2, 1}), {3}), std::domain_error);
    CHECK_THROWS_AS(column_minor(P({2, 1}), {1, 1}), std::domain_error);

    // Hook-value shortcut equals the product over the reassembled shape.
    for (int n = 1; n <= 8; ++n)
        for (const Partition& shape : partitions_of(n)) {
            for (int c = 1; c <= shape.part(1); ++c)
                CHECK(column_minor_product(shape, {c}) ==
                      principal_lower_hook_product(column_minor(shape, {c})));
            if (shape.part(1) >= 3) {
                const std::vector<int> cols{1, shape.part(1)};
                CHECK(column_minor_product(shape, cols) ==
                      principal_lower_hook_product(column_minor(shape, cols)));
            }
        }
}

TEST_CASE("column minor sums") {
    CHECK(column_minor_sum(P({2, 1}), 1) == AlphaPoly(3));
    CHECK(column_minor_sum(P({3, 2}), 0) == principal_lower_hook_product(P({3, 2})));
    CHECK(column_minor_sum(P({3, 2}), 4).is_zero());
    // Expansion over first minors: a * 3 = (a + 2) + (a - 1) * 2.
    CHECK(kAlpha * column_minor_sum(P({2, 1}), 1) ==
          principal_lower_hook_product(P({2, 1})) +
              (kAlpha - AlphaPoly(1)) * AlphaPoly(2));
    for (int n = 1; n <= 8; ++n)
        for (const Partition& shape : partitions_of(n))
            for (int k = 0; k <= shape.part(1); ++k)
                CHECK(column_minor_sum_subsets(shape, k) ==
                      column_minor_sum_differences(shape, k));
}

TEST_CASE("tail gap products") {
    CHECK(tail_gap_product(P({2, 1}), -1) == AlphaPoly(1));
    CHECK(tail_gap_product(P({2, 1}), 0) == kAlpha - AlphaPoly(1));
    CHECK(tail_gap_product(P({5}), 0) == kAlpha - AlphaPoly(1));
    CHECK_THROWS_AS(tail_gap_product(P({2, 1}), 2), std::domain_error);
}

TEST_CASE("falling basis coefficients") {
    // Single column of height 3: (3, -1).
    CHECK(falling_basis_coeffs(P({1, 1, 1})) ==
          std::vector<AlphaPoly>{AlphaPoly(3), AlphaPoly(-1)});
    // Width two: (h2*(a + h1), -(h1 + h2), 1) with column heights h1, h2.
    CHECK(falling_basis_coeffs(P({2, 2})) ==
          std::vector<AlphaPoly>{(kAlpha + AlphaPoly(2)) * Rat(2), AlphaPoly(-4),
                                 AlphaPoly(1)});
    // Summing the coefficients reproduces the derangement counts.
    AlphaPoly total;
    for (const AlphaPoly& c : falling_basis_coeffs(P({3, 2}))) total += c;
    CHECK(total == derangement_count_poly(P({3, 2})));
}

TEST_CASE("extended hook products") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition& shape : partitions_of(n))
            CHECK(extended_hook_product(shape, 1, 0) ==
                  principal_lower_hook_product(shape));
    CHECK(extended_hook_product(P({10, 6, 3, 1}), 3, 0).eval(Rat(1)) == 80640);
    CHECK(extended_hook_product(P({2, 2}), 2, 0).eval(Rat(1)) == 2);
    CHECK_THROWS_AS(extended_hook_product(P({2, 2}), 3, 0), std::domain_error);

    // Block factorization of the shifted first-row product at parameter 2:
    // with the complement factors as upper hooks plus the shift, row 3 of
    // (10,6,3,1) covers the shifts 8, 9, 10 up to the predicted sign. The
    // all-lower-minus flavor does not.
    const Partition lam = P({10, 6, 3, 1});
    for (int jp = 0; jp <= 2; ++jp) {
        const Rat whole = shifted_first_row_product(lam, 8 + jp).eval(Rat(2));
        const Rat blocks =
            extended_hook_product(lam, 3, jp, ExtendedHookFlavor::RowLowerCompUpperPlus)
                .eval(Rat(2));
        CHECK(whole == -blocks);  // (-1)^(lam_1 - lam_3) = -1
    }
    CHECK(shifted_first_row_product(lam, 9).eval(Rat(2)) !=
          -extended_hook_product(lam, 3, 1, ExtendedHookFlavor::RowLowerCompLowerMinus)
               .eval(Rat(2)));
}
