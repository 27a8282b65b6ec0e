#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "treespectra/charpoly.hpp"
#include "treespectra/closed_form.hpp"

using namespace treespectra;

TEST_CASE("path indices") {
    CHECK(path_index(4, 1) == BigRational(5, 4));
    CHECK(path_index(4, 2) == BigRational(1, 4));
    CHECK(path_index(8, 2) == BigRational(13, 8));
    CHECK(path_index(5, 0) == BigRational(1));
    CHECK(path_index(5, 7) == BigRational(0));

    // small-n fallback
    CHECK(path_index(1, 0) == BigRational(1));
    CHECK(path_index(2, 1) == BigRational(1));
    CHECK(path_index(2, 2) == BigRational(0));
    CHECK_THROWS_AS(path_index(0, 0), std::invalid_argument);

    for (int n = 3; n <= 20; ++n) {
        MatchingIndexVector dp = randic_indices_tree(build_path(n), -1);
        for (int i = 0; i <= dp.k; ++i)
            CHECK(path_index(n, i) == dp.values[static_cast<size_t>(i)]);
        CHECK(path_index(n, dp.k + 1) == BigRational(0));
    }
}

TEST_CASE("path reduced polynomial") {
    RationalPolynomial y_minus_1(std::vector<BigRational>{BigRational(-1), BigRational(1)});

    CHECK(path_reduced_polynomial(4) ==
          y_minus_1 * RationalPolynomial(std::vector<BigRational>{BigRational(-1, 4), BigRational(1)}));
    CHECK(path_reduced_polynomial(3) == y_minus_1);
    CHECK(path_reduced_polynomial(2) == y_minus_1);
    CHECK(path_reduced_polynomial(1) == RationalPolynomial::constant(BigRational(1)));

    // k(P_5) = 2 and the sum form gives (y-1)(C_{0,3} y - C_{1,3}/4) = (y-1)(y-1/2)
    CHECK(path_reduced_polynomial(5) ==
          y_minus_1 * RationalPolynomial(std::vector<BigRational>{BigRational(-1, 2), BigRational(1)}));

    for (int n = 2; n <= 16; ++n) {
        RationalPolynomial psi = path_reduced_polynomial(n);
        CHECK(psi == reduced_polynomial(randic_indices_tree(build_path(n), -1)));
        CHECK(psi(BigRational(1)) == BigRational(0));  // divisible by y - 1
    }
}

TEST_CASE("starlike report examples") {
    StarlikeReport r = starlike_report(StarlikeSpec({1, 1, 1, 1, 3}));
    CHECK(r.k == 2);
    CHECK(r.r_minus1 == BigRational(33, 20));
    CHECK(r.max_matching_count == 9);
    CHECK(r.r_top == BigRational(13, 20));
    CHECK(r.mult_one == 4);

    StarlikeReport r115 = starlike_report(StarlikeSpec({1, 1, 5}));
    CHECK(r115.k == 3);
    CHECK(r115.r_minus1 == BigRational(25, 12));
    CHECK(r115.r_top == BigRational(11, 48));
    CHECK(r115.mult_one == 2);

    // all-even branches use the degenerate closed forms
    StarlikeReport r222 = starlike_report(StarlikeSpec({2, 2, 2}));
    CHECK(r222.k == 3);
    CHECK(r222.max_matching_count == 4);
    CHECK(r222.r_top == BigRational(1, 4));
    CHECK(r222.mult_one == 1);  // n = 7, k = 3
}

TEST_CASE("starlike report matches the generic route exhaustively") {
    for (const StarlikeSpec& spec : testing::all_starlike_partitions(14)) {
        Tree t = build_starlike(spec);
        MatchingIndexVector dp = randic_indices_tree(t, -1);
        StarlikeReport r = starlike_report(spec);
        CHECK(r.k == dp.k);
        CHECK(r.r_minus1 == dp.values[1]);
        CHECK(r.r_top == dp.values[static_cast<size_t>(dp.k)]);
        CHECK(r.mult_one == spec.n() - 2 * dp.k);
        CHECK(r.max_matching_count ==
              static_cast<long>(enumerate_matchings(t.graph(), dp.k).size()));
    }
}

TEST_CASE("odd-count census variant disagrees where odd branches are long") {
    // On T(1,1,5) the odd-count form gives 2, the true value is 25/12.
    StarlikeSpec spec({1, 1, 5});
    BigRational variant = starlike_r1_odd_count_form(spec);
    BigRational truth = randic_indices_tree(build_starlike(spec), -1).values[1];
    CHECK(variant == BigRational(2));
    CHECK(truth == BigRational(25, 12));
    CHECK(variant != truth);

    // it agrees whenever every odd branch has length 1
    for (const auto& lengths : {std::vector<int>{1, 1, 1}, {1, 2, 2}, {1, 1, 2, 4}, {2, 2, 2}}) {
        StarlikeSpec s(lengths);
        if (s.num_odd_branches() == s.num_unit_branches())
            CHECK(starlike_r1_odd_count_form(s) == starlike_report(s).r_minus1);
    }
}

TEST_CASE("double starlike index recurrence") {
    MatchingIndexVector h244 = double_starlike_indices(DoubleStarlikeSpec(2, 4, 4));
    CHECK(h244.values ==
          std::vector<BigRational>{1, BigRational(41, 25), BigRational(16, 25)});

    MatchingIndexVector h435 = double_starlike_indices(DoubleStarlikeSpec(4, 3, 5));
    CHECK(h435.values == std::vector<BigRational>{1, BigRational(49, 24), BigRational(115, 96),
                                                  BigRational(5, 32)});
    CHECK(h435.k == 3);

    for (int m = 2; m <= 8; ++m)
        for (int p = 2; p <= 5; ++p)
            for (int q = 2; q <= 5; ++q) {
                DoubleStarlikeSpec spec(m, p, q);
                MatchingIndexVector cf = double_starlike_indices(spec);
                MatchingIndexVector dp = randic_indices_tree(build_double_starlike(spec), -1);
                REQUIRE(cf.k == dp.k);
                CHECK(cf.values == dp.values);
            }
}

TEST_CASE("double starlike psi recurrence") {
    for (int m = 2; m <= 8; ++m)
        for (int p = 2; p <= 5; ++p)
            for (int q = 2; q <= 5; ++q) {
                DoubleStarlikeSpec spec(m, p, q);
                CHECK(double_starlike_reduced(spec) ==
                      reduced_polynomial(double_starlike_indices(spec)));
            }
}

TEST_CASE("eigenvalue-one multiplicity of double starlike trees") {
    CHECK(eigenvalue_one_multiplicity(DoubleStarlikeSpec(2, 4, 4)) == 6);
    CHECK(eigenvalue_one_multiplicity(DoubleStarlikeSpec(4, 3, 5)) == 6);
    CHECK(eigenvalue_one_multiplicity(DoubleStarlikeSpec(3, 2, 2)) == 3);
    for (int m = 2; m <= 7; ++m)
        for (int p = 2; p <= 4; ++p)
            for (int q = 2; q <= 4; ++q) {
                DoubleStarlikeSpec spec(m, p, q);
                int k = matching_number(build_double_starlike(spec).graph());
                CHECK(eigenvalue_one_multiplicity(spec) == spec.n() - 2 * k);
            }
}

TEST_CASE("cospectrality within a fixed path length") {
    CHECK(cospectral_double_starlike(DoubleStarlikeSpec(4, 3, 5), DoubleStarlikeSpec(4, 5, 3)) ==
          CospectralResult::Isomorphic);
    CHECK(cospectral_double_starlike(DoubleStarlikeSpec(4, 3, 5), DoubleStarlikeSpec(4, 4, 4)) ==
          CospectralResult::NotCospectral);
    CHECK(cospectral_double_starlike(DoubleStarlikeSpec(2, 4, 4), DoubleStarlikeSpec(2, 4, 4)) ==
          CospectralResult::Isomorphic);
    CHECK_THROWS_AS(
        cospectral_double_starlike(DoubleStarlikeSpec(2, 3, 3), DoubleStarlikeSpec(3, 3, 3)),
        std::invalid_argument);

    // psi can collide across different vertex counts; the spectra still differ
    // through the multiplicity of eigenvalue 1
    DoubleStarlikeSpec a(2, 2, 9), b(2, 4, 3);
    CHECK(double_starlike_reduced(a) == double_starlike_reduced(b));
    CHECK(cospectral_double_starlike(a, b) == CospectralResult::NotCospectral);
    DoubleStarlikeSpec c(3, 2, 5), d(3, 3, 3);
    CHECK(double_starlike_reduced(c) == double_starlike_reduced(d));
    CHECK(cospectral_double_starlike(c, d) == CospectralResult::NotCospectral);
}
