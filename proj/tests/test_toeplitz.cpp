#include <doctest.h>

#include "cbspline/scalars.hpp"
#include "cbspline/toeplitz.hpp"

using namespace cbspline;

TEST_CASE("build_toeplitz shapes and entries") {
    BandedToeplitz T = build_toeplitz(2, 6);
    CHECK(T.order == 4);
    CHECK(T.bandwidth() == 1);
    CHECK(T.entry(0, 0) == Rational(3, 4));
    CHECK(T.entry(0, 1) == Rational(1, 8));
    CHECK(T.entry(1, 0) == Rational(1, 8));
    CHECK(T.entry(0, 2) == Rational(0));

    BandedToeplitz T7 = build_toeplitz(7, 23);
    CHECK(T7.order == 16);
    CHECK(T7.bandwidth() == 3);

    BandedToeplitz T3 = build_toeplitz(3, 5);
    CHECK(T3.order == 2);
    CHECK(T3.entry(0, 0) == Rational(2, 3));
    CHECK(T3.entry(0, 1) == Rational(1, 6));

    CHECK_THROWS_AS(build_toeplitz(7, 10), std::invalid_argument);  // order < r + 1
}

TEST_CASE("periodization layout and row sums") {
    BandedToeplitz T = build_toeplitz(2, 6);
    Circulant C = periodize(T);
    CHECK(C.order == 5);
    CHECK(C.first_row[0] == Rational(3, 4));
    CHECK(C.first_row[1] == Rational(1, 8));
    CHECK(C.first_row[2] == Rational(0));
    CHECK(C.first_row[3] == Rational(0));
    CHECK(C.first_row[4] == Rational(1, 8));

    CHECK(periodize(build_toeplitz(7, 23)).order == 19);
    CHECK(periodize(build_toeplitz(7, 24)).order == 20);
}

TEST_CASE("deleting the last r rows and columns of the periodization recovers T") {
    for (auto [d, n] : {std::pair<unsigned, long>{2, 9}, {5, 14}, {7, 23}, {9, 30}}) {
        BandedToeplitz T = build_toeplitz(d, n);
        Circulant C = periodize(T);
        // leading principal block
        for (long i = 0; i < T.order; ++i) {
            for (long j = 0; j < T.order; ++j) {
                CHECK(C.entry(i, j) == T.entry(i, j));
            }
        }
        // symmetry and stochastic rows
        for (long i = 0; i < C.order; ++i) {
            Rational row_sum(0);
            for (long j = 0; j < C.order; ++j) {
                row_sum += C.entry(i, j);
                CHECK(C.entry(i, j) == C.entry(j, i));
            }
            CHECK(row_sum == Rational(1));
        }
    }
}

TEST_CASE("prime embedding scans to the nearest prime circulant order") {
    EmbeddingPlan p1 = prime_embedding_order(7, 23);
    CHECK(p1.target_order == 19);
    CHECK(p1.guarantee == EmbeddingGuarantee::nonsingular);

    EmbeddingPlan p2 = prime_embedding_order(7, 24);
    CHECK(p2.target_order == 23);  // m = 20, 21, 22 all composite

    EmbeddingPlan p3 = prime_embedding_order(2, 6);
    CHECK(p3.target_order == 5);

    CHECK(is_prime(static_cast<std::uint64_t>(p1.target_order)));
    CHECK(is_prime(static_cast<std::uint64_t>(p2.target_order)));
    for (unsigned d = 2; d <= 12; ++d) {
        EmbeddingPlan p = prime_embedding_order(d, 40);
        CHECK(is_prime(static_cast<std::uint64_t>(p.target_order)));
        CHECK(p.target_order >= p.source_order);
    }
}

TEST_CASE("ferreira embedding doubles the order and reproduces the blocks") {
    BandedToeplitz T = build_toeplitz(2, 6);
    FerreiraEmbedding f = ferreira_embed(T);
    const Circulant& C = f.circulant;
    CHECK(C.order == 8);
    const long N = T.order;
    for (long i = 0; i < N; ++i) {
        for (long j = 0; j < N; ++j) {
            CHECK(C.entry(i, j) == T.entry(i, j));                  // top-left
            CHECK(C.entry(N + i, N + j) == T.entry(i, j));          // bottom-right
            CHECK(C.entry(i, N + j) == C.entry(N + i, j));          // S symmetric placement
        }
    }
    // |b^T T^{-1} c| lies in [0, 1) here and the margin certifies psd.
    CHECK(f.condition_value.sign() >= 0);
    CHECK(f.condition_value < BigReal(1L, 256));
    CHECK(f.certified_psd);
}

TEST_CASE("embedding size formulas") {
    BigReal two(2L, 256), one(1L, 256);
    CHECK(dms_order(4, two) == 35);
    CHECK(dms_order(1, one) == 3);
    CHECK(dms_order(0, one) == 0);
    CHECK_THROWS_AS(dms_order(4, BigReal(0.5, 256)), std::invalid_argument);

    CHECK(newsam_dietrich_order(4, two) == 32);
    CHECK(newsam_dietrich_order(1, one) == 6);
    CHECK(newsam_dietrich_order(0, one) == 0);
    // monotone in kappa
    for (long n : {2L, 8L, 100L}) {
        long prev = 0;
        for (double k : {1.0, 1.5, 4.0, 32.0}) {
            long m = newsam_dietrich_order(n, BigReal(k, 256));
            CHECK(m >= prev);
            prev = m;
        }
    }
}
