#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "pbq/algebra.hpp"
#include "pbq/errors.hpp"
#include "pbq/fock.hpp"
#include "pbq/parse.hpp"

using namespace pbq;

namespace {

AlgebraElement gen(const QContext& ctx, Generator g) { return AlgebraElement::generator(ctx, g); }

AlgebraElement word_product_left(const QContext& ctx, const std::vector<Generator>& word) {
    AlgebraElement acc = AlgebraElement::one(ctx);
    for (Generator g : word) acc = acc * gen(ctx, g);
    return acc;
}

AlgebraElement word_product_right(const QContext& ctx, const std::vector<Generator>& word) {
    AlgebraElement acc = AlgebraElement::one(ctx);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = gen(ctx, *it) * acc;
    return acc;
}

std::vector<Generator> random_word(std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(0, 3);
    std::size_t len = len_dist(rng);
    std::vector<Generator> word;
    word.reserve(len);
    for (std::size_t i = 0; i < len; ++i) word.push_back(static_cast<Generator>(gen_dist(rng)));
    return word;
}

AlgebraElement random_element(const QContext& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    AlgebraElement acc = word_product_left(ctx, random_word(rng, 4));
    acc = Scalar::exact_long(coeff_dist(rng)) * acc;
    acc = acc + Scalar::exact_long(coeff_dist(rng)) * word_product_left(ctx, random_word(rng, 4));
    return acc;
}

}  // namespace

TEST_CASE("context validates the deformation parameter") {
    CHECK_NOTHROW(QContext(1, 2));
    CHECK_NOTHROW(QContext(3, 4));
    CHECK_NOTHROW(QContext(3, 12));          // reducible fraction, q still a primitive phase
    CHECK_THROWS_AS(QContext(0, 5), UndefinedParameterError);   // q = 1
    CHECK_THROWS_AS(QContext(4, 2), UndefinedParameterError);   // q = -1
    CHECK_THROWS_AS(QContext(8, 2), UndefinedParameterError);   // q = 1 again
    CHECK_THROWS_AS(QContext(1, 0), UndefinedParameterError);
}

TEST_CASE("normal ordering implements the defining relations") {
    QContext ctx(1, 2);
    const Scalar one = Scalar::exact_long(1);

    SUBCASE("K a+ = q^2 a+ K") {
        AlgebraElement lhs = normal_order(ctx, {{one, {Generator::K, Generator::Aplus}}});
        AlgebraElement rhs(ctx);
        rhs.add_term(MonomialKey{1, 0, 1}, ctx.q_scalar(2));
        CHECK(lhs == rhs);
    }

    SUBCASE("K a- = q^-2 a- K") {
        AlgebraElement lhs = normal_order(ctx, {{one, {Generator::K, Generator::Aminus}}});
        AlgebraElement rhs(ctx);
        rhs.add_term(MonomialKey{0, 1, 1}, ctx.q_scalar(-2));
        CHECK(lhs == rhs);
    }

    SUBCASE("anticommutator collapses to (K - K^-1)/(q - q^-1)") {
        AlgebraElement lhs = normal_order(
            ctx, {{one, {Generator::Aminus, Generator::Aplus}},
                  {one, {Generator::Aplus, Generator::Aminus}}});
        AlgebraElement rhs(ctx);
        rhs.add_term(MonomialKey{0, 0, 1}, one / ctx.q_minus_qinv());
        rhs.add_term(MonomialKey{0, 0, -1}, -(one / ctx.q_minus_qinv()));
        CHECK(lhs == rhs);
    }

    SUBCASE("a- a+ rewrites to -a+ a- plus the Cartan part") {
        AlgebraElement swapped = normal_order(ctx, {{one, {Generator::Aminus, Generator::Aplus}}});
        CHECK(swapped.terms().size() == 3);
        AlgebraElement back = swapped + gen(ctx, Generator::Aplus) * gen(ctx, Generator::Aminus);
        CHECK(back.terms().size() == 2);  // only the K and K^-1 summands remain
        CHECK(back.terms().count(MonomialKey{0, 0, 1}) == 1);
        CHECK(back.terms().count(MonomialKey{0, 0, -1}) == 1);
    }

    SUBCASE("K K^-1 = 1 and the empty word is 1") {
        CHECK(normal_order(ctx, {{one, {Generator::K, Generator::Kinv}}}) ==
              AlgebraElement::one(ctx));
        CHECK(normal_order(ctx, {{one, {Generator::Kinv, Generator::K}}}) ==
              AlgebraElement::one(ctx));
        CHECK(normal_order(ctx, {{one, {}}}) == AlgebraElement::one(ctx));
    }

    SUBCASE("like terms collect") {
        AlgebraElement lhs = normal_order(ctx, {{Scalar::exact_long(2), {Generator::Aplus}},
                                                {one, {Generator::Aplus}}});
        AlgebraElement rhs(ctx);
        rhs.add_term(MonomialKey{1, 0, 0}, Scalar::exact_long(3));
        CHECK(lhs == rhs);
        AlgebraElement cancel = normal_order(ctx, {{one, {Generator::Aplus}},
                                                   {-one, {Generator::Aplus}}});
        CHECK(cancel.is_zero());
    }
}

TEST_CASE("normal ordering terminates and is order independent on random words") {
    for (auto [m, k] : {std::pair<long, long>{1, 2}, {1, 3}, {2, 3}}) {
        QContext ctx(m, k);
        std::mt19937 rng(20240'000u + static_cast<unsigned>(10 * m + k));
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<Generator> word = random_word(rng, 8);
            AlgebraElement direct = normal_order(ctx, {{Scalar::exact_long(1), word}});
            AlgebraElement left = word_product_left(ctx, word);
            AlgebraElement right = word_product_right(ctx, word);
            REQUIRE(direct == left);
            REQUIRE(direct == right);
        }
    }
}

TEST_CASE("normal ordering distributes over split products") {
    QContext ctx(1, 3);
    std::mt19937 rng(777u);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Generator> word = random_word(rng, 8);
        AlgebraElement whole = normal_order(ctx, {{Scalar::exact_long(1), word}});
        for (std::size_t cut = 0; cut <= word.size(); ++cut) {
            std::vector<Generator> head(word.begin(), word.begin() + cut);
            std::vector<Generator> tail(word.begin() + cut, word.end());
            AlgebraElement split = normal_order(ctx, {{Scalar::exact_long(1), head}}) *
                                   normal_order(ctx, {{Scalar::exact_long(1), tail}});
            REQUIRE(whole == split);
        }
    }
}

TEST_CASE("omega swaps the ladder pair and inverts K") {
    QContext ctx(1, 2);
    CHECK(omega(gen(ctx, Generator::Aplus)) == gen(ctx, Generator::Aminus));
    CHECK(omega(gen(ctx, Generator::Aminus)) == gen(ctx, Generator::Aplus));
    CHECK(omega(gen(ctx, Generator::K)) == gen(ctx, Generator::Kinv));
    CHECK(omega(gen(ctx, Generator::Kinv)) == gen(ctx, Generator::K));

    SUBCASE("antilinearity conjugates coefficients") {
        Scalar i_unit(CyclotomicNumber::zeta(4, 1));
        AlgebraElement lhs = omega(i_unit * gen(ctx, Generator::K));
        AlgebraElement rhs = (-i_unit) * gen(ctx, Generator::Kinv);
        CHECK(lhs == rhs);
    }

    SUBCASE("product order reverses") {
        AlgebraElement ap = gen(ctx, Generator::Aplus);
        AlgebraElement am = gen(ctx, Generator::Aminus);
        CHECK(omega(ap * am) == ap * am);  // omega(a-) omega(a+) = a+ a-
        AlgebraElement lhs = omega(gen(ctx, Generator::K) * ap);
        CHECK(lhs == am * gen(ctx, Generator::Kinv));
    }
}

TEST_CASE("omega is an antilinear antihomomorphism and an involution") {
    QContext ctx(1, 3);
    std::mt19937 rng(424242u);
    for (int trial = 0; trial < 1000; ++trial) {
        AlgebraElement x = random_element(ctx, rng);
        AlgebraElement y = random_element(ctx, rng);
        REQUIRE(omega(x * y) == omega(y) * omega(x));
        REQUIRE(omega(x + y) == omega(x) + omega(y));
        REQUIRE(omega(omega(x)) == x);
    }
}

TEST_CASE("grading marks ladder parity") {
    QContext ctx(1, 2);
    CHECK(grade(gen(ctx, Generator::Aplus)) == Grade::odd);
    CHECK(grade(gen(ctx, Generator::Aminus)) == Grade::odd);
    CHECK(grade(gen(ctx, Generator::K)) == Grade::even);
    CHECK(grade(AlgebraElement::one(ctx)) == Grade::even);
    CHECK(grade(gen(ctx, Generator::Aplus) * gen(ctx, Generator::Aminus)) == Grade::even);
    CHECK(grade(gen(ctx, Generator::Aplus) + gen(ctx, Generator::K)) == Grade::mixed);
    CHECK(grade(gen(ctx, Generator::Aplus) * gen(ctx, Generator::Aplus) +
                gen(ctx, Generator::Kinv)) == Grade::even);
}

TEST_CASE("powers of invertible monomials accept negative exponents") {
    QContext ctx(1, 2);
    AlgebraElement k_elem = gen(ctx, Generator::K);
    AlgebraElement km3 = pow(k_elem, -3);
    AlgebraElement expect(ctx);
    expect.add_term(MonomialKey{0, 0, -3}, Scalar::exact_long(1));
    CHECK(km3 == expect);
    CHECK(pow(k_elem, -3) * pow(k_elem, 3) == AlgebraElement::one(ctx));
    CHECK(pow(gen(ctx, Generator::Aplus), 0) == AlgebraElement::one(ctx));
    CHECK(pow(ctx.q_scalar(1) * AlgebraElement::one(ctx), -2) ==
          ctx.q_scalar(-2) * AlgebraElement::one(ctx));
    CHECK_THROWS_AS(pow(gen(ctx, Generator::Aplus), -1), OutOfRangeError);
    CHECK_THROWS_AS(pow(gen(ctx, Generator::Aplus) + k_elem, -1), OutOfRangeError);
}

TEST_CASE("casimir element is even and central") {
    for (auto [m, k] : {std::pair<long, long>{1, 2}, {1, 3}, {1, 4}, {3, 4}, {2, 5}}) {
        QContext ctx(m, k);
        AlgebraElement c2 = casimir_element(m, k);
        CHECK(grade(c2) == Grade::even);
        for (Generator g : {Generator::Aplus, Generator::Aminus, Generator::K, Generator::Kinv}) {
            AlgebraElement x = gen(ctx, g);
            REQUIRE(c2 * x == x * c2);
        }
    }
}

TEST_CASE("casimir eigenvalue on the weight-1 vacuum module is 3") {
    ModuleSpec spec{1, 2, Weight::from_rational(make_rational(1)), 0, 1};
    Matrix c2 = evaluate_element(casimir_element(1, 2), module_matrices(spec));
    Scalar value;
    REQUIRE(c2.is_scalar(&value));
    CHECK(value == Scalar::exact_long(3));
}

TEST_CASE("scalar recognition and zero pruning") {
    QContext ctx(1, 2);
    AlgebraElement five = Scalar::exact_long(5) * AlgebraElement::one(ctx);
    Scalar value;
    CHECK(five.is_scalar(&value));
    CHECK(value == Scalar::exact_long(5));
    CHECK_FALSE(gen(ctx, Generator::K).is_scalar());
    AlgebraElement x = gen(ctx, Generator::Aplus);
    CHECK((x - x).is_zero());
    CHECK((x - x).terms().empty());
}
