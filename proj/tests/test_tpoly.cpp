#include "dpb/tpoly.hpp"

#include "dpb/exprio.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace dpb;
using testsupport::random_tpoly;

namespace {

const AlgebraSig kZ1{CoeffRing::integers(), 1};
const AlgebraSig kZ2{CoeffRing::integers(), 2};
const AlgebraSig kZ3{CoeffRing::integers(), 3};

TensorPoly tp(const AlgebraSig& sig, int arity, const char* text) {
    return parse_tpoly(text, sig, arity);
}

}  // namespace

TEST_CASE("term order: degree first, then slot-major lex") {
    // Within one algebra, compare a few hand-ordered pairs.
    auto mono = [&](const char* text) {
        return tp(kZ2, 2, text).leading_term()->first;
    };
    // Higher total degree wins.
    CHECK(term_order_cmp(mono("t1#t1"), mono("t2#1")) > 0);
    // Same degree: slot 1 decides first, t1 before t2.
    CHECK(term_order_cmp(mono("t1#t2"), mono("t2#t1")) > 0);
    CHECK(term_order_cmp(mono("t1^2#1"), mono("t1#t1")) > 0);
    CHECK(term_order_cmp(mono("t1#t1"), mono("t1#t2")) > 0);
    CHECK(term_order_cmp(mono("t1#t2"), mono("t1#t2")) == 0);

    // The leading term of a sum is the maximal term.
    TensorPoly p = tp(kZ2, 2, "t1#t2 + t2#t1 + t1^2#1 + 1#t2");
    CHECK(p.leading_term()->first == mono("t1^2#1"));
}

TEST_CASE("arithmetic in the tensor algebra") {
    TensorPoly d = tp(kZ1, 2, "t1#1 - 1#t1");
    CHECK(d * d == tp(kZ1, 2, "t1^2#1 - 2*t1#t1 + 1#t1^2"));
    TensorPoly x = tp(kZ1, 2, "t1#1"), y = tp(kZ1, 2, "1#t1");
    CHECK((x + y) * (x - y) == tp(kZ1, 2, "t1^2#1 - 1#t1^2"));
    CHECK((d - d).is_zero());
    CHECK(d + (-d) == TensorPoly::zero(kZ1, 2));
    CHECK(d.scaled(Coeff::from_integer(kZ1.ring, 0)).is_zero());

    // Cancellation inside add_term.
    TensorPoly p(kZ1, 1);
    TensorMonomial m(1, 1);
    m.slot(1) = Monomial::generator(1, 1, 3);
    p.add_term(m, Coeff::from_integer(kZ1.ring, 5));
    p.add_term(m, Coeff::from_integer(kZ1.ring, -5));
    CHECK(p.is_zero());
    CHECK(p.coefficient(m).is_zero());
}

TEST_CASE("shape mismatches are rejected") {
    CHECK_THROWS_AS((void)(tp(kZ1, 2, "t1#1") + tp(kZ1, 1, "t1")), std::invalid_argument);
    CHECK_THROWS_AS((void)(tp(kZ1, 2, "t1#1") * tp(kZ2, 2, "t1#1")), std::invalid_argument);
    AlgebraSig q1{CoeffRing::rationals(), 1};
    CHECK_THROWS_AS((void)(tp(kZ1, 1, "t1") + tp(q1, 1, "t1")), std::invalid_argument);
    CHECK_THROWS_AS(tp(kZ1, 2, "t1#1").permuted(Permutation::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("permutations act by moving slot contents") {
    // The 3-cycle sending slot 1 to 2, 2 to 3, 3 to 1.
    Permutation c = Permutation::cyclic_shift(3, 1);
    CHECK(tp(kZ3, 3, "t1#t2#t3").permuted(c) == tp(kZ3, 3, "t3#t1#t2"));
    Permutation tau = Permutation::transposition(2, 1, 2);
    CHECK(tp(kZ2, 2, "t1#t2^2").permuted(tau) == tp(kZ2, 2, "t2^2#t1"));

    CHECK(Permutation::cyclic_shift(2, 1).sign() == -1);
    CHECK(Permutation::cyclic_shift(3, 1).sign() == 1);
    CHECK(Permutation::cyclic_shift(3, 2).sign() == 1);
    CHECK(Permutation::cyclic_shift(4, 1).sign() == -1);
    CHECK(tau.sign() == -1);
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_images({0, 1}), std::invalid_argument);
}

TEST_CASE("permutation action axioms on random elements") {
    std::mt19937_64 rng(7);
    for (int step = 0; step < 50; ++step) {
        TensorPoly p = random_tpoly(rng, kZ2, 3, 5, 6, 9);
        std::vector<int> images{1, 2, 3};
        for (int i = 2; i >= 1; --i)
            std::swap(images[static_cast<std::size_t>(i)],
                      images[rng() % static_cast<std::uint64_t>(i + 1)]);
        Permutation sigma = Permutation::from_images(images);
        Permutation tau = Permutation::cyclic_shift(3, 1 + static_cast<int>(rng() % 2));
        CHECK(p.permuted(Permutation::identity(3)) == p);
        CHECK(p.permuted(sigma).permuted(sigma.inverse()) == p);
        // Acting by tau then sigma is acting by the composite sigma . tau.
        CHECK(p.permuted(tau).permuted(sigma) == p.permuted(sigma * tau));
        // The action is linear and multiplicative.
        TensorPoly q = random_tpoly(rng, kZ2, 3, 4, 5, 9);
        CHECK((p + q).permuted(sigma) == p.permuted(sigma) + q.permuted(sigma));
        CHECK((p * q).permuted(sigma) == p.permuted(sigma) * q.permuted(sigma));
    }
}

TEST_CASE("tensor product, embedding, slot insertion, slot multiplication") {
    CHECK(tensor_product(tp(kZ2, 1, "t1 + t2"), tp(kZ2, 2, "t1#1")) ==
          tp(kZ2, 3, "t1#t1#1 + t2#t1#1"));
    CHECK(embed_in_slot(tp(kZ2, 1, "t2^2"), 3, 2) == tp(kZ2, 3, "1#t2^2#1"));
    CHECK(insert_unit_slot(tp(kZ2, 2, "t1#t2"), 2) == tp(kZ2, 3, "t1#1#t2"));
    CHECK(insert_unit_slot(tp(kZ2, 2, "t1#t2"), 1) == tp(kZ2, 3, "1#t1#t2"));
    CHECK(insert_unit_slot(tp(kZ2, 2, "t1#t2"), 3) == tp(kZ2, 3, "t1#t2#1"));
    CHECK(multiply_slots(tp(kZ1, 2, "t1#t1^2 - t1^2#t1")).is_zero());
    CHECK(multiply_slots(tp(kZ2, 3, "t1#t2#t1")) == tp(kZ2, 1, "t1^2*t2"));
}

TEST_CASE("slot multiplication is an algebra homomorphism") {
    std::mt19937_64 rng(11);
    for (int step = 0; step < 50; ++step) {
        TensorPoly a = random_tpoly(rng, kZ2, 2, 4, 5, 9);
        TensorPoly b = random_tpoly(rng, kZ2, 2, 4, 5, 9);
        CHECK(multiply_slots(a * b) == multiply_slots(a) * multiply_slots(b));
        CHECK(multiply_slots(a + b) == multiply_slots(a) + multiply_slots(b));
    }
}

TEST_CASE("homogeneous components recombine") {
    std::mt19937_64 rng(13);
    for (int step = 0; step < 30; ++step) {
        TensorPoly p = random_tpoly(rng, kZ2, 2, 8, 7, 9);
        TensorPoly sum(kZ2, 2);
        for (const auto& [deg, part] : p.homogeneous_components()) {
            for (const auto& [m, c] : part.terms()) CHECK(m.total_degree() == deg);
            CHECK_FALSE(part.is_zero());
            sum += part;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("linear division examples") {
    TensorPoly p = tp(kZ1, 2, "t1^2#1 - 1#t1^2");
    DivisionResult r = p.divide_linear(1, 1, 2);
    CHECK(r.quotient == tp(kZ1, 2, "t1#1 + 1#t1"));
    CHECK(r.remainder.is_zero());

    DivisionResult s = tp(kZ1, 2, "t1#1").divide_linear(1, 1, 2);
    CHECK(s.quotient == tp(kZ1, 2, "1#1"));
    CHECK(s.remainder == tp(kZ1, 2, "1#t1"));
}

TEST_CASE("linear division: exactness, uniqueness, regularity") {
    std::mt19937_64 rng(17);
    for (int step = 0; step < 60; ++step) {
        int arity = 2 + static_cast<int>(rng() % 2);
        const AlgebraSig& sig = kZ2;
        int gen = 1 + static_cast<int>(rng() % 2);
        int slot_num = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(arity));
        int slot_den = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(arity));
        if (slot_den == slot_num) slot_den = slot_num % arity + 1;
        TensorPoly divisor = embed_in_slot(TensorPoly::generator(sig, gen), arity, slot_num) -
                             embed_in_slot(TensorPoly::generator(sig, gen), arity, slot_den);

        TensorPoly p = random_tpoly(rng, sig, arity, 6, 6, 9);
        DivisionResult dr = p.divide_linear(gen, slot_num, slot_den);
        // Defining identity.
        CHECK(divisor * dr.quotient + dr.remainder == p);
        // The remainder has no occurrence of the generator in slot_num.
        for (const auto& [m, c] : dr.remainder.terms())
            CHECK(m.slot(slot_num).exp(gen) == 0);
        // The divisor is regular: multiples divide back exactly.
        DivisionResult back = (divisor * p).divide_linear(gen, slot_num, slot_den);
        CHECK(back.remainder.is_zero());
        CHECK(back.quotient == p);
    }
}

TEST_CASE("division rejects bad slots") {
    TensorPoly p = tp(kZ1, 2, "t1#1");
    CHECK_THROWS_AS(p.divide_linear(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(p.divide_linear(1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(p.divide_linear(2, 1, 2), std::invalid_argument);
}
