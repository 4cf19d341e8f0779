#include "dpb/jacobi.hpp"

#include <stdexcept>

namespace dpb {

namespace {

// (phi (x) 1) applied to an arity-3 element: the table's extension on slots
// (1,2), identity on slot 3.
TensorPoly apply_left(const GenTable& table, const TensorPoly& p) {
    const AlgebraSig& sig = table.sig();
    TensorPoly out(sig, 3);
    for (const auto& [m, c] : p.terms()) {
        TensorPoly first(sig, 1), second(sig, 1);
        first.add_term(TensorMonomial({m.slot(1)}), Coeff::one(sig.ring));
        second.add_term(TensorMonomial({m.slot(2)}), Coeff::one(sig.ring));
        TensorPoly inner = evaluate(table, {first, second});
        TensorPoly third(sig, 1);
        third.add_term(TensorMonomial({m.slot(3)}), Coeff::one(sig.ring));
        out += tensor_product(inner, third).scaled(c);
    }
    return out;
}

}  // namespace

TensorPoly jacobiator(const GenTable& table, const TensorPoly& a, const TensorPoly& b,
                      const TensorPoly& c) {
    if (table.arity() != 2)
        throw std::invalid_argument("jacobiator is defined for arity-2 tables");
    const AlgebraSig& sig = table.sig();
    for (const TensorPoly* arg : {&a, &b, &c})
        if (arg->sig() != sig || arg->arity() != 1)
            throw std::invalid_argument("jacobiator arguments must be arity-1 elements");

    const TensorPoly* args[3] = {&a, &b, &c};
    TensorPoly out(sig, 3);
    for (int j = 0; j < 3; ++j) {
        Permutation sigma = Permutation::cyclic_shift(3, j);
        // sigma^{-1} place-permutes the inputs: slot k receives arg sigma(k).
        const TensorPoly& u = *args[sigma.image(1) - 1];
        const TensorPoly& v = *args[sigma.image(2) - 1];
        const TensorPoly& w = *args[sigma.image(3) - 1];
        // (1 (x) phi): u (x) phi(v, w); then (phi (x) 1) and the final shift.
        TensorPoly inner = tensor_product(u, evaluate(table, {v, w}));
        out += apply_left(table, inner).permuted(sigma);
    }
    return out;
}

GenTable jacobiator_table(const GenTable& table) {
    GenTable jac(table.sig(), 3);
    for (const auto& tuple : GenTable::all_tuples(table.num_gens(), 3)) {
        jac.set(tuple, jacobiator(table, TensorPoly::generator(table.sig(), tuple[0]),
                                  TensorPoly::generator(table.sig(), tuple[1]),
                                  TensorPoly::generator(table.sig(), tuple[2])));
    }
    return jac;
}

PoissonReport check_double_poisson(const GenTable& table, const CheckOptions& opts) {
    PoissonReport report;
    report.multiderivation = check_multiderivation(table, opts);
    report.sgn_equivariance = check_sgn_equivariance(table);
    report.is_double_bracket = report.multiderivation.passed && report.sgn_equivariance.passed;

    report.jacobiator_vanishes = true;
    for (const auto& tuple : GenTable::all_tuples(table.num_gens(), 3)) {
        TensorPoly jac = jacobiator(table, TensorPoly::generator(table.sig(), tuple[0]),
                                    TensorPoly::generator(table.sig(), tuple[1]),
                                    TensorPoly::generator(table.sig(), tuple[2]));
        if (!jac.is_zero()) {
            report.jacobiator_vanishes = false;
            report.jacobiator_witness = {tuple, std::move(jac)};
            break;
        }
    }
    report.is_double_poisson = report.is_double_bracket && report.jacobiator_vanishes;
    return report;
}

TensorPoly standard_jacobiator(const TensorPoly& psi) {
    if (psi.arity() != 2)
        throw std::invalid_argument("standard_jacobiator expects an arity-2 element");
    if (psi.permuted(Permutation::transposition(2, 1, 2)) != -psi)
        throw std::invalid_argument("standard_jacobiator expects an antisymmetric element");
    TensorPoly prod = insert_unit_slot(psi, 2) * insert_unit_slot(psi, 1);
    TensorPoly out(psi.sig(), 3);
    for (int j = 0; j < 3; ++j) out += prod.permuted(Permutation::cyclic_shift(3, j));
    return out;
}

TensorPoly induced_bracket(const GenTable& table, const TensorPoly& a, const TensorPoly& b) {
    if (table.arity() != 2)
        throw std::invalid_argument("induced_bracket is defined for arity-2 tables");
    return multiply_slots(evaluate(table, {a, b}));
}

}  // namespace dpb
