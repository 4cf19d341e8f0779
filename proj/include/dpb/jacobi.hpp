#pragma once

// The double Jacobiator of a binary bracket table, the double Poisson
// decision procedure, and the closed-form Jacobiator of standard brackets.

#include "dpb/bracket.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dpb {

// Jac(a,b,c) = sum over the three cyclic shifts sigma of
//   sigma . ( (phi (x) 1) ( (1 (x) phi) (sigma^{-1} . (a (x) b (x) c)) ) )
// where phi is the Leibniz extension of the arity-2 table.
TensorPoly jacobiator(const GenTable& table, const TensorPoly& a, const TensorPoly& b,
                      const TensorPoly& c);

// Jac on all generator triples, as an arity-3 table.
GenTable jacobiator_table(const GenTable& table);

struct PoissonReport {
    CheckReport multiderivation;
    CheckReport sgn_equivariance;
    bool is_double_bracket = false;
    bool jacobiator_vanishes = false;
    // Double bracket with identically vanishing Jacobiator.
    bool is_double_poisson = false;
    // A generator triple with nonzero Jacobiator, when one exists.
    std::optional<std::pair<std::vector<int>, TensorPoly>> jacobiator_witness;
};

PoissonReport check_double_poisson(const GenTable& table, const CheckOptions& opts = {});

// The closed form of the Jacobiator of the standard bracket attached to an
// antisymmetric psi (arity 2, tau.psi = -psi; throws otherwise):
//   J(psi) = sum over cyclic sigma of sigma . (psi_13 * psi_23)
// with psi_13 = a (x) 1 (x) b and psi_23 = 1 (x) a (x) b slotwise.
TensorPoly standard_jacobiator(const TensorPoly& psi);

// mu({{a,b}}): the arity-1 bracket induced by slot multiplication.
TensorPoly induced_bracket(const GenTable& table, const TensorPoly& a, const TensorPoly& b);

}  // namespace dpb
