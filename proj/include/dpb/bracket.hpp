#pragma once

// n-ary bracket tables on R[t_1..t_d] and the operations around them:
//
//  * GenTable          — the values of an n-linear operation on generator
//                        tuples; this is the data a bracket is given by.
//  * universal_mder    — the canonical multi-derivation phi_n.
//  * standard brackets — theta |-> phi_n(...) * theta, tabulated on
//                        generators, and the constructive inverse
//                        (standardize) deciding membership in the image.
//  * evaluate          — the Leibniz extension of a table to arbitrary
//                        polynomial inputs.
//  * axiom checks      — multiderivation compatibility and signed cyclic
//                        equivariance, with re-checkable witnesses.

#include "dpb/tpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dpb {

// Values of an n-linear operation on all generator tuples (i_1..i_n) in
// [1..d]^n.  Unset entries are zero.
class GenTable {
public:
    GenTable(AlgebraSig sig, int arity);

    const AlgebraSig& sig() const { return sig_; }
    int arity() const { return arity_; }
    int num_gens() const { return sig_.num_gens; }
    std::size_t num_entries() const { return entries_.size(); }

    const TensorPoly& at(const std::vector<int>& tuple) const;
    void set(const std::vector<int>& tuple, TensorPoly value);
    void add(const std::vector<int>& tuple, const TensorPoly& value);

    // All tuples in lexicographic order (last index fastest).
    static std::vector<std::vector<int>> all_tuples(int num_gens, int arity);

    bool is_zero() const;
    bool operator==(const GenTable& o) const;
    bool operator!=(const GenTable& o) const { return !(*this == o); }

private:
    std::size_t index_of(const std::vector<int>& tuple) const;

    AlgebraSig sig_;
    int arity_;
    std::vector<TensorPoly> entries_;
};

// The canonical multi-derivation phi_n evaluated on arity-1 arguments
// (args.size() = n >= 2).  For n = 2 this is
//   (a (x) 1 - 1 (x) a) * (b (x) 1 - 1 (x) b)
// and for n >= 3 the product of the n cyclically shifted difference factors.
TensorPoly universal_mder(const AlgebraSig& sig, const std::vector<TensorPoly>& args);

// The factor structure of phi_n at a fixed generator: for each argument
// slot, the pair of tensor slots (plus, minus) such that phi_n is the
// product over argument slots k of (E_plus(a_k) - E_minus(a_k)).
// Index j of the result (0-based) is argument slot j+1.
std::vector<std::pair<int, int>> universal_mder_slot_pairs(int arity);

// The standard multi-derivation attached to theta (arity n):
// args |-> phi_n(args) * theta.
TensorPoly standard_mder_value(const TensorPoly& theta, const std::vector<TensorPoly>& args);

// The same, tabulated on all generator tuples.
GenTable standard_mder_table(const TensorPoly& theta);

// Leibniz extension of a table to arbitrary arity-1 polynomial arguments:
// expands multilinearly over terms, reduces slots n down to 1, and within a
// slot peels the lowest-index generator first.  Total on any table; agrees
// with the unique multi-derivation extension when the table is compatible.
TensorPoly evaluate(const GenTable& table, const std::vector<TensorPoly>& args);

struct CheckOptions {
    // Randomized factored-input Leibniz checks per slot.
    int samples_per_slot = 32;
    std::uint64_t seed = 0xd0b5eedULL;
    // Degree bound for the random monomial factors and contexts.
    int max_factor_degree = 3;
};

// A failed law instance, kept fully re-checkable: lhs and rhs are the two
// sides that should have been equal.
struct CheckWitness {
    std::string rule;
    std::vector<int> tuple;  // generator/context tuple involved, if any
    int slot = 0;            // slot the law was applied in, if any
    std::string detail;
    TensorPoly lhs, rhs;

    std::string describe() const;
};

struct CheckReport {
    bool passed = false;
    std::optional<CheckWitness> witness;
};

// Decides whether the table extends to a multi-derivation.  Exact and
// complete: for each slot k the pair compatibility
//   (E_k'(t_i) - E_k(t_i)) * T[.., t_j at k, ..]
//     == (E_k'(t_j) - E_k(t_j)) * T[.., t_i at k, ..]
// with k' = (k mod n) + 1 is checked over all generator pairs and contexts.
// Additionally cross-checks the Leibniz extension on random factored inputs.
CheckReport check_multiderivation(const GenTable& table, const CheckOptions& opts = {});

// Checks sigma . T = sgn(sigma) T for every cyclic sigma on generator
// tuples: sigma(T[i_sigma(1), .., i_sigma(n)]) == sgn(sigma) * T[i_1, .., i_n].
CheckReport check_sgn_equivariance(const GenTable& table);

// Both of the above; the witness identifies which law failed.
CheckReport check_bracket_axioms(const GenTable& table, const CheckOptions& opts = {});

enum class StandardizeStatus { Standard, Exotic, Inconsistent };

struct StandardizeResult {
    StandardizeStatus status;
    // The unique theta with table == standard_mder_table(theta); set iff
    // status == Standard.
    std::optional<TensorPoly> theta;
};

// Decides membership in the image of theta |-> standard_mder_table(theta) by
// exact division of the (1,..,1) entry by the factors of phi_n at t_1,
// followed by re-tabulation.  Exotic = a multi-derivation outside the image;
// Inconsistent = check_multiderivation fails.
StandardizeResult standardize(const GenTable& table, const CheckOptions& opts = {});

// Splits a table by the total degree of its entry terms; summing the
// components over all keys recovers the original table.
std::map<int, GenTable> homogeneous_components(const GenTable& table);
GenTable min_homogeneous_component(const GenTable& table);
GenTable max_homogeneous_component(const GenTable& table);

enum class BracketClass { Standard, Exotic, Inconsistent };

struct Classification {
    BracketClass verdict;
    std::optional<TensorPoly> theta;  // set iff verdict == Standard
};

// Full classification of a bracket table: Inconsistent when either bracket
// axiom (multiderivation, signed cyclic equivariance) fails, otherwise
// Standard (with its theta) or Exotic.
Classification classify_bracket(const GenTable& table, const CheckOptions& opts = {});

}  // namespace dpb
