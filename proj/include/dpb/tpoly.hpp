#pragma once

// Sparse exact arithmetic in A^{(x)n} for A = R[t_1..t_d]: tensor powers of a
// polynomial algebra over an exact coefficient ring.
//
// Monomials are exponent vectors; a TensorMonomial is one monomial per tensor
// slot.  Terms are kept in a canonical order: descending by total degree,
// ties broken lexicographically on the concatenated exponent vectors (slot 1
// most significant, and within a slot the generator t_1 most significant).
// Generator indices and slot numbers are 1-based throughout the public API.

#include "dpb/ring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dpb {

// The polynomial algebra R[t_1..t_d]: a coefficient ring plus the number of
// generators.
struct AlgebraSig {
    CoeffRing ring;
    int num_gens = 1;

    bool operator==(const AlgebraSig&) const = default;
};

// A commutative monomial in d generators, stored as its exponent vector.
class Monomial {
public:
    explicit Monomial(int num_vars) : exps_(num_vars, 0) {}

    static Monomial generator(int num_vars, int index, std::uint32_t exp = 1);

    int num_vars() const { return static_cast<int>(exps_.size()); }
    std::uint32_t exp(int index) const { return exps_[check_index(index)]; }
    void set_exp(int index, std::uint32_t e) { exps_[check_index(index)] = e; }

    int degree() const;
    bool is_unit() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const;

    // Lexicographic comparison, t_1 most significant: <0, 0 or >0.
    int cmp_lex(const Monomial& o) const;
    // Degree first, then lex.  Used for ordering plain monomials.
    int cmp_deg_lex(const Monomial& o) const;

    bool operator==(const Monomial&) const = default;

private:
    std::size_t check_index(int index) const;

    std::vector<std::uint32_t> exps_;
};

// One monomial per tensor slot.
class TensorMonomial {
public:
    TensorMonomial(int arity, int num_vars) : slots_(arity, Monomial(num_vars)) {}
    explicit TensorMonomial(std::vector<Monomial> slots) : slots_(std::move(slots)) {}

    int arity() const { return static_cast<int>(slots_.size()); }
    int num_vars() const { return slots_.empty() ? 0 : slots_.front().num_vars(); }
    const Monomial& slot(int k) const { return slots_[check_slot(k)]; }
    Monomial& slot(int k) { return slots_[check_slot(k)]; }

    int total_degree() const;
    std::vector<int> multidegree() const;

    // Slotwise product (both factors must have the same shape).
    TensorMonomial operator*(const TensorMonomial& o) const;

    bool operator==(const TensorMonomial&) const = default;

private:
    std::size_t check_slot(int k) const;

    std::vector<Monomial> slots_;
};

// Total degree first, then lex on the concatenated exponent vectors.
int term_order_cmp(const TensorMonomial& a, const TensorMonomial& b);

// Orders map keys so that iteration starts at the leading term.
struct TermOrderDescending {
    bool operator()(const TensorMonomial& a, const TensorMonomial& b) const {
        return term_order_cmp(a, b) > 0;
    }
};

// A permutation of tensor slots, acting by "place permutation": sigma moves
// the content of slot i to slot sigma(i).
class Permutation {
public:
    static Permutation identity(int n);
    // The n-cycle c with c(i) = i+1 (mod n), raised to the j-th power.
    static Permutation cyclic_shift(int n, int j = 1);
    static Permutation transposition(int n, int a, int b);
    // images[i-1] = sigma(i), 1-based; must be a bijection of {1..n}.
    static Permutation from_images(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    int image(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }

    Permutation inverse() const;
    // (this * other)(i) = this(other(i)).
    Permutation operator*(const Permutation& other) const;
    int sign() const;

    bool operator==(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

    std::vector<int> images_;  // 1-based images
};

struct DivisionResult;

// An element of A^{(x)n}, as a sparse map from tensor monomials to nonzero
// coefficients.
class TensorPoly {
public:
    using TermMap = std::map<TensorMonomial, Coeff, TermOrderDescending>;

    TensorPoly(AlgebraSig sig, int arity);

    static TensorPoly zero(const AlgebraSig& sig, int arity) { return TensorPoly(sig, arity); }
    // 1 (x) ... (x) 1.
    static TensorPoly unit(const AlgebraSig& sig, int arity);
    // The arity-1 element t_i^exp.
    static TensorPoly generator(const AlgebraSig& sig, int index, std::uint32_t exp = 1);
    static TensorPoly from_monomial(const AlgebraSig& sig, const TensorMonomial& m,
                                    const Coeff& c);

    const AlgebraSig& sig() const { return sig_; }
    int arity() const { return arity_; }
    int num_gens() const { return sig_.num_gens; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    // Iteration starts at the leading term.
    const TermMap& terms() const { return terms_; }

    // Zero when the monomial is absent.
    Coeff coefficient(const TensorMonomial& m) const;
    std::optional<std::pair<TensorMonomial, Coeff>> leading_term() const;

    void add_term(const TensorMonomial& m, const Coeff& c);

    TensorPoly operator+(const TensorPoly& o) const;
    TensorPoly operator-(const TensorPoly& o) const;
    // Slotwise product in the algebra A^{(x)n}.
    TensorPoly operator*(const TensorPoly& o) const;
    TensorPoly operator-() const;
    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    TensorPoly scaled(const Coeff& c) const;

    bool operator==(const TensorPoly& o) const;
    bool operator!=(const TensorPoly& o) const { return !(*this == o); }

    // Place-permutation action: the content of slot i moves to slot sigma(i).
    TensorPoly permuted(const Permutation& sigma) const;

    // Splits by total degree; keys are the degrees that occur.
    std::map<int, TensorPoly> homogeneous_components() const;

    // Exact division with remainder by (t_gen in slot num) - (t_gen in slot
    // den), a regular element.  divisor * quotient + remainder = *this, and
    // the remainder has no occurrence of t_gen in slot num.  The pair is
    // unique with that property.
    DivisionResult divide_linear(int gen, int slot_num, int slot_den) const;

    std::string str() const;  // canonical form, see exprio

private:
    void check_compatible(const TensorPoly& o) const;

    AlgebraSig sig_;
    int arity_;
    TermMap terms_;
};

struct DivisionResult {
    TensorPoly quotient;
    TensorPoly remainder;
};

// a (x) b: concatenates slots, arity(a) + arity(b).
TensorPoly tensor_product(const TensorPoly& a, const TensorPoly& b);

// Places an arity-1 element into the given slot of an arity-n unit tensor:
// embed(a, n, 2) = 1 (x) a (x) 1 ... (x) 1.
TensorPoly embed_in_slot(const TensorPoly& a, int arity, int slot);

// Inserts a unit factor so that it becomes slot `position` of the result:
// insert_unit_slot(a1 (x) a2, 2) = a1 (x) 1 (x) a2.  position in [1, arity+1].
TensorPoly insert_unit_slot(const TensorPoly& p, int position);

// The multiplication map A^{(x)n} -> A, a1 (x) ... (x) an -> a1...an.
TensorPoly multiply_slots(const TensorPoly& p);

}  // namespace dpb
