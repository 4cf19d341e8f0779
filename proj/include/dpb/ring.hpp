#pragma once

// Exact coefficient arithmetic over the rings Z, Q and Z/m.
//
// A CoeffRing names the ring; a Coeff is an element of a specific ring and
// refuses to mix with elements of a different one.  All arithmetic is exact
// (arbitrary precision, no floating point anywhere).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dpb {

class CoeffRing {
public:
    enum class Kind { Integers, Rationals, IntegersMod };

    CoeffRing() : kind_(Kind::Integers), modulus_(0) {}

    static CoeffRing integers() { return CoeffRing(Kind::Integers, 0); }
    static CoeffRing rationals() { return CoeffRing(Kind::Rationals, 0); }
    static CoeffRing integers_mod(unsigned long m);

    Kind kind() const { return kind_; }
    bool is_integers() const { return kind_ == Kind::Integers; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    bool is_integers_mod() const { return kind_ == Kind::IntegersMod; }
    // Only meaningful for IntegersMod.
    unsigned long modulus() const { return modulus_; }

    bool operator==(const CoeffRing&) const = default;

    // True when x^2 = y^2 implies x = y in this ring.  Decided by direct
    // inspection of all residues for Z/m.
    bool squaring_injective() const;

    // "Z", "Q" or "Zmod:<m>".
    std::string name() const;
    // Inverse of name(); throws std::invalid_argument on anything else.
    static CoeffRing parse(std::string_view text);

private:
    CoeffRing(Kind k, unsigned long m) : kind_(k), modulus_(m) {}

    Kind kind_;
    unsigned long modulus_;
};

class Coeff {
public:
    // The zero element.
    explicit Coeff(const CoeffRing& ring) : ring_(ring), value_(0) {}

    static Coeff zero(const CoeffRing& ring) { return Coeff(ring); }
    static Coeff one(const CoeffRing& ring) { return from_integer(ring, 1); }
    static Coeff from_integer(const CoeffRing& ring, long v);
    static Coeff from_integer(const CoeffRing& ring, const mpz_class& v);
    // Accepts any exact rational and canonicalizes it into the ring.
    // Throws std::invalid_argument when the value does not lie in the ring
    // (a proper fraction over Z, or a fraction with denominator not
    // invertible over Z/m).
    static Coeff from_rational(const CoeffRing& ring, const mpq_class& v);

    const CoeffRing& ring() const { return ring_; }
    // Canonical representative: reduced fraction for Q, integer for Z,
    // residue in [0, m) for Z/m.
    const mpq_class& value() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator-() const;
    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // Canonical literal: "-7", "2/3", "3m4".  Parsed back by the expression
    // reader.
    std::string str() const;

private:
    void check_same_ring(const Coeff& o) const;
    // Reduce value_ into canonical form for ring_.
    void normalize();

    CoeffRing ring_;
    mpq_class value_;
};

}  // namespace dpb
