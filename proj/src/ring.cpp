#include "dpb/ring.hpp"

#include <stdexcept>
#include <vector>

namespace dpb {

CoeffRing CoeffRing::integers_mod(unsigned long m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    return CoeffRing(Kind::IntegersMod, m);
}

bool CoeffRing::squaring_injective() const {
    if (kind_ != Kind::IntegersMod) return true;
    std::vector<char> seen(modulus_, 0);
    for (unsigned long r = 0; r < modulus_; ++r) {
        mpz_class sq = mpz_class(r) * r;
        unsigned long s = mpz_fdiv_ui(sq.get_mpz_t(), modulus_);
        if (seen[s]) return false;
        seen[s] = 1;
    }
    return true;
}

std::string CoeffRing::name() const {
    switch (kind_) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::IntegersMod: return "Zmod:" + std::to_string(modulus_);
    }
    throw std::logic_error("unreachable");
}

CoeffRing CoeffRing::parse(std::string_view text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    constexpr std::string_view prefix = "Zmod:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view rest = text.substr(prefix.size());
        if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string_view::npos) {
            unsigned long m = 0;
            for (char c : rest) {
                if (m > (~0ul - 9) / 10) throw std::invalid_argument("modulus too large");
                m = m * 10 + static_cast<unsigned long>(c - '0');
            }
            return integers_mod(m);
        }
    }
    throw std::invalid_argument("unknown ring '" + std::string(text) +
                                "' (expected Z, Q or Zmod:<m>)");
}

Coeff Coeff::from_integer(const CoeffRing& ring, long v) {
    return from_integer(ring, mpz_class(v));
}

Coeff Coeff::from_integer(const CoeffRing& ring, const mpz_class& v) {
    Coeff c(ring);
    c.value_ = mpq_class(v);
    c.normalize();
    return c;
}

Coeff Coeff::from_rational(const CoeffRing& ring, const mpq_class& v) {
    mpq_class r = v;
    r.canonicalize();
    if (ring.is_integers() && r.get_den() != 1)
        throw std::invalid_argument("scalar " + r.get_str() + " is not in the ring Z");
    if (ring.is_integers_mod() && r.get_den() != 1) {
        // A fraction lies in Z/m only when its denominator is invertible.
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), r.get_den().get_mpz_t(),
                       mpz_class(ring.modulus()).get_mpz_t()) == 0)
            throw std::invalid_argument("scalar " + r.get_str() + " is not in the ring " +
                                        ring.name());
        r = mpq_class(r.get_num() * inv);
    }
    Coeff c(ring);
    c.value_ = r;
    c.normalize();
    return c;
}

void Coeff::normalize() {
    value_.canonicalize();
    if (ring_.is_integers_mod()) {
        mpz_class rem;
        mpz_fdiv_r(rem.get_mpz_t(), value_.get_num().get_mpz_t(),
                   mpz_class(ring_.modulus()).get_mpz_t());
        value_ = mpq_class(rem);
    }
}

void Coeff::check_same_ring(const Coeff& o) const {
    if (ring_ != o.ring_)
        throw std::invalid_argument("coefficient ring mismatch: " + ring_.name() + " vs " +
                                    o.ring_.name());
}

Coeff Coeff::operator+(const Coeff& o) const {
    check_same_ring(o);
    Coeff r(ring_);
    r.value_ = value_ + o.value_;
    r.normalize();
    return r;
}

Coeff Coeff::operator-(const Coeff& o) const {
    check_same_ring(o);
    Coeff r(ring_);
    r.value_ = value_ - o.value_;
    r.normalize();
    return r;
}

Coeff Coeff::operator*(const Coeff& o) const {
    check_same_ring(o);
    Coeff r(ring_);
    r.value_ = value_ * o.value_;
    r.normalize();
    return r;
}

Coeff Coeff::operator-() const {
    Coeff r(ring_);
    r.value_ = -value_;
    r.normalize();
    return r;
}

bool Coeff::operator==(const Coeff& o) const {
    check_same_ring(o);
    return value_ == o.value_;
}

std::string Coeff::str() const {
    if (ring_.is_integers_mod())
        return value_.get_num().get_str() + "m" + std::to_string(ring_.modulus());
    return value_.get_str();
}

}  // namespace dpb
