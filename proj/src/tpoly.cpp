#include "dpb/tpoly.hpp"

#include "dpb/exprio.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dpb {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::generator(int num_vars, int index, std::uint32_t exp) {
    Monomial m(num_vars);
    m.set_exp(index, exp);
    return m;
}

std::size_t Monomial::check_index(int index) const {
    if (index < 1 || index > num_vars())
        throw std::invalid_argument("generator index " + std::to_string(index) +
                                    " out of range 1.." + std::to_string(num_vars()));
    return static_cast<std::size_t>(index) - 1;
}

int Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0,
                           [](int acc, std::uint32_t e) { return acc + static_cast<int>(e); });
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (num_vars() != o.num_vars())
        throw std::invalid_argument("monomial variable-count mismatch");
    Monomial r(num_vars());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + o.exps_[i];
    return r;
}

int Monomial::cmp_lex(const Monomial& o) const {
    if (num_vars() != o.num_vars())
        throw std::invalid_argument("monomial variable-count mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] != o.exps_[i]) return exps_[i] < o.exps_[i] ? -1 : 1;
    }
    return 0;
}

int Monomial::cmp_deg_lex(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db ? -1 : 1;
    return cmp_lex(o);
}

// ---------------------------------------------------------- TensorMonomial

std::size_t TensorMonomial::check_slot(int k) const {
    if (k < 1 || k > arity())
        throw std::invalid_argument("slot " + std::to_string(k) + " out of range 1.." +
                                    std::to_string(arity()));
    return static_cast<std::size_t>(k) - 1;
}

int TensorMonomial::total_degree() const {
    int d = 0;
    for (const Monomial& m : slots_) d += m.degree();
    return d;
}

std::vector<int> TensorMonomial::multidegree() const {
    std::vector<int> r;
    r.reserve(slots_.size());
    for (const Monomial& m : slots_) r.push_back(m.degree());
    return r;
}

TensorMonomial TensorMonomial::operator*(const TensorMonomial& o) const {
    if (arity() != o.arity())
        throw std::invalid_argument("tensor monomial arity mismatch");
    std::vector<Monomial> r;
    r.reserve(slots_.size());
    for (std::size_t i = 0; i < slots_.size(); ++i) r.push_back(slots_[i] * o.slots_[i]);
    return TensorMonomial(std::move(r));
}

int term_order_cmp(const TensorMonomial& a, const TensorMonomial& b) {
    if (a.arity() != b.arity() || a.num_vars() != b.num_vars())
        throw std::invalid_argument("tensor monomial shape mismatch");
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (int k = 1; k <= a.arity(); ++k) {
        int c = a.slot(k).cmp_lex(b.slot(k));
        if (c != 0) return c;
    }
    return 0;
}

// ------------------------------------------------------------- Permutation

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::cyclic_shift(int n, int j) {
    std::vector<int> img(static_cast<std::size_t>(n));
    int shift = ((j % n) + n) % n;
    for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i) - 1] = (i - 1 + shift) % n + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    if (a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("transposition indices out of range");
    std::swap(p.images_[static_cast<std::size_t>(a) - 1],
              p.images_[static_cast<std::size_t>(b) - 1]);
    return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(v) - 1] = 1;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (int i = 1; i <= size(); ++i) img[static_cast<std::size_t>(image(i)) - 1] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> img(images_.size());
    for (int i = 1; i <= size(); ++i) img[static_cast<std::size_t>(i) - 1] = image(other.image(i));
    return Permutation(std::move(img));
}

int Permutation::sign() const {
    std::vector<char> seen(images_.size(), 0);
    int sgn = 1;
    for (int i = 1; i <= size(); ++i) {
        if (seen[static_cast<std::size_t>(i) - 1]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j) - 1]; j = image(j)) {
            seen[static_cast<std::size_t>(j) - 1] = 1;
            ++len;
        }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

// -------------------------------------------------------------- TensorPoly

TensorPoly::TensorPoly(AlgebraSig sig, int arity) : sig_(std::move(sig)), arity_(arity) {
    if (arity_ < 1) throw std::invalid_argument("arity must be at least 1");
    if (sig_.num_gens < 1) throw std::invalid_argument("need at least one generator");
}

TensorPoly TensorPoly::unit(const AlgebraSig& sig, int arity) {
    TensorPoly p(sig, arity);
    p.add_term(TensorMonomial(arity, sig.num_gens), Coeff::one(sig.ring));
    return p;
}

TensorPoly TensorPoly::generator(const AlgebraSig& sig, int index, std::uint32_t exp) {
    TensorPoly p(sig, 1);
    TensorMonomial m(1, sig.num_gens);
    m.slot(1) = Monomial::generator(sig.num_gens, index, exp);
    p.add_term(m, Coeff::one(sig.ring));
    return p;
}

TensorPoly TensorPoly::from_monomial(const AlgebraSig& sig, const TensorMonomial& m,
                                     const Coeff& c) {
    TensorPoly p(sig, m.arity());
    p.add_term(m, c);
    return p;
}

Coeff TensorPoly::coefficient(const TensorMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff::zero(sig_.ring) : it->second;
}

std::optional<std::pair<TensorMonomial, Coeff>> TensorPoly::leading_term() const {
    if (terms_.empty()) return std::nullopt;
    return *terms_.begin();
}

void TensorPoly::add_term(const TensorMonomial& m, const Coeff& c) {
    if (m.arity() != arity_ || m.num_vars() != sig_.num_gens)
        throw std::invalid_argument("term shape does not match polynomial");
    if (c.ring() != sig_.ring) throw std::invalid_argument("coefficient ring mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TensorPoly::check_compatible(const TensorPoly& o) const {
    if (sig_ != o.sig_)
        throw std::invalid_argument("tensor polynomials live over different algebras");
    if (arity_ != o.arity_)
        throw std::invalid_argument("tensor polynomial arity mismatch: " +
                                    std::to_string(arity_) + " vs " + std::to_string(o.arity_));
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
    TensorPoly r = *this;
    r += o;
    return r;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
    TensorPoly r = *this;
    r -= o;
    return r;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
    check_compatible(o);
    TensorPoly r(sig_, arity_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

TensorPoly TensorPoly::operator-() const {
    TensorPoly r(sig_, arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TensorPoly TensorPoly::scaled(const Coeff& c) const {
    if (c.ring() != sig_.ring) throw std::invalid_argument("coefficient ring mismatch");
    TensorPoly r(sig_, arity_);
    if (c.is_zero()) return r;
    for (const auto& [m, oc] : terms_) r.add_term(m, oc * c);
    return r;
}

bool TensorPoly::operator==(const TensorPoly& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

TensorPoly TensorPoly::permuted(const Permutation& sigma) const {
    if (sigma.size() != arity_) throw std::invalid_argument("permutation size != arity");
    TensorPoly r(sig_, arity_);
    for (const auto& [m, c] : terms_) {
        TensorMonomial pm(arity_, sig_.num_gens);
        for (int k = 1; k <= arity_; ++k) pm.slot(sigma.image(k)) = m.slot(k);
        r.add_term(pm, c);
    }
    return r;
}

std::map<int, TensorPoly> TensorPoly::homogeneous_components() const {
    std::map<int, TensorPoly> parts;
    for (const auto& [m, c] : terms_) {
        auto [it, _] = parts.try_emplace(m.total_degree(), TensorPoly(sig_, arity_));
        it->second.add_term(m, c);
    }
    return parts;
}

DivisionResult TensorPoly::divide_linear(int gen, int slot_num, int slot_den) const {
    if (slot_num == slot_den) throw std::invalid_argument("divisor slots must differ");
    if (slot_num < 1 || slot_num > arity_ || slot_den < 1 || slot_den > arity_)
        throw std::invalid_argument("divisor slot out of range");
    if (gen < 1 || gen > sig_.num_gens) throw std::invalid_argument("generator out of range");

    // Synthetic division by x - y with x = (t_gen in slot_num) and
    // y = (t_gen in slot_den), treating each term as c * x^e * M with M free
    // of x:  x^e = (x - y) * sum_{j<e} x^{e-1-j} y^j  +  y^e.
    DivisionResult res{TensorPoly(sig_, arity_), TensorPoly(sig_, arity_)};
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.slot(slot_num).exp(gen);
        TensorMonomial base = m;
        base.slot(slot_num).set_exp(gen, 0);
        std::uint32_t den_e = base.slot(slot_den).exp(gen);
        for (std::uint32_t j = 0; j < e; ++j) {
            TensorMonomial q = base;
            q.slot(slot_num).set_exp(gen, e - 1 - j);
            q.slot(slot_den).set_exp(gen, den_e + j);
            res.quotient.add_term(q, c);
        }
        TensorMonomial r = base;
        r.slot(slot_den).set_exp(gen, den_e + e);
        res.remainder.add_term(r, c);
    }
    return res;
}

std::string TensorPoly::str() const { return print_tpoly(*this); }

// ---------------------------------------------------------- free functions

TensorPoly tensor_product(const TensorPoly& a, const TensorPoly& b) {
    if (a.sig() != b.sig())
        throw std::invalid_argument("tensor polynomials live over different algebras");
    TensorPoly r(a.sig(), a.arity() + b.arity());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<Monomial> slots;
            slots.reserve(static_cast<std::size_t>(r.arity()));
            for (int k = 1; k <= a.arity(); ++k) slots.push_back(ma.slot(k));
            for (int k = 1; k <= b.arity(); ++k) slots.push_back(mb.slot(k));
            r.add_term(TensorMonomial(std::move(slots)), ca * cb);
        }
    return r;
}

TensorPoly embed_in_slot(const TensorPoly& a, int arity, int slot) {
    if (a.arity() != 1) throw std::invalid_argument("embed_in_slot expects an arity-1 element");
    if (slot < 1 || slot > arity) throw std::invalid_argument("slot out of range");
    TensorPoly r(a.sig(), arity);
    for (const auto& [m, c] : a.terms()) {
        TensorMonomial em(arity, a.num_gens());
        em.slot(slot) = m.slot(1);
        r.add_term(em, c);
    }
    return r;
}

TensorPoly insert_unit_slot(const TensorPoly& p, int position) {
    int n = p.arity() + 1;
    if (position < 1 || position > n) throw std::invalid_argument("position out of range");
    TensorPoly r(p.sig(), n);
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial> slots;
        slots.reserve(static_cast<std::size_t>(n));
        for (int k = 1; k <= p.arity(); ++k) {
            if (k == position) slots.emplace_back(p.num_gens());
            slots.push_back(m.slot(k));
        }
        if (position == n) slots.emplace_back(p.num_gens());
        r.add_term(TensorMonomial(std::move(slots)), c);
    }
    return r;
}

TensorPoly multiply_slots(const TensorPoly& p) {
    TensorPoly r(p.sig(), 1);
    for (const auto& [m, c] : p.terms()) {
        Monomial prod(p.num_gens());
        for (int k = 1; k <= p.arity(); ++k) prod = prod * m.slot(k);
        r.add_term(TensorMonomial({prod}), c);
    }
    return r;
}

}  // namespace dpb
