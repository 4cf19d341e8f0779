#include "dpb/bracket.hpp"

#include "dpb/exprio.hpp"

#include <random>
#include <stdexcept>

namespace dpb {

// ---------------------------------------------------------------- GenTable

GenTable::GenTable(AlgebraSig sig, int arity) : sig_(std::move(sig)), arity_(arity) {
    if (arity_ < 1) throw std::invalid_argument("table arity must be at least 1");
    if (sig_.num_gens < 1) throw std::invalid_argument("need at least one generator");
    double size = 1;
    for (int k = 0; k < arity_; ++k) size *= sig_.num_gens;
    if (size > 1e7) throw std::invalid_argument("table too large (d^n entries)");
    entries_.assign(static_cast<std::size_t>(size), TensorPoly(sig_, arity_));
}

std::size_t GenTable::index_of(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != arity_)
        throw std::invalid_argument("tuple length " + std::to_string(tuple.size()) +
                                    " does not match arity " + std::to_string(arity_));
    std::size_t idx = 0;
    for (int v : tuple) {
        if (v < 1 || v > sig_.num_gens)
            throw std::invalid_argument("generator index " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(sig_.num_gens));
        idx = idx * static_cast<std::size_t>(sig_.num_gens) + static_cast<std::size_t>(v - 1);
    }
    return idx;
}

const TensorPoly& GenTable::at(const std::vector<int>& tuple) const {
    return entries_[index_of(tuple)];
}

void GenTable::set(const std::vector<int>& tuple, TensorPoly value) {
    if (value.sig() != sig_ || value.arity() != arity_)
        throw std::invalid_argument("entry shape does not match table");
    entries_[index_of(tuple)] = std::move(value);
}

void GenTable::add(const std::vector<int>& tuple, const TensorPoly& value) {
    entries_[index_of(tuple)] += value;
}

std::vector<std::vector<int>> GenTable::all_tuples(int num_gens, int arity) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(arity), 1);
    while (true) {
        out.push_back(cur);
        int k = arity - 1;
        while (k >= 0 && cur[static_cast<std::size_t>(k)] == num_gens) {
            cur[static_cast<std::size_t>(k)] = 1;
            --k;
        }
        if (k < 0) break;
        ++cur[static_cast<std::size_t>(k)];
    }
    return out;
}

bool GenTable::is_zero() const {
    for (const TensorPoly& p : entries_)
        if (!p.is_zero()) return false;
    return true;
}

bool GenTable::operator==(const GenTable& o) const {
    if (sig_ != o.sig_ || arity_ != o.arity_) return false;
    return entries_ == o.entries_;
}

// --------------------------------------------------- canonical phi_n / Pi_n

std::vector<std::pair<int, int>> universal_mder_slot_pairs(int arity) {
    if (arity < 2) throw std::invalid_argument("phi_n needs arity at least 2");
    std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(arity));
    if (arity == 2) {
        pairs[0] = {1, 2};
        pairs[1] = {1, 2};
        return pairs;
    }
    for (int j = 1; j < arity; ++j) pairs[static_cast<std::size_t>(j) - 1] = {j + 1, j};
    pairs[static_cast<std::size_t>(arity) - 1] = {1, arity};
    return pairs;
}

TensorPoly universal_mder(const AlgebraSig& sig, const std::vector<TensorPoly>& args) {
    int n = static_cast<int>(args.size());
    auto pairs = universal_mder_slot_pairs(n);
    TensorPoly result = TensorPoly::unit(sig, n);
    for (int k = 1; k <= n; ++k) {
        const TensorPoly& a = args[static_cast<std::size_t>(k) - 1];
        if (a.sig() != sig || a.arity() != 1)
            throw std::invalid_argument("phi_n arguments must be arity-1 elements of the algebra");
        auto [plus, minus] = pairs[static_cast<std::size_t>(k) - 1];
        result = result * (embed_in_slot(a, n, plus) - embed_in_slot(a, n, minus));
    }
    return result;
}

TensorPoly standard_mder_value(const TensorPoly& theta, const std::vector<TensorPoly>& args) {
    if (static_cast<int>(args.size()) != theta.arity())
        throw std::invalid_argument("argument count does not match arity of theta");
    return universal_mder(theta.sig(), args) * theta;
}

GenTable standard_mder_table(const TensorPoly& theta) {
    GenTable table(theta.sig(), theta.arity());
    for (const auto& tuple : GenTable::all_tuples(theta.num_gens(), theta.arity())) {
        std::vector<TensorPoly> args;
        args.reserve(tuple.size());
        for (int i : tuple) args.push_back(TensorPoly::generator(theta.sig(), i));
        table.set(tuple, standard_mder_value(theta, args));
    }
    return table;
}

// ---------------------------------------------------------------- evaluate

namespace {

// Multiplies p by the monomial m placed in the given slot.
TensorPoly mul_in_slot(const TensorPoly& p, const Monomial& m, int slot) {
    TensorPoly r(p.sig(), p.arity());
    for (const auto& [tm, c] : p.terms()) {
        TensorMonomial prod = tm;
        prod.slot(slot) = prod.slot(slot) * m;
        r.add_term(prod, c);
    }
    return r;
}

// Evaluates the table on one monomial per slot by repeated Leibniz peeling.
TensorPoly eval_monomials(const GenTable& table, std::vector<Monomial> mons) {
    int n = table.arity();
    const AlgebraSig& sig = table.sig();
    for (const Monomial& m : mons)
        if (m.is_unit()) return TensorPoly(sig, n);

    // Find the highest slot not yet reduced to a single generator.
    for (int k = n; k >= 1; --k) {
        Monomial& m = mons[static_cast<std::size_t>(k) - 1];
        if (m.degree() == 1) continue;
        // Peel the lowest-index generator: m = t_j * rest.
        int j = 1;
        while (m.exp(j) == 0) ++j;
        Monomial rest = m;
        rest.set_exp(j, rest.exp(j) - 1);
        int kprime = (k % n) + 1;

        std::vector<Monomial> with_rest = mons;
        with_rest[static_cast<std::size_t>(k) - 1] = rest;
        std::vector<Monomial> with_gen = mons;
        with_gen[static_cast<std::size_t>(k) - 1] = Monomial::generator(sig.num_gens, j);

        TensorPoly left =
            mul_in_slot(eval_monomials(table, std::move(with_rest)),
                        Monomial::generator(sig.num_gens, j), kprime);
        TensorPoly right = mul_in_slot(eval_monomials(table, std::move(with_gen)), rest, k);
        return left + right;
    }

    // Every slot is a single generator: direct table lookup.
    std::vector<int> tuple(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const Monomial& m = mons[static_cast<std::size_t>(k) - 1];
        for (int i = 1; i <= sig.num_gens; ++i)
            if (m.exp(i) == 1) tuple[static_cast<std::size_t>(k) - 1] = i;
    }
    return table.at(tuple);
}

}  // namespace

TensorPoly evaluate(const GenTable& table, const std::vector<TensorPoly>& args) {
    int n = table.arity();
    if (static_cast<int>(args.size()) != n)
        throw std::invalid_argument("argument count does not match table arity");
    for (const TensorPoly& a : args)
        if (a.sig() != table.sig() || a.arity() != 1)
            throw std::invalid_argument("evaluate arguments must be arity-1 elements");

    TensorPoly result(table.sig(), n);
    // Multilinear expansion over the terms of each argument.
    std::vector<Monomial> mons(static_cast<std::size_t>(n), Monomial(table.num_gens()));
    auto expand = [&](auto&& self, int k, const Coeff& c) -> void {
        if (k > n) {
            result += eval_monomials(table, mons).scaled(c);
            return;
        }
        for (const auto& [tm, tc] : args[static_cast<std::size_t>(k) - 1].terms()) {
            mons[static_cast<std::size_t>(k) - 1] = tm.slot(1);
            self(self, k + 1, c * tc);
        }
    };
    expand(expand, 1, Coeff::one(table.sig().ring));
    return result;
}

// ------------------------------------------------------------ axiom checks

namespace {

std::string tuple_str(const std::vector<int>& tuple) {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(tuple[i]);
    }
    return s + ")";
}

// Deterministic monomial of degree in [1, max_degree].
Monomial random_monomial(std::mt19937_64& rng, int num_gens, int max_degree) {
    int deg = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
    Monomial m(num_gens);
    for (int s = 0; s < deg; ++s) {
        int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(num_gens));
        m.set_exp(i, m.exp(i) + 1);
    }
    return m;
}

TensorPoly poly_of_monomial(const AlgebraSig& sig, const Monomial& m) {
    TensorPoly p(sig, 1);
    p.add_term(TensorMonomial({m}), Coeff::one(sig.ring));
    return p;
}

}  // namespace

std::string CheckWitness::describe() const {
    std::string s = rule;
    if (!tuple.empty()) s += " at " + tuple_str(tuple);
    if (slot != 0) s += " slot " + std::to_string(slot);
    if (!detail.empty()) s += " (" + detail + ")";
    s += ": lhs = " + lhs.str() + ", rhs = " + rhs.str();
    return s;
}

CheckReport check_multiderivation(const GenTable& table, const CheckOptions& opts) {
    const AlgebraSig& sig = table.sig();
    int n = table.arity();
    int d = sig.num_gens;

    // Exact pair compatibility in every slot.  The contexts range over
    // generator tuples of the remaining slots.
    for (int k = 1; k <= n; ++k) {
        int kprime = (k % n) + 1;
        std::vector<TensorPoly> diff;  // D_k(t_i) = E_k'(t_i) - E_k(t_i)
        diff.reserve(static_cast<std::size_t>(d));
        for (int i = 1; i <= d; ++i) {
            TensorPoly g = TensorPoly::generator(sig, i);
            diff.push_back(embed_in_slot(g, n, kprime) - embed_in_slot(g, n, k));
        }
        for (const auto& context : GenTable::all_tuples(d, n - 1)) {
            std::vector<int> tuple(static_cast<std::size_t>(n));
            for (int s = 1, c = 0; s <= n; ++s)
                if (s != k) tuple[static_cast<std::size_t>(s) - 1] = context[static_cast<std::size_t>(c++)];
            for (int i = 1; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j) {
                    std::vector<int> with_j = tuple, with_i = tuple;
                    with_j[static_cast<std::size_t>(k) - 1] = j;
                    with_i[static_cast<std::size_t>(k) - 1] = i;
                    TensorPoly lhs = diff[static_cast<std::size_t>(i) - 1] * table.at(with_j);
                    TensorPoly rhs = diff[static_cast<std::size_t>(j) - 1] * table.at(with_i);
                    if (lhs != rhs) {
                        CheckWitness w{"pair-compatibility", with_j, k,
                                       "t" + std::to_string(i) + " vs t" + std::to_string(j),
                                       lhs, rhs};
                        return {false, std::move(w)};
                    }
                }
        }
    }

    // Randomized factored-input Leibniz checks on the extension.
    std::mt19937_64 rng(opts.seed);
    for (int k = 1; k <= n; ++k) {
        int kprime = (k % n) + 1;
        for (int s = 0; s < opts.samples_per_slot; ++s) {
            Monomial a = random_monomial(rng, d, opts.max_factor_degree);
            Monomial b = random_monomial(rng, d, opts.max_factor_degree);
            std::vector<TensorPoly> args;
            args.reserve(static_cast<std::size_t>(n));
            for (int t = 1; t <= n; ++t)
                args.push_back(poly_of_monomial(sig, random_monomial(rng, d, opts.max_factor_degree)));
            std::vector<TensorPoly> with_ab = args, with_a = args, with_b = args;
            with_ab[static_cast<std::size_t>(k) - 1] = poly_of_monomial(sig, a * b);
            with_a[static_cast<std::size_t>(k) - 1] = poly_of_monomial(sig, a);
            with_b[static_cast<std::size_t>(k) - 1] = poly_of_monomial(sig, b);

            TensorPoly lhs = evaluate(table, with_ab);
            TensorPoly rhs = mul_in_slot(evaluate(table, with_b), a, kprime) +
                             mul_in_slot(evaluate(table, with_a), b, k);
            if (lhs != rhs) {
                CheckWitness w{"leibniz-sample", {}, k,
                               "slot factors " + poly_of_monomial(sig, a).str() + " * " +
                                   poly_of_monomial(sig, b).str(),
                               lhs, rhs};
                return {false, std::move(w)};
            }
        }
    }
    return {true, std::nullopt};
}

CheckReport check_sgn_equivariance(const GenTable& table) {
    int n = table.arity();
    for (int j = 1; j < n; ++j) {
        Permutation sigma = Permutation::cyclic_shift(n, j);
        Coeff sgn = Coeff::from_integer(table.sig().ring, sigma.sign());
        for (const auto& tuple : GenTable::all_tuples(table.num_gens(), n)) {
            std::vector<int> permuted_tuple(static_cast<std::size_t>(n));
            for (int k = 1; k <= n; ++k)
                permuted_tuple[static_cast<std::size_t>(k) - 1] =
                    tuple[static_cast<std::size_t>(sigma.image(k)) - 1];
            TensorPoly lhs = table.at(permuted_tuple).permuted(sigma);
            TensorPoly rhs = table.at(tuple).scaled(sgn);
            if (lhs != rhs) {
                CheckWitness w{"sgn-equivariance", tuple, 0,
                               "cyclic shift by " + std::to_string(j), lhs, rhs};
                return {false, std::move(w)};
            }
        }
    }
    return {true, std::nullopt};
}

CheckReport check_bracket_axioms(const GenTable& table, const CheckOptions& opts) {
    CheckReport r = check_multiderivation(table, opts);
    if (!r.passed) return r;
    return check_sgn_equivariance(table);
}

// ------------------------------------------------------------- standardize

StandardizeResult standardize(const GenTable& table, const CheckOptions& opts) {
    int n = table.arity();
    if (n < 2) throw std::invalid_argument("standardize needs arity at least 2");

    // The (1,..,1) entry of a standard table is phi_n(t_1,..,t_1) * theta, a
    // product of known regular linear factors times theta.  Strip them by
    // exact division; any nonzero remainder rules the table out.
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    TensorPoly p = table.at(ones);
    bool division_clean = true;
    for (auto [plus, minus] : universal_mder_slot_pairs(n)) {
        DivisionResult dr = p.divide_linear(1, plus, minus);
        if (!dr.remainder.is_zero()) {
            division_clean = false;
            break;
        }
        p = std::move(dr.quotient);
    }
    if (division_clean && standard_mder_table(p) == table)
        return {StandardizeStatus::Standard, std::move(p)};

    CheckReport mder = check_multiderivation(table, opts);
    return {mder.passed ? StandardizeStatus::Exotic : StandardizeStatus::Inconsistent,
            std::nullopt};
}

// --------------------------------------------------------------- gradation

std::map<int, GenTable> homogeneous_components(const GenTable& table) {
    std::map<int, GenTable> parts;
    for (const auto& tuple : GenTable::all_tuples(table.num_gens(), table.arity()))
        for (const auto& [deg, part] : table.at(tuple).homogeneous_components()) {
            auto [it, _] = parts.try_emplace(deg, GenTable(table.sig(), table.arity()));
            it->second.set(tuple, part);
        }
    return parts;
}

GenTable min_homogeneous_component(const GenTable& table) {
    auto parts = homogeneous_components(table);
    if (parts.empty()) return table;  // zero table
    return parts.begin()->second;
}

GenTable max_homogeneous_component(const GenTable& table) {
    auto parts = homogeneous_components(table);
    if (parts.empty()) return table;  // zero table
    return parts.rbegin()->second;
}

Classification classify_bracket(const GenTable& table, const CheckOptions& opts) {
    if (!check_bracket_axioms(table, opts).passed) return {BracketClass::Inconsistent, std::nullopt};
    StandardizeResult sr = standardize(table, opts);
    switch (sr.status) {
        case StandardizeStatus::Standard:
            return {BracketClass::Standard, std::move(sr.theta)};
        case StandardizeStatus::Exotic:
            return {BracketClass::Exotic, std::nullopt};
        case StandardizeStatus::Inconsistent:
            break;
    }
    return {BracketClass::Inconsistent, std::nullopt};
}

}  // namespace dpb
