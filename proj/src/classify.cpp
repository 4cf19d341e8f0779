#include "dpb/classify.hpp"

#include <random>
#include <stdexcept>

namespace dpb {

namespace {

// t^(hi) (x) t^(lo) - t^(lo) (x) t^(hi) on R[t].
TensorPoly rt_antisym(const AlgebraSig& sig, std::uint32_t hi, std::uint32_t lo) {
    TensorMonomial a(2, 1), b(2, 1);
    a.slot(1) = Monomial::generator(1, 1, hi);
    a.slot(2) = Monomial::generator(1, 1, lo);
    b.slot(1) = Monomial::generator(1, 1, lo);
    b.slot(2) = Monomial::generator(1, 1, hi);
    TensorPoly p(sig, 2);
    p.add_term(a, Coeff::one(sig.ring));
    p.add_term(b, -Coeff::one(sig.ring));
    return p;
}

}  // namespace

RtFamily make_rt_family(const CoeffRing& ring, long lambda, long mu, long nu) {
    return RtFamily{ring, Coeff::from_integer(ring, lambda), Coeff::from_integer(ring, mu),
                    Coeff::from_integer(ring, nu)};
}

GenTable rt_family_table(const RtFamily& f) {
    AlgebraSig sig{f.ring, 1};
    TensorPoly entry = rt_antisym(sig, 1, 0).scaled(f.lambda) +
                       rt_antisym(sig, 2, 0).scaled(f.mu) + rt_antisym(sig, 2, 1).scaled(f.nu);
    GenTable table(sig, 2);
    table.set({1, 1}, std::move(entry));
    return table;
}

bool rt_is_poisson(const RtFamily& f) {
    bool formula = (f.lambda * f.nu - f.mu * f.mu).is_zero();
    PoissonReport engine = check_double_poisson(rt_family_table(f));
    if (!engine.is_double_bracket)
        throw std::logic_error("rt family bracket failed the bracket axioms");
    if (engine.is_double_poisson != formula)
        throw std::logic_error("rt family criterion disagrees with the decision procedure");
    return formula;
}

std::vector<RtScanEntry> rt_homogeneous_scan(int max_degree, const CoeffRing& ring) {
    AlgebraSig sig{ring, 1};
    std::vector<RtScanEntry> out;

    auto verdict_of = [&](const TensorPoly& psi) {
        GenTable table(sig, 2);
        table.set({1, 1}, psi);
        return check_double_poisson(table).is_double_poisson;
    };
    auto basis_elem = [&](int total, int a) {
        return rt_antisym(sig, static_cast<std::uint32_t>(total - a),
                          static_cast<std::uint32_t>(a));
    };

    for (int total = 1; total <= max_degree; ++total) {
        std::vector<int> splits;
        for (int a = 0; 2 * a < total; ++a) splits.push_back(a);
        for (int a : splits)
            out.push_back(RtScanEntry{total, {a}, {1}, verdict_of(basis_elem(total, a))});
        for (std::size_t i = 0; i < splits.size(); ++i)
            for (std::size_t j = i + 1; j < splits.size(); ++j)
                for (long c1 : {1L, -1L})
                    for (long c2 : {1L, -1L}) {
                        TensorPoly psi =
                            basis_elem(total, splits[i]).scaled(Coeff::from_integer(ring, c1)) +
                            basis_elem(total, splits[j]).scaled(Coeff::from_integer(ring, c2));
                        out.push_back(RtScanEntry{total,
                                                  {splits[i], splits[j]},
                                                  {c1, c2},
                                                  verdict_of(psi)});
                    }
    }
    return out;
}

std::vector<std::pair<Monomial, Monomial>> antisym_basis(int num_gens, int max_degree) {
    // All monomials of degree <= max_degree, ascending in (degree, lex).
    std::vector<Monomial> monos;
    Monomial cur(num_gens);
    // Odometer over exponent vectors with total degree <= max_degree.
    auto enumerate = [&](auto&& self, Monomial& m, int index, int remaining) -> void {
        if (index > num_gens) {
            monos.push_back(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            m.set_exp(index, static_cast<std::uint32_t>(e));
            self(self, m, index + 1, remaining - e);
        }
        m.set_exp(index, 0);
    };
    enumerate(enumerate, cur, 1, max_degree);
    std::sort(monos.begin(), monos.end(),
              [](const Monomial& a, const Monomial& b) { return a.cmp_deg_lex(b) < 0; });

    std::vector<std::pair<Monomial, Monomial>> basis;
    for (std::size_t i = 0; i < monos.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (monos[i].degree() + monos[j].degree() <= max_degree)
                basis.emplace_back(monos[i], monos[j]);
    return basis;
}

bool check_leading_square(const TensorPoly& psi) {
    return check_leading_square(psi, standard_jacobiator(psi));
}

bool check_leading_square(const TensorPoly& psi, const TensorPoly& jac) {
    auto lead = psi.leading_term();
    if (!lead) return false;
    auto jac_lead = jac.leading_term();
    if (!jac_lead) return false;

    const auto& [wx, beta] = *lead;
    std::vector<Monomial> slots{wx.slot(1) * wx.slot(1), wx.slot(2), wx.slot(2)};
    TensorMonomial expected(std::move(slots));
    return jac_lead->first == expected && jac_lead->second == beta * beta;
}

ScanReport kernel_scan(const ScanParams& params) {
    if (params.height < 1) throw std::invalid_argument("height must be at least 1");
    if (params.num_gens < 1) throw std::invalid_argument("need at least one generator");

    ScanReport report;
    report.params = params;
    report.squaring_injective = params.ring.squaring_injective();

    AlgebraSig sig{params.ring, params.num_gens};
    auto pairs = antisym_basis(params.num_gens, params.max_degree);
    report.basis_size = pairs.size();

    std::vector<TensorPoly> basis;
    basis.reserve(pairs.size());
    for (const auto& [m1, m2] : pairs) {
        TensorPoly e(sig, 2);
        e.add_term(TensorMonomial({m1, m2}), Coeff::one(params.ring));
        e.add_term(TensorMonomial({m2, m1}), -Coeff::one(params.ring));
        basis.push_back(std::move(e));
    }

    long width = 2L * params.height + 1;
    mpz_class total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= width;
    total -= 1;
    report.total_candidates = total;
    report.exhaustive = params.mode == ScanMode::Exhaustive ||
                        (params.mode == ScanMode::Auto &&
                         total <= ScanParams::kExhaustiveLimit);

    std::vector<Coeff> ring_of_int;
    for (long v = -params.height; v <= params.height; ++v)
        ring_of_int.push_back(Coeff::from_integer(params.ring, v));
    auto coeff_of = [&](long v) { return ring_of_int[static_cast<std::size_t>(v + params.height)]; };

    auto consider = [&](const std::vector<long>& coeffs) {
        TensorPoly psi(sig, 2);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (coeffs[i] != 0) psi += basis[i].scaled(coeff_of(coeffs[i]));
        // An integer vector can collapse to the zero element over Z/m; the
        // zero element is not a kernel witness.
        if (psi.is_zero()) return;
        ++report.num_checked;
        TensorPoly jac = standard_jacobiator(psi);
        if (jac.is_zero()) {
            report.kernel_elements.push_back(std::move(psi));
        } else if (check_leading_square(psi, jac)) {
            ++report.num_square_ok;
        } else {
            report.square_check_failures.push_back(std::move(psi));
        }
    };

    if (report.exhaustive) {
        std::vector<long> coeffs(basis.size(), -params.height);
        while (true) {
            bool all_zero = true;
            for (long v : coeffs)
                if (v != 0) {
                    all_zero = false;
                    break;
                }
            if (!all_zero) consider(coeffs);
            std::size_t k = 0;
            while (k < coeffs.size() && coeffs[k] == params.height) coeffs[k++] = -params.height;
            if (k == coeffs.size()) break;
            ++coeffs[k];
        }
    } else {
        std::mt19937_64 rng(params.seed);
        std::vector<long> coeffs(basis.size());
        for (std::size_t s = 0; s < params.num_samples; ++s) {
            bool all_zero = true;
            do {
                all_zero = true;
                for (auto& v : coeffs) {
                    v = -params.height +
                        static_cast<long>(rng() % static_cast<std::uint64_t>(width));
                    if (v != 0) all_zero = false;
                }
            } while (all_zero);
            consider(coeffs);
        }
    }
    return report;
}

}  // namespace dpb
