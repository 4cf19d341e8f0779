#pragma once

// Classification instruments:
//
//  * the three-parameter family of antisymmetric brackets on R[t], with its
//    closed-form Poisson criterion lambda*nu = mu^2 cross-checked against
//    the full decision procedure;
//  * the scan over homogeneous antisymmetric brackets on R[t];
//  * the kernel scan over antisymmetric elements in two or more generators,
//    which confirms that the standard Jacobiator map has trivial kernel by
//    exhibiting the leading term of J(psi) as a perfect square.

#include "dpb/jacobi.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace dpb {

// {{t,t}} = lambda (t(x)1 - 1(x)t) + mu (t^2(x)1 - 1(x)t^2)
//         + nu (t^2(x)t - t(x)t^2) on R[t].
struct RtFamily {
    CoeffRing ring;
    Coeff lambda, mu, nu;
};

RtFamily make_rt_family(const CoeffRing& ring, long lambda, long mu, long nu);
GenTable rt_family_table(const RtFamily& f);

// True iff lambda*nu - mu^2 = 0; always cross-checked against
// check_double_poisson on the tabulated bracket, throwing std::logic_error
// if the two ever disagree.
bool rt_is_poisson(const RtFamily& f);

// One homogeneous antisymmetric candidate on R[t]:
//   psi = sum_i coeffs[i] * (t^(N-a_i) (x) t^(a_i)  -  t^(a_i) (x) t^(N-a_i))
// with N = degree and a_i = splits[i], 0 <= a_i < N/2.
struct RtScanEntry {
    int degree;
    std::vector<int> splits;
    std::vector<long> coeffs;
    bool poisson;
};

// All single basis elements and all two-element height-1 combinations of
// each total degree N = 1..max_degree, with their Poisson verdicts.
std::vector<RtScanEntry> rt_homogeneous_scan(int max_degree, const CoeffRing& ring);

// The antisymmetric basis elements m1 (x) m2 - m2 (x) m1 with m1 > m2
// (degree, then lex) and deg m1 + deg m2 <= max_degree, in a fixed order.
std::vector<std::pair<Monomial, Monomial>> antisym_basis(int num_gens, int max_degree);

// Leading-term law behind kernel triviality: when psi is antisymmetric and
// nonzero with leading term beta * (W (x) X), the leading term of J(psi) is
// exactly beta^2 * (W^2 (x) X (x) X).
bool check_leading_square(const TensorPoly& psi);
// Same law with J(psi) already computed.
bool check_leading_square(const TensorPoly& psi, const TensorPoly& jac);

enum class ScanMode { Auto, Exhaustive, Sample };

struct ScanParams {
    int num_gens = 2;
    int max_degree = 2;  // bound on the total degree of m1 (x) m2
    int height = 1;      // integer coefficients in [-height, height]
    CoeffRing ring = CoeffRing::integers();
    std::uint64_t seed = 1;
    ScanMode mode = ScanMode::Auto;
    std::size_t num_samples = 10000;

    // Auto switches from exhaustive to sampled above this many candidates.
    static constexpr unsigned long kExhaustiveLimit = 1000000;
};

struct ScanReport {
    ScanParams params;
    bool squaring_injective = false;
    std::size_t basis_size = 0;
    mpz_class total_candidates;  // nonzero coefficient vectors
    bool exhaustive = false;
    std::size_t num_checked = 0;
    std::size_t num_square_ok = 0;
    std::vector<TensorPoly> kernel_elements;        // J(psi) = 0
    std::vector<TensorPoly> square_check_failures;  // leading-term law violated
};

// Enumerates (or samples, seeded) antisymmetric candidates psi and records
// any with J(psi) = 0 together with the leading-square law outcome for the
// rest.  Over a squaring-injective ring both lists stay empty; over other
// rings findings are reported without judgment.
ScanReport kernel_scan(const ScanParams& params);

}  // namespace dpb
