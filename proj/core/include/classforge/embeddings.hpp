#ifndef CLASSFORGE_EMBEDDINGS_HPP
#define CLASSFORGE_EMBEDDINGS_HPP

#include <optional>
#include <string>
#include <vector>

#include "classforge/family.hpp"
#include "classforge/interval.hpp"
#include "classforge/pell.hpp"
#include "classforge/sturm.hpp"

namespace classforge {

struct LabeledRoot {
    std::optional<std::string> label; // conjugate label when the published containment holds
    RealInterval enclosure;
};

/// Real roots of f_n, labeled with their conjugate identities when the
/// defining interval containments verify (sextic labels exist for n >= 76 via
/// phi_n; cubic labels for n >= 5; rho0 > 1 is labeled for any n of the Galois
/// families).  With require_labels, throws label_unavailable outside that
/// regime; otherwise smaller n yield unlabeled Sturm-isolated roots.
std::vector<LabeledRoot> ordered_real_roots(const InstancePtr& inst, bool require_labels = false);

/// Enclosure of the root of f_n greater than 1 (Galois families; f_n(1) < 0
/// identically, so the root exists and is unique).
RealInterval rho0_enclosure(const InstancePtr& inst, const Rational& width);

struct ScanEntry {
    Integer n;
    RealInterval value; // log|rho1/rho4| log|rho3/rho0| - log^2|rho2/rho5|
    bool certified;     // enclosure excludes 0
    int level;          // precision level that certified (0-based)
};

/// Replicates the computer check of the sextic unit-independence lemma over
/// admissible n in [n_lo, n_hi] (n = 6, 26 skipped).  Each verdict is backed
/// by an interval excluding zero, retried at doubled precision up to
/// precision_budget levels; uncertified entries are reported, not thrown.
/// The per-n work is independent; jobs > 1 runs it block-parallel.
std::vector<ScanEntry> sextic_independence_scan(const Integer& n_lo, const Integer& n_hi,
                                                int precision_budget = 6, int jobs = 1);

/// For n >= 76, additionally checks the analytic chain: the enclosure lies
/// below -log(9/10)log(n-3) - log^2(n+4) < 0.
bool sextic_chain_endpoints(const Integer& n, int precision_budget = 6);

/// Certified R = 2 log(eps) (log^2 rho0 + log^2 rho1) > 0.
bool quartic_regulator_positive(const Integer& n, int precision_budget = 6);

/// Certified R = |log|mu0| log|rho1| - log|rho0| log|mu1|| != 0.
bool cubic_independence_check(const Integer& n, int precision_budget = 6);

/// Bound chain for n >= 7: |mu1| < 27/(2n^2(n+1)) < 1 and
/// |mu0| > (n-3)^3/(2(n-1)) > 1, interval-verified.
bool cubic_bound_chain(const Integer& n, int precision_budget = 6);

} // namespace classforge

#endif
