#pragma once

#include "reflectcg/re_engine.hpp"
#include "reflectcg/report.hpp"

#include <string>
#include <vector>

namespace rcg {

struct NamedForm {
    std::string name;
    Form form;
};

// The 38-equation system: groups A (with A5', A6'), B, C (with C5') and
// their T-transforms, minus the self-dual members on the T-side.
class ReducedSystem {
  public:
    ReducedSystem();

    const Form& named(const std::string& name) const;  // "A1", "B4", "TA5'", "TC5'", ...
    bool has(const std::string& name) const;

    // A' u B u C' u TA' u TB u TC'; 38 members (A1 and A6' are self-dual
    // and appear only on the unprimed side).
    const std::vector<NamedForm>& reduced_prime() const { return reduced_prime_; }
    // The unprimed variant of the system: A u B u C plus T-images excluding
    // the self-dual A1, A6.
    const std::vector<NamedForm>& reduced() const { return reduced_; }

  private:
    std::vector<NamedForm> all_;
    std::vector<NamedForm> reduced_prime_;
    std::vector<NamedForm> reduced_;
};

// --- component-group table ----------------------------------------------

enum class GroupLabel { g0, g1, g1p, g2, g2p, g3, g3p, t1, t1p, t2, t2p, t3, t3p };

const char* group_label_str(GroupLabel g);
GroupLabel table1_label(const REIndex& idx);
// Membership lists from the group definitions (unprimed labels only).
const std::vector<REIndex>& group_members(GroupLabel g);

// Consistency of the table with the group definitions and the T index map.
Report group_table_check();

// --- span certificates --------------------------------------------------

enum class SpanVerdict { member, not_member, inconclusive };

struct SpanResult {
    SpanVerdict verdict = SpanVerdict::inconclusive;
    std::vector<RatFn> coeffs;  // populated in exact mode on membership
};

// Exact Gaussian elimination over the rational-function field.
SpanResult span_exact(const Form& target, const std::vector<const Form*>& basis);

// Randomized membership via generic-rank comparison at `reps` points.
SpanResult span_modp(const Form& target, const std::vector<const Form*>& basis, int reps,
                     std::uint64_t seed, std::uint64_t prime);

// Batched variant sharing evaluation points and the echelonized basis.
std::vector<SpanVerdict> span_modp_batch(const std::vector<const Form*>& targets,
                                         const std::vector<const Form*>& basis, int reps,
                                         std::uint64_t seed, std::uint64_t prime);

// --- theorem-level verifications ----------------------------------------

// The 81 <-> 38 equivalence, both directions, plus the staged
// implications used to establish it.
Report verify_equivalence(const FormTable& table, const ReducedSystem& sys, int reps,
                          const std::vector<std::uint64_t>& seeds, std::uint64_t prime);

// Every displayed identity with written coefficients, as exact form
// identities, plus the self-duality scalars and the q-independence scan.
// The written coefficients refer to the uncleared RE components, so the
// table passed here must be built with cleared = false.
Report verify_identities(const FormTable& uncleared_table, const ReducedSystem& sys);

}  // namespace rcg
