#ifndef GKT_DECIDE_HPP
#define GKT_DECIDE_HPP

#include "gkt/mword.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gkt {

struct Budget {
    std::int64_t max_len = 64;
    std::int64_t max_states = 200000;
    std::int64_t shift_window = 8;
    std::int64_t depth = 16;

    void validate() const;
};

enum class Verdict { Equal, NotEqual, Unknown };

/// Tri-state answer with the budget actually consumed. Equal and NotEqual
/// are definitive; NotEqual from the closure engine is relative to the
/// declared shift window and length cap (see closure_decide).
struct Decision {
    Verdict verdict = Verdict::Unknown;
    std::uint64_t states_explored = 0;
    std::int64_t max_len_reached = 0;
    std::string note;

    bool definitive() const { return verdict != Verdict::Unknown; }
    bool equal() const { return verdict == Verdict::Equal; }
};

std::string verdict_name(Verdict v);

/// Bounded congruence closure for arbitrary shift-closed presentations.
/// Equal: a chain of single-relation rewrites (either direction, any shift
/// whose shifted relation stays inside the support window of {a, b} extended
/// by shift_window) connects a and b. NotEqual: both reachable sets were
/// exhausted within the window and length cap without meeting; this is a
/// closed-world answer relative to the window. Unknown: max_states hit.
Decision closure_decide(const MonoidPresentation& p, const MWord& a, const MWord& b,
                        const Budget& budget);

/// Exact engine for graph-shaped presentations (every relation rewrites a
/// single generator occurrence, at most one relation per generator).
Decision graph_decide(const MonoidPresentation& p, const MWord& a, const MWord& b,
                      std::int64_t depth);

bool is_graph_shaped(const MonoidPresentation& p);

/// Decides whether a + p = b is solvable, by searching the two congruence
/// classes for a member of class(b) containing a member of class(a).
Decision leq_decide(const MonoidPresentation& p, const MWord& a, const MWord& b,
                    const Budget& budget);

/// For each probe m: is m <= sum of finitely many shifted copies of i?
std::vector<Decision> order_unit_check(const MonoidPresentation& p, const MWord& i,
                                       const std::vector<MWord>& probes, const Budget& budget);

/// Same, with all shifts forced to zero (m <= k*i).
std::vector<Decision> strong_order_unit_check(const MonoidPresentation& p, const MWord& i,
                                              const std::vector<MWord>& probes,
                                              const Budget& budget);

/// Decides whether i is fixed by every group generator's shift action.
Decision invariant_order_unit_check(const MonoidPresentation& p, const MWord& i,
                                    const Budget& budget);

} // namespace gkt

#endif
