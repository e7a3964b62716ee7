#ifndef LATT_REPRESENT_HPP
#define LATT_REPRESENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "latt/enumerate.hpp"
#include "latt/gram.hpp"
#include "latt/isometry.hpp"

namespace latt {

enum class RepStatus { Found, NotRepresented, Unknown };

// NotRepresented is only returned after exhaustive search; Unknown records a
// budget exhaustion and is never folded into false.
struct RepOutcome {
    RepStatus status = RepStatus::Unknown;
    std::optional<Representation> certificate;
    std::uint64_t nodes = 0;
};

const char* to_string(RepStatus s);

// Column-by-column backtracking search for an embedding target -> host.
// Keeps a short-vector cache per host so drivers that test many targets
// against one host enumerate only once per bound.
class RepSearcher {
public:
    explicit RepSearcher(GramMatrix host);

    const GramMatrix& host() const { return host_; }

    RepOutcome find(const GramMatrix& target, const EnumBudget& budget = {});

    // sign classes of host vectors with norm exactly q
    const std::vector<LatticeVector>& vectors_of_norm(const Int& q, const EnumBudget& budget);

private:
    void ensure_bound(const Int& bound, const EnumBudget& budget);

    GramMatrix host_;
    Int cached_bound_;
    std::map<Int, std::vector<LatticeVector>> by_norm_;
    std::uint64_t enum_nodes_ = 0;
};

RepOutcome find_representation(const GramMatrix& target, const GramMatrix& host,
                               const EnumBudget& budget = {});

struct ModOptions {
    Int max_modulus = 4096;       // cap on p^e
    Int max_level0 = 5'000'000;   // cap on p^rank(host) column space
    std::uint64_t node_budget = 200'000'000;
};

// Finite oracle: true iff an integer matrix T exists with
// T^t G_host T = G_target (mod p^e). Exhaustive digit-lifting search with
// early pruning; sound and complete within the configured sizes.
bool rep_mod_pk(const GramMatrix& target, const GramMatrix& host, const Int& p, int e,
                const ModOptions& opts = {});

struct RootComponent {
    enum class Kind { I1, A, D, E };
    Kind kind;
    int rank;
    MatZ basis;               // HNF basis rows, host coordinates
    std::vector<std::vector<Int>> gram_rows;
    std::uint64_t unit_count; // norm-1 vectors in the component (both signs)
    std::uint64_t root_count; // norm-2 vectors in the component (both signs)
};

const char* to_string(RootComponent::Kind k);

// Decomposition of the sublattice generated by all vectors of norm 1 or 2
// into indecomposable root components.
struct RootDecomposition {
    std::vector<RootComponent> components;
};

RootDecomposition root_sublattice(const GramMatrix& host, const EnumBudget& budget = {});

// The unique component whose lattice contains every vector of S.
const RootComponent& component_containing(const RootDecomposition& decomp,
                                          const std::vector<LatticeVector>& S);

} // namespace latt

#endif
