#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matvar/degree.hpp"
#include "matvar/segre.hpp"

namespace matvar {

/// Seeded faults used to prove the identity suite can actually fail.
enum class Mutation { None, HClassDropF, MoebiusSign, DegreeSign };

struct CorpusEntry {
    std::string name;
    std::optional<Graph> graph;  // present for graph-derived entries
    ArrangementPoset poset;
};

/// Every simple graph on up to max_vertices vertices (one per isomorphism
/// class), the four-point line, the Fano plane over GF(2), two uniform
/// configurations, and a few seeded random rational configurations.
std::vector<CorpusEntry> default_corpus(int max_vertices = 5);

/// Exhaustive proper-coloring count; throws resource_error above the vertex
/// bound.
mpz_class chromatic_by_enumeration(const Graph& g, long m, int max_vertices = 12);

/// Independent oracle via the classical edge recursion, memoized on
/// canonical graph forms.
IntPolynomial chromatic_by_deletion_contraction(const Graph& g);

struct IdentityFailure {
    std::string identity;
    std::string entry;
    std::string detail;  // reproducible counterexample payload
};

struct IdentityReport {
    long checks = 0;
    std::vector<IdentityFailure> failures;
    std::vector<std::string> notes;  // observed facts that are recorded, not asserted
    bool ok() const { return failures.empty(); }
};

/// Evaluates every pairing/divisor/lattice identity exactly on every
/// applicable corpus entry; modular-only identities run only on modular
/// elements, deletion identities branch on isthmuses.
IdentityReport run_identity_suite(const std::vector<CorpusEntry>& corpus,
                                  Mutation mutation = Mutation::None);

/// Degree and Segre congruences for the nice entries: d(m,n) and
/// m^{r(1)} - s_0(m,n) against p(L,m) modulo each prime n with
/// r(1) < n <= n_max, for m = 1..m_max. Non-prime n are scanned and the
/// observed failures recorded as notes.
IdentityReport congruence_scan(const std::vector<CorpusEntry>& corpus, long m_max = 5,
                               int n_max = 7);

}  // namespace matvar
