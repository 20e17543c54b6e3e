#pragma once

#include <matchgraph/alternation.hh>
#include <matchgraph/c4.hh>
#include <matchgraph/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace matchgraph
{
    /**
     * Hypotheses of the sufficient condition for
     * chi(KG(G, rK_2)) = |E(G)| - (deg v_1 + ... + deg v_{r-1}): G connected,
     * r >= 2, a non-increasing degree order whose first r-1 vertices are
     * independent, r <= max(g/2, (deg v_{r-1} + 1)/4) for odd girth g, and
     * deg v_{r-1} even or deg v_{r-1} > deg v_r.
     */
    struct Grk2Report
    {
        int r = 0;
        bool connected = false;
        std::optional<int> odd_girth;
        std::optional<DegreeOrder> order;
        /// deg v_1, ..., deg v_{r-1} along the chosen order (or the plain degree order when none exists).
        std::vector<int> top_degrees;
        int degree_sum = 0;
        bool r_at_least_two = false;
        bool independent_prefix = false;
        bool inequality = false;
        bool parity = false;
        bool applicable = false;
        /// |E| - degree_sum
        int formula_value = 0;
        std::vector<std::string> failures;
    };

    auto grk2_conditions(const Graph & g, int r) -> Grk2Report;

    /**
     * Edge ordering read from an Eulerian tour. With odd vertices, a new vertex
     * w is joined to each of them, the tour starts at w and the new edges are
     * dropped; otherwise the tour starts at the last vertex of the degree
     * order. Throws std::invalid_argument for a disconnected graph.
     */
    auto euler_ordering(const Graph & g) -> EdgeOrdering;
    auto euler_ordering(const Graph & g, const DegreeOrder & order) -> EdgeOrdering;

    /**
     * Edge-disjoint, connected, even, non-empty subgraphs H_i of host, one per
     * root u_i, with deg_{H_i}(u_i) >= (r-1) deg_{H_i}(u) + c for every other
     * vertex u of H_i. roots must list every host vertex exactly once.
     */
    struct LocallyEulerianCertificate
    {
        Graph host;
        std::vector<int> roots;
        std::vector<std::vector<int>> subgraphs;
        int r = 2;
        int c = 0;
    };

    struct VerifyResult
    {
        bool ok = false;
        /// Name of the first violated clause, empty when ok.
        std::string clause;
        std::string detail;
    };

    auto verify_locally_eulerian(const LocallyEulerianCertificate & cert) -> VerifyResult;

    /**
     * The auxiliary even multigraph and its staged Eulerian tour: apex x joined
     * to every host vertex u_i by two edges f_i, f'_i (extra edges 2i and 2i+1
     * after the host edges), plus a vertex z joined to the odd host vertices
     * when there are any. Step i walks f_i, an Eulerian tour of H_i from u_i,
     * the first still untraversed leftover component containing u_i, then f'_i.
     */
    struct DenseTour
    {
        MultiGraphView multigraph;
        int apex = 0;
        std::optional<int> parity_vertex;
        /// Leftover components of (host + z edges) minus the H_i, ordered by smallest edge index.
        std::vector<std::vector<int>> leftover_components;
        std::vector<int> tour;
    };

    /// Throws CertificateError naming the violated clause when cert does not verify.
    auto dense_tour(const LocallyEulerianCertificate & cert) -> DenseTour;

    /// Orders E(g) as the dense tour traverses them; g must be a subgraph of host on its first vertices.
    auto dense_ordering(const Graph & g, const Graph & host, const LocallyEulerianCertificate & cert) -> EdgeOrdering;

    enum class ConstructionStatus
    {
        built,
        infeasible,
        indeterminate
    };

    auto to_string(ConstructionStatus s) -> std::string;

    struct LocallyEulerianConstruction
    {
        ConstructionStatus status = ConstructionStatus::indeterminate;
        std::optional<LocallyEulerianCertificate> certificate;
        /// Verification of the certificate against the requested (r, c).
        std::optional<VerifyResult> verification;
        /// floor((t-3)/8) and ceil((t-3)/8): copies per vertex under each reading.
        int copies_floor = 0;
        int copies_ceil = 0;
        /// Whether a saturating block assignment exists with copies_ceil copies, computed when the readings differ.
        std::optional<bool> ceil_reading_feasible;
        int blocks_inside = 0;
        std::string detail;
    };

    /**
     * Locally Eulerian family on K_{t,t'} from a monogamous C_4-decomposition of
     * K_{T,T'} (T, T' the sides rounded up to even). Blocks lying inside
     * K_{t,t'} are assigned to floor((t-3)/8) copies of each vertex through a
     * saturating bipartite matching; H_v is the union of v's blocks. The
     * decomposition is searched for when not supplied, and the result is
     * indeterminate when that search gives up.
     */
    auto locally_eulerian_from_c4(int t, int t_prime, int r, int c,
            const std::optional<C4Decomposition> & supplied = std::nullopt,
            const C4Options & search = {}) -> LocallyEulerianConstruction;
}
