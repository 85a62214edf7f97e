#ifndef COBORD_ICIS_HPP
#define COBORD_ICIS_HPP

#include <map>
#include <string>
#include <vector>

#include "cobord/graded_poly.hpp"

namespace cobord {

// A map-germ (C^N, 0) -> (C^{N-p}, 0): components are polynomials with zero
// constant term over the ambient coordinates.
struct GermMap {
    std::vector<std::string> variables;
    std::vector<GradedPoly> components;

    int num_vars() const { return static_cast<int>(variables.size()); }
    int num_components() const { return static_cast<int>(components.size()); }
    int dim() const { return num_vars() - num_components(); }
};

// Components separated by ';'. Ambient variables are the identifiers of the
// expression in order of first appearance unless given explicitly.
GermMap parse_germ(const std::string& text, std::vector<std::string> variables = {});

struct ICISInvariants {
    int tau = 0;
    int determinacy_bound = 0;
    int length_N = 0;
    int dim_p = 0;
};

// dim of O/(<gens> + m^{k+1}) as the number of monomials of degree <= k minus
// the rank of the truncated multiples of the generators.
int truncated_quotient_dim(const std::vector<GradedPoly>& gens, int num_vars, int k);

// Tjurina number: dim O^{c}/(Df * O^N + <f_1..f_c> O^{c}), computed in
// successive truncations until two consecutive values agree.
// Throws NoStabilization when the cap is reached first.
int tjurina(const GermMap& f, int max_truncation = 16);

// dim O/(Jacobian ideal), stabilized the same way; for quasi-homogeneous
// hypersurface germs this equals the Tjurina number.
int milnor_number(const GermMap& f, int max_truncation = 16);

// Smallest k with m^{k+1} contained in m^2*J(f) + m*<f> (a sufficient
// criterion, hence an upper bound for the true degree of determinacy).
// Hypersurface germs only; throws Unsupported otherwise, NoBound at the cap.
int determinacy_bound(const GermMap& f, int max_k = 24);

// Length of O/(<components> + m^{k+1}).
int length_N(const GermMap& f, int k);

ICISInvariants compute_invariants(const GermMap& f, int max_truncation = 16);

// A named singularity with its computed invariants.
struct SingularityRecord {
    std::string label;
    std::string germ;
    std::vector<std::string> variables;
    int tau = 0;
    int determinacy = 0;
    int length = 0;
};

using SingularityTable = std::map<std::string, SingularityRecord>;

// The shipped labels: A1..A5, D4 (curve singularities on surfaces) and
// tan2..tan5 (point-scheme tangency types), recomputed from their germs.
std::vector<SingularityRecord> builtin_singularities();
SingularityTable builtin_singularity_table();

// Tangency data: labels at assigned points (alpha) and unassigned points
// (beta) on an ambient variety of dimension n.
struct TangencyProblem {
    std::vector<std::string> alpha;
    std::vector<std::string> beta;
    int ambient_dim = 0;
};

int tau_total(const std::vector<std::string>& labels, const SingularityTable& table);

// (n-1)|alpha| + tau(alpha) + tau(beta). Throws UnknownLabel.
int codim_tangency(const TangencyProblem& problem, const SingularityTable& table);

} // namespace cobord

#endif
