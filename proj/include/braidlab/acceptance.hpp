#ifndef BRAIDLAB_ACCEPTANCE_HPP
#define BRAIDLAB_ACCEPTANCE_HPP

#include <vector>

#include "braidlab/report.hpp"
#include "braidlab/tensor.hpp"

namespace braidlab {

// Declares every symbol the batch checks use, in a fixed order, so that
// canonical forms do not depend on scheduling.
void declare_standard_symbols();

// The complete verification battery; checks run concurrently up to `jobs`
// and are returned sorted by name.
std::vector<Report> run_acceptance_suite(int jobs = 0);

// Supporting conformance helpers shared by the battery and the CLI.
Report check_braiding_axioms(SuperDim dim);
Report check_skew_pair(SuperDim dim);
Report check_defining_relations(SuperDim dim);
Report check_graded_dims(SuperDim dim);
Report check_casimir_centrality(SuperDim dim, int max_power);
Report check_basic_example_centrality();
Report check_cayley_hamilton(SuperDim dim);
Report check_overlap_dichotomy();
Report check_poisson_battery();
Report check_orbit_battery();

// Graded dimensions of the free super-commutative algebra on the matrix
// entries (used for conformance reporting; the test oracle recomputes it
// independently).
std::vector<long> supersymmetric_dims(SuperDim dim, int max_degree);

} // namespace braidlab

#endif
