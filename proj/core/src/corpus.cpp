#include "galoispoint/pipeline.hpp"

namespace gp {

namespace {

// origin = literature: value printed in the source text.
// origin = computed: value from an independent hand or oracle computation.
constexpr std::string_view kCorpus = R"corpus(
id = quartic_kummer_t4
origin = literature
kummer = 4; q = t^4 + 1; c = 2, 1, 1, 1
expect.curve = 5*x^12 - 16*x^13 + 18*x^14 - 8*x^15 + x^16 - 6*x^8*y^4 + 12*x^9*y^4
  - 6*x^10*y^4 + 4*x^4*y^8 - 4*x^5*y^8 - y^12
expect.degree = 16
expect.multiplicity = 12
expect.projection_degree = 4
expect.irreducibility = certified
expect.is_galois = true
expect.group_order = 4
expect.factor = [[-z, 1 - t^4], [-z, 1]]
expect.solution_dimension = 1
expect.order = 4
expect.birational = true
expect.preserves_curve = true
expect.rho_trivial = true

id = cusp_quartic_p1_moved
origin = literature
curve = (X + Y)^3*Z - X^3*Y
point = (1 : 0 : 0)
expect.degree = 4
expect.multiplicity = 1
expect.projection_degree = 3
expect.is_galois = true
expect.group_order = 3
# x <- 1/x against the printed y x / ((w - 1) x + w y), after the X <-> Z swap
expect.moebius = [[z*t, z - 1], [0, t]]
expect.solution_dimension = 1
expect.order = 3
expect.birational = true
expect.preserves_curve = true
expect.rho_trivial = true

id = cusp_quartic_p1
origin = literature
curve = X^4 - X^3*Y + Y^3*Z
point = (1 : 1 : 0)
expect.multiplicity = 1
expect.projection_degree = 3
expect.is_galois = true
expect.group_order = 3
expect.solution_dimension = 1
expect.order = 3
expect.birational = true
expect.preserves_curve = true

id = cusp_quartic_p2
origin = literature
curve = X^4 - X^3*Y + Y^3*Z
point = (8 : -16 : 3)
expect.multiplicity = 1
expect.is_galois = true
expect.group_order = 3
expect.order = 3
expect.preserves_curve = true

id = cusp_quartic_q1_flex
origin = computed
curve = X^4 - X^3*Y + Y^3*Z
point = (0 : 1 : 0)
command = analyze
expect.multiplicity = 1
expect.projection_degree = 3
expect.is_galois = false

id = flex_quartic_p3
origin = literature
curve = X^4 - Y^3*Z
point = (0 : 1 : 0)
# the computed chart relation is x^4 = y, not the printed x^3 - y
expect.fiber = x^3 - t
expect.multiplicity = 1
expect.is_galois = true
expect.group_order = 3
expect.moebius = [[z, 0], [0, 1]]
expect.order = 3
expect.preserves_curve = true

id = flex_quartic_p4_outer
origin = literature
curve = X^4 - Y^3*Z
point = (1 : 0 : 0)
command = analyze
expect.multiplicity = 0
expect.projection_degree = 4
expect.status = unsupported_degree

id = flex_quartic_p4_kummer
origin = literature
kummer = 4; q = 1/t^3; c = 0, 1, 0, 0
expect.curve = x*y^3 - 1
expect.multiplicity = 0
expect.projection_degree = 4
expect.is_galois = true
expect.group_order = 4
expect.moebius = [[z, 0], [0, 1]]
expect.order = 4
expect.birational = true
expect.preserves_curve = true

id = kummer_cubic_mixed
origin = computed
kummer = 3; q = t; c = 0, 1, 1
expect.fiber = x^3 - 3*t*x - t^2 - t
expect.is_galois = true
expect.factor = [[z, -t], [-z, 1]]
expect.moebius = [[z - t, z*t - t], [1 - z, 1 - z*t]]
expect.solution_dimension = 1
expect.order = 3
expect.birational = true
expect.preserves_curve = true

id = kummer_cube_root
origin = computed
kummer = 3; q = t; c = 0, 1, 0
expect.curve = x^4 - y
expect.fiber = x^3 - t
expect.moebius = [[z, 0], [0, 1]]
expect.order = 3
expect.preserves_curve = true

id = kummer_cubic_c1_zero
origin = computed
kummer = 3; q = t; c = 1, 0, 1
expect.is_galois = true
expect.order = 3
expect.preserves_curve = true
expect.diagnostic = closed form agrees

id = non_galois_cubic
origin = computed
curve = x^4 - x^2 - y
point = (0 : 0 : 1)
command = analyze
expect.fiber = x^3 - x - t
expect.is_galois = false
expect.group_order = none

id = fermat_cubic_outer
origin = computed
curve = X^3 + Y^3 + Z^3
point = (0 : 0 : 1)
expect.multiplicity = 0
expect.projection_degree = 3
expect.is_galois = true
expect.group_order = 3
expect.moebius = [[z, 0], [0, 1]]
expect.order = 3
expect.preserves_curve = true
)corpus";

}  // namespace

std::string_view bundled_corpus() { return kCorpus; }

}  // namespace gp
