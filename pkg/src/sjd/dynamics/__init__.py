"""Motion generated by Hamiltonians linear in the Jacobi generators."""

from sjd.dynamics.coeffs import (
    HamiltonianCoeffs,
    NonHermitianCoeffs,
    RiccatiRoots,
    coeffs_at,
    random_hermitian,
    riccati_roots,
    stack_coeffs,
)
from sjd.dynamics.energy import (
    HessianClassification,
    conserved_energy_eta,
    conserved_energy_eta_printed_alpha,
    conserved_energy_w,
    critical_point,
    energy,
    energy_eta,
    energy_gradient,
    energy_hessian,
    energy_w,
    hessian_classify,
    printed_hessian_function,
    printed_hessian_g,
)
from sjd.dynamics.eom import CHARTS, eom, eom_from_generators, eom_nonhermitian_disk, eom_nonhermitian_fc
from sjd.dynamics.geodesics import disk_geodesic_residual, geodesic_disk, geodesic_particular, geodesic_residual
from sjd.dynamics.integrator import StepParams, Trajectory, integrate_numeric, integrate_ode, integrate_riccati_linear
from sjd.dynamics.linear import (
    EtaClosedForm,
    eta_closed_form,
    eta_fixed_point,
    printed_qr,
    solve_eta_closed,
    solve_eta_linear_system,
    solve_z_variation,
)
from sjd.dynamics.phases import (
    berry_increments,
    berry_one_form,
    berry_phase,
    circle_berry_exact,
    circle_path,
    cumulative_dynamical_phase,
    dynamical_phase,
    path_length,
    polyline_path,
    richardson,
)
from sjd.dynamics.riccati import (
    constants_ratio_relation,
    disk_constants,
    disk_threshold,
    one_minus_abs2,
    solve_riccati_disk,
    solve_riccati_uhp,
    solve_riccati_uhp_constants,
    stays_in_disk,
    uhp_abc,
    uhp_constants,
    uhp_constants_from_disk,
    uhp_fixed_point,
)
