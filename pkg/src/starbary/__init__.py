"""Barycentric rational interpolation on starlike domains.

Radially the interpolant uses (possibly shifted) Chebyshev points with
Berrut-type weights, angularly (possibly shifted) equispaced points with the
trigonometric barycentric kernel.  A starlike domain is mapped onto the disk
of radius 2, where the tensor-product interpolant lives.
"""

from .bary_core import (
    CstKind,
    EtaWeights,
    NodeSet1D,
    PeriodicNodeSet,
    chebyshev_nodes,
    cst,
    equispaced_nodes,
    eval_rational_1d,
    eval_trig_1d,
    radial_eta_weights,
)
from .conformal_maps import (
    AngularShift,
    RadialShift,
    apply_angular,
    apply_radial,
    make_angular_shift,
    make_radial_shift,
)
from .disk_tensor import (
    DiskInterpolant,
    TensorGrid,
    build_disk_interpolant,
    eval_disk,
    lebesgue_estimate,
)
from .errors import (
    DomainError,
    EmptyGridError,
    InvalidArgumentError,
    InvalidBoundaryError,
    NotStarlikeError,
    OutsideDomainError,
    SamplingError,
    StarbaryError,
)
from .kernels import BACKEND
from .starlike import (
    DomainInterpolant,
    StarlikeDomain,
    build_domain_interpolant,
    contains,
    domain_from_file,
    domain_from_function,
    domain_from_samples,
    eval_domain,
    map_S,
    map_S_inv,
)

__version__ = "0.1.0"
