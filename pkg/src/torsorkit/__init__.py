"""Exact computations with noncommutative torsors over Q and F_p.

A torsor is a finite-dimensional algebra T with an algebra map
mu: T -> T (x) T^op (x) T obeying coassociativity and two unit laws.  From
it the package builds the Hopf algebra H of fixed points of the induced
descent datum, checks the Hopf-Galois property, computes the Grunspan
endomorphism, and does the same relative to a subalgebra B.
"""

from .algebra import FiniteAlgebra, check_algebra, opposite, tensor_algebra
from .btorsor import (
    BExtension,
    BTorsor,
    btorsor_from_galois_extension,
    centralizer,
    check_btorsor_axioms,
    hopf_from_btorsor,
    tensor_over_B,
)
from .errors import (
    AntipodeMissing,
    ClosureFailure,
    CoinvariantMismatch,
    CounitNotScalar,
    GaloisFailure,
    InconsistencyError,
    MembershipFailure,
    ParseError,
    TorsorkitError,
    UsageError,
    ValidationError,
)
from .exactla import GF, QQ, Field, Matrix, kernel_basis, rref, solve
from .galois import Coaction, coinvariants, galois_map, torsor_from_galois
from .grunspan import check_grunspan_axioms, grunspan_theta
from .hopf import Bialgebra, HopfAlgebra, antipode_from_beta, check_hopf_axioms, hopf_from_torsor
from .linmap import LinearMap, Subspace
from .report import Failure
from .specfile import load_spec
from .torsor import Torsor, check_mu_descent, check_torsor_axioms, descent_datum, torsor_from_hopf

__version__ = "0.1.0"
