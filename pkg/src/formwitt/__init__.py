"""Exact (sigma, eps, Lambda)-quadratic forms over small fields and a certified Witt engine."""

from .errors import (BudgetExceeded, CertificationError, FieldMismatchError,
                     FormError, HypothesisError, InfiniteFieldError,
                     PreconditionError, UnliftableError)
from .fields import (AdditiveSubgroup, Field, FieldElement, coset_reduce,
                     hilbert90_solve, lambda_max, lambda_min, named_field,
                     norm_one_elements, subgroup_validate)
from .forms import (FormClass, FormKind, FormParams, Q_of, classify,
                    enumerate_forms, euclidean_form, form_equal,
                    from_classical, hyperbolic_form, omega_of, pullback,
                    scale_form, x_membership)
from .geometry import (FormedSpace, PartialIsometry, building, coxeter_space,
                       is_isometry, is_isotropic, kernel,
                       orthogonal_complement, radical, relative_building)
from .linalg import (Matrix, Subspace, complement_containing,
                     enumerate_subspaces, rref, simultaneous_complement, solve)
from .witt import (ExtensionProblem, Isometry, extend_by_identity,
                   isotropic_transport, relative_witt_extend, witt_extend)

__version__ = "0.1.0"
