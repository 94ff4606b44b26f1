# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

from ._version import __version__  # noqa: F401
from .config import get_threads, set_limit, set_threads, setup_config  # noqa: F401
from .crystal import (  # noqa: F401
    CrystalWord,
    OscillatingTableau,
    conjugate_word,
    crystal_op,
    energy_H,
    highest_weight_words,
    one_dim_sum_X,
    oscillating_tableau,
    rsk_Q,
    xi_class,
)
from .kostka import (  # noqa: F401
    SemistandardTableau,
    charge,
    kostka_A,
    kostka_A_charge_oracle,
    kostka_full,
    kostka_tilde,
    ktilde_B_via_D,
    ktilde_via_decomposition,
)
from .lrbranch import (  # noqa: F401
    branch_alt,
    branch_stable,
    cols_even,
    lr_coeff,
    restrict_B_to_D,
    rows_even,
)
from .partfn import Fq, coeff_bcd, fq, pq, pq_brute_oracle  # noqa: F401
from .qmult import (  # noqa: F401
    K1,
    K2,
    K11,
    U,
    U_via_branch,
    V,
    check_conj_duality,
    check_dual_hat,
    u,
    u_via_branch,
)
from .qpoly import LaurentPoly  # noqa: F401
from .verify import VerifySuiteReport, run_suite  # noqa: F401
from .weyl import Partition, SignedPerm, Weight, hat, involution_I, rho  # noqa: F401

setup_config()  # checks os.environ
