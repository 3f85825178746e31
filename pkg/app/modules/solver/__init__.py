# -*- coding: utf-8 -*-
from modules.solver.problem import Budget, CoverProblem, CoverSolution, Demand, DemandKind
from modules.solver.candidates import CandidateTable, build_candidates
from modules.solver.engine import solve_min_cover
from modules.solver.oracle import ORACLE_CAP, brute_force_oracle
from modules.solver.katztao import (
    KatzTaoReport, LowerBoundReport, SumsetGraphInstance, harmonic_mean_family, infer_harmonic_mean,
    katz_tao_wiring, lower_bound_instance, verify_katz_tao, within_sumset_bound
)
from modules.solver.curves import (
    ExponentRow, ExponentTable, Quantity, SweepRow, Windows, exponent_curve, make_problem, window_sweep
)
