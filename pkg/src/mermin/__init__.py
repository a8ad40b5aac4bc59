"""Analytic and numerical tools for Mermin-inequality violation by three-qubit states."""
from .analytic import (AnalyticVerdict, SliceSpectrum, analytic_max, analytic_threshold, analyze,
                       slice_spectra)
from .bloch import BlochDecomposition, CorrelationSlices, decompose, reconstruct, slices
from .config import TOL, Tolerances
from .numeric import (DiscrepancyReport, MeasurementSettings, OptimizationResult, OptimizerConfig,
                      best_response, discrepancy, expectation_tensor, expectation_trace,
                      mermin_operator, numeric_max)
from .qstate import (DensityMatrix, InvalidStateError, PureState, apply_local_unitary, ket, mix,
                     pure_to_density, random_haar_pure, random_mixed)
from .states import FamilySpec, build, fixture_lambdas

__version__ = "0.1.0"
