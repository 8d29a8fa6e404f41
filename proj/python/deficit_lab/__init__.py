"""One-way information deficits and classical correlations of small bipartite
quantum states. Thin wrapper over the C++ core."""

try:
    from . import _core
except ImportError:  # in-tree builds leave _core outside the package
    import _core  # type: ignore[no-redef]

DensityMatrix = _core.DensityMatrix
MeasuredQuantities = _core.MeasuredQuantities
OptimizeResult = _core.OptimizeResult
ProjectiveMeasurement = _core.ProjectiveMeasurement
build_knr01_state = _core.build_knr01_state
build_sw99_state = _core.build_sw99_state
dephase_alice = _core.dephase_alice
entropy = _core.entropy
evaluate_measurement = _core.evaluate_measurement
i_go = _core.i_go
i_lo = _core.i_lo
maximize = _core.maximize
mutual_information = _core.mutual_information
orthogonal_chi_scan = _core.orthogonal_chi_scan
partial_trace = _core.partial_trace
pure_state = _core.pure_state

__all__ = [
    "DensityMatrix",
    "MeasuredQuantities",
    "OptimizeResult",
    "ProjectiveMeasurement",
    "build_knr01_state",
    "build_sw99_state",
    "dephase_alice",
    "entropy",
    "evaluate_measurement",
    "i_go",
    "i_lo",
    "maximize",
    "mutual_information",
    "orthogonal_chi_scan",
    "partial_trace",
    "pure_state",
]
