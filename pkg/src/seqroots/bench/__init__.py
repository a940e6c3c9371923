"""Benchmark harness: file formats, generators, experiment runners, CLI."""

from .coeffio import (export_trace, format_coeff_file, load_coeffs, parse_coeff_file,
                      result_document)
from .experiments import (ExperimentSpec, compare_baselines, run_radius_sweep,
                          run_schedule_sweep, run_solve)
from .generators import gen_random_poly, make_degenerate_poly
