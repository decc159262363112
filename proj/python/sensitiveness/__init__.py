"""Sensitiveness analysis: the minimum sample size at which a chosen minimum
effect size is statistically significant, with a power baseline and the
nested-population simulation."""

import json

from ._sensitiveness import (
    ConfigError,
    DegenerateInputError,
    DomainError,
    EffectSize,
    NumericError,
    SpecError,
    TestSpec,
    cdf,
    noncentral_cdf,
    post_hoc_sensitiveness,
    power_at_n,
    quantile,
    sf,
)
from . import _sensitiveness as _core

__all__ = [
    "ConfigError",
    "DegenerateInputError",
    "DomainError",
    "EffectSize",
    "NumericError",
    "SpecError",
    "TestSpec",
    "cdf",
    "generate_supp_table2",
    "generate_table2",
    "mes_at_n",
    "min_n_for_power",
    "min_sample_size",
    "noncentral_cdf",
    "pairwise_gof",
    "post_hoc_sensitiveness",
    "power_at_n",
    "quantile",
    "run_simulation",
    "sf",
]


def _es(value):
    return value if isinstance(value, EffectSize) else EffectSize(value)


def mes_at_n(spec, n, metric=None):
    """Critical value and minimum effect size at total sample size n."""
    return json.loads(_core._mes_at_n(spec, n, metric))


def min_sample_size(spec, target, report_decimals=None):
    """Smallest N whose MES is at or below target ("d=0.5" or an EffectSize)."""
    return json.loads(_core._min_sample_size(spec, _es(target), report_decimals))


def min_n_for_power(spec, es, power=0.8, allocation="balanced"):
    """Smallest N with power at least `power` for population effect `es`."""
    return json.loads(_core._min_n_for_power(spec, _es(es), power, allocation))


def generate_table2():
    """Sensitiveness and power N for Cohen's benchmarks over 12 tests (36 rows)."""
    return json.loads(_core._generate_table2())


def generate_supp_table2():
    """Critical values and achieved effect sizes for the d, chi2 and F rows (33 rows)."""
    return json.loads(_core._generate_supp_table2())


def pairwise_gof(f1, f2, label=""):
    """Two-cell goodness-of-fit chi2 with effect size w and p."""
    return json.loads(_core._pairwise_gof(f1, f2, label))


def run_simulation(config=None, paper_scale=False, **overrides):
    """Run the sampling-strategy simulation.

    `config` is a dict with SimulationConfig keys; missing keys keep the desk
    defaults (or the full-size design with paper_scale=True). Keyword
    arguments override individual keys, e.g. seed=7.
    """
    merged = dict(config or {})
    merged.update(overrides)
    return json.loads(_core._run_simulation(json.dumps(merged), paper_scale))
