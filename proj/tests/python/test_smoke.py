import math

import pytest

import sensitiveness as sens


def test_solve_printed_examples():
    assert sens.min_sample_size(sens.TestSpec("t2"), "d=0.5")["n_min"] == 48
    assert sens.min_sample_size(sens.TestSpec("chi2", df=1), "w=0.3")["n_min"] == 43
    result = sens.min_sample_size(sens.TestSpec("anova", groups=3), sens.EffectSize("f=0.25"))
    assert result["n_min"] == 102
    assert result["df"] == {"df1": 2, "df2": 99}
    assert round(result["critical_value"], 4) == 3.0882


def test_mes_and_posthoc():
    at30 = sens.mes_at_n(sens.TestSpec("t2"), 30)
    assert abs(at30["mes"]["value"] - 0.64) <= 0.005
    assert abs(sens.mes_at_n(sens.TestSpec("t2", sig=0.01), 164)["mes"]["value"] - 0.37) <= 0.005
    assert sens.mes_at_n(sens.TestSpec("chi2", df=2), 67, metric="V2")["mes"]["metric"] == "V"
    assert sens.post_hoc_sensitiveness(30, 48) == -37.5
    assert sens.post_hoc_sensitiveness(102, 48) == 112.5


def test_power():
    assert abs(sens.power_at_n(sens.TestSpec("t2"), sens.EffectSize("d=0.5"), 48) - 0.52) <= 0.01
    assert sens.min_n_for_power(sens.TestSpec("t2"), "d=0.5")["n"] == 102
    assert sens.min_n_for_power(sens.TestSpec("anova", groups=2), "f=0.25")["n"] == 128


def test_tables():
    t2 = sens.generate_table2()
    s2 = sens.generate_supp_table2()
    assert len(t2) == 36 and len(s2) == 33
    assert (t2[4]["n_sns"], t2[4]["n_pwr"]) == (48, 102)
    assert (t2[-1]["n_sns"], t2[-1]["n_pwr"]) == (80, 90)


def test_distributions():
    assert abs(sens.quantile("t", 0.95, 28) - 1.7011) < 5e-4
    assert abs(sens.cdf("chi2", 3.8415, 1) - 0.95) < 1e-4
    assert abs(sens.sf("F", 3.0882, 2, 99) - 0.05) < 1e-4
    assert sens.noncentral_cdf("t", 1.3, 0.0, 12) == pytest.approx(sens.cdf("t", 1.3, 12), abs=1e-12)


def test_pairwise_gof():
    r = sens.pairwise_gof(158, 149, "PWR-SNS")
    assert round(r["chi2"], 2) == 0.26 and round(r["w"], 2) == 0.03 and round(r["p"], 2) == 0.61
    assert math.isclose(r["chi2"], 81 / 307)


def test_simulation_is_deterministic():
    a = sens.run_simulation(seed=3, pops_per_study=10)
    b = sens.run_simulation({"seed": 3, "pops_per_study": 10, "threads": 2})
    assert a["outcomes"] == b["outcomes"]
    assert len(a["outcomes"]) == 2
    assert "PWR-SNS" in a["comparison_markdown"]


def test_errors():
    with pytest.raises(sens.SpecError):
        sens.TestSpec("anova")
    with pytest.raises(ValueError):
        sens.EffectSize("q=1")
    with pytest.raises(sens.SpecError):
        sens.min_sample_size(sens.TestSpec("t2"), "f=0.2")
    with pytest.raises(sens.ConfigError):
        sens.run_simulation(n_studies=0)
    with pytest.raises(sens.NumericError):
        sens.min_sample_size(sens.TestSpec("t2"), "d=1e-9")
