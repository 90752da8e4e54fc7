"""
Reproduction des tableaux comparatifs publiés (T = 2.5 µs et 10 µs,
B = 100 MHz, fs = 500 MHz) par balayage des paramètres de conception.

Grilles :
- polynôme : degré {5, 7, 9, 11, 13} x paramètres de fenêtre
- spline : lambda sur 10 décades (pas d'une demi-décade, plus lambda = 0)
  x k {40, 73.68, 100} x n_points {501, 1001, 2001} pour Gauss,
  x (nbar, eta) {4, 5, 6} x {35, 40, 45} dB pour Taylor

Lent : lancer avec ``pytest -m slow``.
"""

import pytest

from nlfm.synthesis.commands.compare import run_compare
from nlfm.synthesis.commands.sweep import run_sweep
from nlfm.synthesis.config import DesignConfig, SweepGrid, config_from_mapping

pytestmark = pytest.mark.slow

PULSE_LENGTHS = (2.5e-6, 10e-6)
DEGREES = "degree=5,7,9,11,13"
WINDOW_GRIDS = {
    "gaussian": ["k=40,73.68,100"],
    "taylor": ["nbar=4,5,6", "eta_db=35,40,45"],
}
TAYLOR_MAX_ETA_DB = 45.0


def lambda_ladder(pulse_length):
    """lambda = c T³, c de 1e-11 à 1e-1 par demi-décade, précédé de 0."""
    values = [10.0 ** (-11.0 + step / 2.0) * pulse_length ** 3 for step in range(21)]
    return "lambda=" + ",".join(["0"] + [repr(value) for value in values])


def spline_grid(window, pulse_length):
    specs = WINDOW_GRIDS[window] + [lambda_ladder(pulse_length)]
    if window == "gaussian":
        specs.append("n_points=501,1001,2001")
    return SweepGrid.parse(specs)


@pytest.fixture(scope="module")
def sweeps():
    """(fenêtre, T, méthode) -> (configuration de base, SweepResult)."""
    results = {}
    for pulse_length in PULSE_LENGTHS:
        for window in WINDOW_GRIDS:
            base = DesignConfig(window=window, pulse_length=pulse_length, method="polynomial")
            grid = SweepGrid.parse(WINDOW_GRIDS[window] + [DEGREES])
            results[(window, pulse_length, "polynomial")] = (base, run_sweep(base, grid))

            base = DesignConfig(window=window, pulse_length=pulse_length, method="spline", lam=0.0)
            results[(window, pulse_length, "spline")] = (base, run_sweep(base, spline_grid(window, pulse_length)))
    return results


def best_row(sweeps, window, pulse_length, method):
    _, result = sweeps[(window, pulse_length, method)]
    row = result.best("psl")
    assert row is not None, f"aucun point exploitable pour {window} / {method} / T = {pulse_length}"
    return row


def best_config(sweeps, window, pulse_length, method):
    base, result = sweeps[(window, pulse_length, method)]
    row = best_row(sweeps, window, pulse_length, method)
    return config_from_mapping({key: row[key] for key in result.grid.keys}, base)


class TestPolynomialColumn:
    """Colonne polynôme du tableau des PSL."""

    @pytest.mark.parametrize("window,pulse_length,bound", [
        ("gaussian", 2.5e-6, -29.0),
        ("gaussian", 10e-6, -30.0),
        ("taylor", 2.5e-6, -30.0),
        ("taylor", 10e-6, -30.0),
    ])
    def test_best_psl(self, sweeps, window, pulse_length, bound):
        assert best_row(sweeps, window, pulse_length, "polynomial")["psl_db"] <= bound


class TestGaussianSplineColumn:
    """Colonne spline de lissage, fenêtre de Gauss."""

    @pytest.mark.parametrize("pulse_length,bound", [(2.5e-6, -38.0), (10e-6, -47.0)])
    def test_best_psl(self, sweeps, pulse_length, bound):
        assert best_row(sweeps, "gaussian", pulse_length, "spline")["psl_db"] <= bound

    @pytest.mark.parametrize("pulse_length,gain", [(2.5e-6, -8.0), (10e-6, -16.0)])
    def test_improvement_over_polynomial(self, sweeps, pulse_length, gain):
        spline = best_row(sweeps, "gaussian", pulse_length, "spline")["psl_db"]
        polynomial = best_row(sweeps, "gaussian", pulse_length, "polynomial")["psl_db"]
        assert spline - polynomial <= gain

    @pytest.mark.parametrize("pulse_length,published", [(2.5e-6, 2.01), (10e-6, 2.24)])
    def test_nmlw_at_best_point(self, sweeps, pulse_length, published):
        nmlw = best_row(sweeps, "gaussian", pulse_length, "spline")["nmlw"]
        assert nmlw == pytest.approx(published, abs=0.35)


class TestTaylorSplineColumn:
    """
    Colonne spline de lissage, fenêtre de Taylor.

    La DSP suit w(f) : l'ACF approche la transformée de la fenêtre, dont les
    premiers lobes secondaires sont à -eta dB. Avec eta <= 45 dB le PSL ne
    descend pas sous ce plancher.
    """

    @pytest.mark.parametrize("pulse_length,bound", [(2.5e-6, -35.0), (10e-6, -40.0)])
    def test_best_psl(self, sweeps, pulse_length, bound):
        assert best_row(sweeps, "taylor", pulse_length, "spline")["psl_db"] <= bound

    @pytest.mark.parametrize("pulse_length", PULSE_LENGTHS)
    def test_psl_floor_set_by_eta(self, sweeps, pulse_length):
        psl = best_row(sweeps, "taylor", pulse_length, "spline")["psl_db"]
        assert psl > -(TAYLOR_MAX_ETA_DB + 2.0)

    @pytest.mark.parametrize("pulse_length", PULSE_LENGTHS)
    def test_not_worse_than_polynomial(self, sweeps, pulse_length):
        spline = best_row(sweeps, "taylor", pulse_length, "spline")["psl_db"]
        polynomial = best_row(sweeps, "taylor", pulse_length, "polynomial")["psl_db"]
        assert spline <= polynomial


class TestMainlobe:
    """Élargissement du lobe principal."""

    def test_nmlw_above_one(self, sweeps):
        for (window, pulse_length, method), (_, result) in sweeps.items():
            for row in result.successful():
                assert row["nmlw"] > 1.0, (window, pulse_length, method, row)


class TestComparisonTable:
    """Tableau comparatif construit sur les meilleurs points."""

    @pytest.fixture(scope="class")
    def table(self, sweeps):
        configs = [
            best_config(sweeps, window, pulse_length, method)
            for pulse_length in PULSE_LENGTHS
            for window in WINDOW_GRIDS
            for method in ("polynomial", "spline")
        ]
        return run_compare(configs)

    def test_layout(self, table):
        assert table.methods == ["polynomial", "smoothing_spline", "lfm"]
        assert [(row["window"], row["pulse_length_us"]) for row in table.rows] == [
            ("gaussian", 2.5), ("taylor", 2.5), ("lfm", 2.5),
            ("gaussian", 10.0), ("taylor", 10.0), ("lfm", 10.0),
        ]

    def test_lfm_reference(self, table):
        for row in table.rows:
            if row["window"] == "lfm":
                assert row["lfm_psl_db"] == pytest.approx(-13.2, abs=0.3)
                assert row["lfm_nmlw"] == 1.0

    def test_matches_sweep(self, table, sweeps):
        for row in table.rows:
            if row["window"] == "lfm":
                continue
            pulse_length = next(T for T in PULSE_LENGTHS if round(T * 1e6, 9) == row["pulse_length_us"])
            for method, label in (("polynomial", "polynomial"), ("spline", "smoothing_spline")):
                expected = best_row(sweeps, row["window"], pulse_length, method)["psl_db"]
                assert row[f"{label}_psl_db"] == pytest.approx(expected, abs=1e-9)

    def test_published_values_attached(self, table):
        for row in table.rows:
            if row["window"] != "lfm":
                assert row["polynomial_published_psl_db"] is not None
                assert row["smoothing_spline_published_nmlw"] is not None
