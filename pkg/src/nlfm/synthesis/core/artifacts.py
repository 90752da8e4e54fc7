"""
Écriture et relecture des artefacts d'une conception.

Les fichiers de données (CSV, JSON, binaire I/Q) ne contiennent aucun
horodatage : deux exécutions identiques produisent des octets identiques.
L'heure et la durée d'exécution vont dans ``manifest.json`` uniquement.
"""

import csv
import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence

import numpy as np

from ...core.errors import InvalidInputError
from .acf import AcfCurve, AcfReport
from .waveform import Waveform

WAVEFORM_CSV = "waveform.csv"
WAVEFORM_IQ = "waveform.iq"
WAVEFORM_META = "waveform.meta.json"
ACF_CSV = "acf.csv"
REPORT_JSON = "report.json"
MODEL_JSON = "frequency_model.json"
ACF_SVG = "acf.svg"
MANIFEST_JSON = "manifest.json"


def _number(value: float) -> str:
    """Représentation aller-retour exacte d'un float."""
    return repr(float(value))


def write_json(path: Path, document: Dict[str, Any]) -> Path:
    path = Path(path)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        json.dump(document, f, ensure_ascii=False, indent=2, sort_keys=True)
        f.write('\n')
    return path


def write_rows_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    path = Path(path)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if value is None else value for value in row])
    return path


def write_waveform_csv(path: Path, waveform: Waveform) -> Path:
    """Colonnes : index, t_seconds, re, im."""
    t = waveform.time
    rows = (
        (i, _number(t[i]), _number(s.real), _number(s.imag))
        for i, s in enumerate(waveform.samples)
    )
    return write_rows_csv(path, ("index", "t_seconds", "re", "im"), rows)


def read_waveform_csv(path: Path, sample_rate: float, pulse_length: float) -> Waveform:
    """Relit un CSV écrit par ``write_waveform_csv``."""
    with open(path, 'r', encoding='utf-8', newline='') as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None or not {"re", "im"} <= set(reader.fieldnames):
            raise InvalidInputError(f"colonnes re/im absentes de {path}")
        values = [complex(float(row["re"]), float(row["im"])) for row in reader]
    return Waveform(
        samples=np.asarray(values, dtype=complex),
        sample_rate=sample_rate,
        pulse_length=pulse_length,
    )


def write_waveform_iq(path: Path, waveform: Waveform) -> Path:
    """Paires float64 petit-boutistes (I, Q) entrelacées + métadonnées JSON."""
    path = Path(path)
    interleaved = np.empty(2 * len(waveform), dtype='<f8')
    interleaved[0::2] = waveform.samples.real
    interleaved[1::2] = waveform.samples.imag
    path.write_bytes(interleaved.tobytes())
    write_json(path.with_name(WAVEFORM_META), waveform.to_metadata())
    return path


def read_waveform_iq(path: Path) -> Waveform:
    path = Path(path)
    meta = json.loads(path.with_name(WAVEFORM_META).read_text(encoding='utf-8'))
    interleaved = np.frombuffer(path.read_bytes(), dtype='<f8')
    return Waveform(
        samples=interleaved[0::2] + 1j * interleaved[1::2],
        sample_rate=meta["sample_rate_hz"],
        pulse_length=meta["pulse_length_s"],
        label=meta.get("label", {}),
    )


def write_acf_csv(path: Path, curve: AcfCurve) -> Path:
    """Colonnes : lag_seconds, magnitude, db."""
    rows = (
        (_number(lag), _number(mag), _number(db))
        for lag, mag, db in zip(curve.lags, curve.magnitude, curve.db)
    )
    return write_rows_csv(path, ("lag_seconds", "magnitude", "db"), rows)


def read_acf_csv(path: Path) -> AcfCurve:
    with open(path, 'r', encoding='utf-8', newline='') as f:
        rows: List[Dict[str, str]] = list(csv.DictReader(f))
    return AcfCurve(
        lags=np.array([float(r["lag_seconds"]) for r in rows]),
        magnitude=np.array([float(r["magnitude"]) for r in rows]),
    )


def write_report_json(path: Path, report: AcfReport, provenance: Dict[str, Any]) -> Path:
    document = report.to_dict()
    document["provenance"] = {**report.label, **provenance}
    return write_json(path, document)
