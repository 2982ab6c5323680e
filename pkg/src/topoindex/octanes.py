"""The 18 octane isomers: structures, measured properties and reference tables.

Property values are kept as the literal strings of the source table so CSV
export reproduces them character for character. Structures are SMILES
written from the IUPAC names; the reference index table acts as a checksum
on them.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import cached_property

from .graph import Graph
from .smiles import parse_alkane

PROPERTY_NAMES: tuple[str, ...] = ("entropy", "acen_fac", "hvap", "dhvap")
PROPERTY_LABELS: dict[str, str] = {
    "entropy": "Entropy",
    "acen_fac": "AcenFac",
    "hvap": "HVAP",
    "dhvap": "DHVAP",
}

# name, smiles, entropy, acentric factor, HVAP, DHVAP
_TABLE1 = """\
n-octane                   CCCCCCCC          111.70 0.39790 73.19 9.915
2-methyl-heptane           CC(C)CCCCC        109.80 0.37792 70.30 9.484
3-methyl-heptane           CCC(C)CCCC        111.30 0.37100 71.30 9.521
4-methyl-heptane           CCCC(C)CCC        109.30 0.37150 70.91 9.483
3-ethyl-hexane             CCC(CC)CCC        109.40 0.36247 71.70 9.476
2,2-dimethyl-hexane        CC(C)(C)CCCC      103.40 0.33943 67.70 8.915
2,3-dimethyl-hexane        CC(C)C(C)CCC      108.00 0.34825 70.20 9.272
2,4-dimethyl-hexane        CC(C)CC(C)CC      107.00 0.34422 68.50 9.029
2,5-dimethyl-hexane        CC(C)CCC(C)C      105.70 0.35683 68.60 9.051
3,3-dimethyl-hexane        CCC(C)(C)CCC      104.70 0.32260 68.50 8.973
3,4-dimethyl-hexane        CCC(C)C(C)CC      106.60 0.34035 70.20 9.316
2-methyl-3-ethyl-pentane   CC(C)C(CC)CC      106.10 0.33243 69.70 9.209
3-methyl-3-ethyl-pentane   CCC(C)(CC)CC      101.50 0.30690 69.30 9.081
2,2,3-trimethyl-pentane    CC(C)(C)C(C)CC    101.30 0.30082 67.30 8.826
2,2,4-trimethyl-pentane    CC(C)(C)CC(C)C    104.10 0.30537 64.87 8.402
2,3,3-trimethyl-pentane    CC(C)C(C)(C)CC    102.10 0.29318 68.10 8.897
2,3,4-trimethyl-pentane    CC(C)C(C)C(C)C    102.40 0.31742 68.37 9.014
2,2,3,3-tetramethylbutane  CC(C)(C)C(C)(C)C   93.06 0.25529 66.20 8.410
"""

# M1 M2 W R S Salpha Sbeta Smu Ralpha, as printed (same row order as above)
_TABLE3 = """\
26 24 84 3.914  98  90 48  84 2.144
28 26 79 3.770 114 104 52  98 1.971
28 27 76 3.808 116  98 54 106 1.956
28 27 75 3.808 116 110 54 107 1.991
28 28 72 3.846 118 114 56 115 1.964
32 30 71 3.561 152 138 60 132 1.754
30 30 70 3.681 134 126 60 129 1.784
30 29 71 3.664 132 124 58 121 1.799
30 28 74 3.626 130 118 56 113 1.801
32 32 67 3.621 156 146 64 148 1.718
30 31 68 3.719 136 130 62 136 1.753
30 31 67 3.719 136 132 62 137 1.770
32 34 64 3.682 160 152 68 163 1.645
34 35 63 3.481 174 162 70 171 1.527
34 32 66 3.417 168 156 64 147 1.606
34 36 62 3.504 176 164 72 179 1.489
32 33 65 3.553 152 144 66 151 1.589
38 40 58 3.250 214 194 80 217 1.277
"""

GOLDEN_COLUMNS: tuple[str, ...] = (
    "m1", "m2", "wiener", "randic", "s_ev", "s_alpha", "s_beta", "s_mu", "r_ve",
)
REAL_COLUMNS = frozenset({"randic", "r_ve"})

# Row orders of the reference correlation tables.
TABLE2_ROWS: tuple[str, ...] = (
    "s_ev", "s_alpha", "s_beta", "s_mu", "r_ve", "wiener", "m1", "m2", "randic",
)
NEW_INDICES: tuple[str, ...] = ("s_ev", "s_alpha", "s_beta", "s_mu", "r_ve")
OLD_INDICES: tuple[str, ...] = ("wiener", "m1", "m2", "randic")

PRINTED_TABLE2: tuple[tuple[float, ...], ...] = (
    (-0.9614, -0.9829, -0.8425, -0.9043),
    (-0.9565, -0.9906, -0.8279, -0.8931),
    (-0.9410, -0.9864, -0.7281, -0.8118),
    (-0.9481, -0.9863, -0.7552, -0.8118),
    (0.9486, 0.9829, 0.8351, 0.8924),
    (0.8772, 0.9656, 0.7381, 0.8202),
    (-0.9543, -0.9731, -0.8860, -0.9361),
    (-0.9410, -0.9864, -0.7281, -0.8118),
    (0.9063, 0.9043, 0.9359, 0.9580),
)
PRINTED_TABLE4: tuple[tuple[float, ...], ...] = (
    (0.9242, 0.9660, 0.7098, 0.8177),
    (0.9148, 0.9812, 0.6854, 0.7976),
    (0.8854, 0.9729, 0.5301, 0.6590),
    (0.8988, 0.9727, 0.5703, 0.6590),
    (0.8998, 0.9660, 0.6973, 0.7963),
    (0.7694, 0.9323, 0.5447, 0.6727),
    (0.9106, 0.9469, 0.7849, 0.8762),
    (0.8854, 0.9729, 0.5301, 0.6590),
    (0.8213, 0.8177, 0.8759, 0.9177),
)
PRINTED_TABLE5: tuple[tuple[float, ...], ...] = (
    (-0.9177, 0.9951, 0.9676, -0.9441),
    (0.9483, 0.9818, 0.9774, -0.9182),
    (-0.9683, 0.9495, 1.000, -0.8609),
    (-0.9567, 0.9523, 0.9982, -0.8645),
    (0.9478, -0.9764, -0.9758, 0.9365),
)
# printed as a lower triangle; mirrored here
PRINTED_TABLE6: tuple[tuple[float, ...], ...] = (
    (1.0000, 0.9901, 0.9676, 0.9738, -0.9758),
    (0.9901, 1.0000, 0.9774, 0.9797, -0.9752),
    (0.9676, 0.9774, 1.0000, 0.9982, -0.9758),
    (0.9738, 0.9797, 0.9982, 1.0000, -0.9701),
    (-0.9758, -0.9752, -0.9758, -0.9701, 1.0000),
)


@dataclass(frozen=True)
class MoleculeRecord:
    name: str
    smiles: str
    entropy: float
    acen_fac: float
    hvap: float
    dhvap: float
    raw_properties: tuple[str, str, str, str]

    @cached_property
    def skeleton(self) -> Graph:
        return parse_alkane(self.smiles)

    def property(self, name: str) -> float:
        if name not in PROPERTY_NAMES:
            raise KeyError(f"unknown property {name!r}")
        return getattr(self, name)


@dataclass(frozen=True)
class GoldenRow:
    name: str
    values: dict[str, float]


def _load_records() -> tuple[MoleculeRecord, ...]:
    records = []
    for line in _TABLE1.splitlines():
        name, smiles, *raw = line.split()
        entropy, acen_fac, hvap, dhvap = (float(x) for x in raw)
        records.append(
            MoleculeRecord(name, smiles, entropy, acen_fac, hvap, dhvap, tuple(raw))
        )
    return tuple(records)


_RECORDS = _load_records()


def octane_isomers() -> list[MoleculeRecord]:
    """The 18 isomers in fixed order, n-octane first."""
    return list(_RECORDS)


def golden_index_table() -> list[GoldenRow]:
    rows = []
    for record, line in zip(_RECORDS, _TABLE3.splitlines()):
        values: dict[str, float] = {}
        for column, text in zip(GOLDEN_COLUMNS, line.split()):
            values[column] = float(text) if column in REAL_COLUMNS else int(text)
        rows.append(GoldenRow(record.name, values))
    return rows


def property_column(name: str) -> list[float]:
    return [r.property(name) for r in _RECORDS]


def normalize_name(name: str) -> str:
    """Join key for molecule names: case-folded, hyphens/spaces/underscores dropped."""
    return "".join(ch for ch in name.casefold() if ch not in "-_ \t")


def find_isomer(name: str) -> MoleculeRecord | None:
    key = normalize_name(name)
    for r in _RECORDS:
        if normalize_name(r.name) == key:
            return r
    return None


def dataset_csv() -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "smiles", *PROPERTY_NAMES])
    for r in _RECORDS:
        writer.writerow([r.name, r.smiles, *r.raw_properties])
    return buf.getvalue()
