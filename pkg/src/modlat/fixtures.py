"""Shipped data: derived Gram matrices, the length-4 code generator, and
the reference tables of decompositions and weak secrecy gains.

Provenance:
  - BW16_GRAM: derived.  Basis of {x in Z^16 : x mod 2 in RM(1,4),
    sum(x) = 0 mod 4} with the form halved.  Validated in the test suite
    (det 2^8, even, theta coefficients match Theta_D4^4 - 96*Delta_16).
  - K12_GRAM: derived.  Basis of {x in Z[w]^6 : x mod 2 in hexacode}
    (w a primitive cube root of unity), realified.  Validated likewise
    (det 3^6, even, theta matches Theta_A2^6 - 36*Delta_12).
  - PSOLE_DIM8_GENERATOR: the published length-4 Hermitian self-dual
    code generator over F3+vF3.
  - TABLE1/TABLE2/TABLE3: published decomposition polynomials and weak
    secrecy gains; chi values are 6-significant-digit prints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

BW16_GRAM = [
    [8, 4, 4, 0, 4, 0, 2, 0, 4, 0, 6, 0, -6, 0, 4, 2],
    [4, 4, 2, 1, 2, -3, 1, 1, 2, -2, 6, 1, -4, -1, 5, 2],
    [4, 2, 4, 1, 2, 3, 4, 1, 2, 2, 4, 1, -4, 1, 4, 2],
    [0, 1, 1, 4, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [4, 2, 2, -1, 4, 0, 4, 1, 2, 0, 6, -1, -6, 0, 4, 2],
    [0, -3, 3, 0, 0, 12, 6, 0, 0, 8, -4, 0, 0, 4, -2, 0],
    [2, 1, 4, 0, 4, 6, 12, 4, 0, 4, 8, 0, -8, 2, 8, 4],
    [0, 1, 1, 0, 1, 0, 4, 4, -1, 0, 0, 0, 0, 0, 0, 0],
    [4, 2, 2, 0, 2, 0, 0, -1, 4, 0, 6, 0, -6, 0, 4, 2],
    [0, -2, 2, 0, 0, 8, 4, 0, 0, 8, -4, 0, 0, 4, -2, 0],
    [6, 6, 4, 0, 6, -4, 8, 0, 6, -4, 32, 2, -24, -2, 28, 12],
    [0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 2, 4, 2, 0, 0, 0],
    [-6, -4, -4, 0, -6, 0, -8, 0, -6, 0, -24, 2, 24, 0, -28, -12],
    [0, -1, 1, 0, 0, 4, 2, 0, 0, 4, -2, 0, 0, 4, -2, 0],
    [4, 5, 4, 0, 4, -2, 8, 0, 4, -2, 28, 0, -28, -2, 52, 20],
    [2, 2, 2, 0, 2, 0, 4, 0, 2, 0, 12, 0, -12, 0, 20, 8],
]

K12_GRAM = [
    [4, -2, 0, 0, 0, 0, -6, 3, -3, -4, -3, -2],
    [-2, 4, 0, 0, 0, 0, 3, -6, -3, 2, 3, 1],
    [0, 0, 4, -2, 0, 0, 0, 0, 3, -1, -3, -2],
    [0, 0, -2, 4, 0, 0, 0, 0, -6, -1, 3, 1],
    [0, 0, 0, 0, 4, -2, 0, 0, 0, -1, 0, 1],
    [0, 0, 0, 0, -2, 4, 0, 0, 0, -1, -3, -2],
    [-6, 3, 0, 0, 0, 0, 12, -6, 6, 8, 6, 4],
    [3, -6, 0, 0, 0, 0, -6, 12, 6, -4, -6, -2],
    [-3, -3, 3, -6, 0, 0, 6, 6, 24, 6, -6, 0],
    [-4, 2, -1, -1, -1, -1, 8, -4, 6, 8, 6, 4],
    [-3, 3, -3, 3, 0, -3, 6, -6, -6, 6, 12, 6],
    [-2, 1, -2, 1, 1, -2, 4, -2, 0, 4, 6, 4],
]

#: Generator of the length-4 Hermitian self-dual code over F3+vF3, as
#: (a, b) pairs meaning a + b*v:  [1, 0, v, -1-v; 0, 1, -1+v, v].
PSOLE_DIM8_GENERATOR = [
    [(1, 0), (0, 0), (0, 1), (2, 2)],
    [(0, 0), (1, 0), (2, 1), (0, 1)],
]


@dataclass(frozen=True)
class TableRow:
    dim: int
    name: str
    ell: int
    kind: str                 # "even" (two-generator weight basis) | "general" (f1/Delta_4 basis)
    coeffs: tuple             # decomposition coefficients, mu/i ascending
    chi_w: float              # reference weak secrecy gain
    catalog_name: str | None  # catalog Gram, where one is shipped


TABLE1 = (
    TableRow(2, "A2", 3, "even", (1,), 1.01789, "A2"),
    TableRow(4, "D4", 2, "even", (1,), 1.08356, "D4"),
    TableRow(12, "K12", 3, "even", (1, -36), 1.66839, "K12"),
    TableRow(14, "C2xG(2,3)", 3, "even", (1, -42), 1.85262, None),
    TableRow(16, "BW16", 2, "even", (1, -96), 2.20564, "BW16"),
    TableRow(20, "HS20", 2, "even", (1, -120), 3.03551, None),
    TableRow(22, "A2xA11", 3, "even", (1, -66), 3.12527, None),
    TableRow(24, "L24.2", 3, "even", (1, -72, -216), 3.92969, None),
)

TABLE2 = (
    TableRow(8, "dim8", 2, "general", (1, -8, 0), 1.22672, "ExampleDim8"),
    TableRow(12, "dim12", 2, "general", (1, -12, 0, 0), 1.49049, None),
    TableRow(16, "dim16", 2, "general", (1, -16, 0, 0, 0), 2.06968, None),
    TableRow(18, "dim18", 2, "general", (1, -18, 18, 0, 0), 2.35656, None),
    TableRow(20, "dim20", 2, "general", (1, -20, 40, 0, 0, 0), 2.70165, None),
    TableRow(22, "dim22", 2, "general", (1, -22, 66, -4, 0, 0), 3.11161, None),
    TableRow(24, "dim24", 2, "general", (1, -24, 96, -28, 0, 0, 0), 3.60867,
             None),
    TableRow(26, "dim26", 2, "general", (1, -26, 130, -80, 0, 0, 0), 4.21349,
             None),
    TableRow(28, "dim28", 2, "general", (1, -28, 168, -176, 32, 0, 0, 0),
             4.98013, None),
    TableRow(30, "dim30", 2, "general", (1, -30, 210, -282, 112, 0, 0, 0),
             5.72703, None),
)


@dataclass(frozen=True)
class Table3Row:
    dim: int
    name: str
    ell: int
    chi: float            # reference value (lower bound for modular rows)
    modular_key: str | None  # TABLE1/TABLE2 row name to recompute from
    recompute_zn: bool = False


TABLE3 = (
    Table3Row(2, "Z^2", 1, 1.0, None, True),
    Table3Row(2, "A2", 3, 1.01789, "A2"),
    Table3Row(4, "Z^4", 1, 1.0, None, True),
    Table3Row(4, "D4", 2, 1.08356, "D4"),
    Table3Row(12, "D12+", 1, 1.6, None),
    Table3Row(12, "K12", 3, 1.66839, "K12"),
    Table3Row(14, "(E7^2)+", 1, 1.77778, None),
    Table3Row(14, "C2xG(2,3)", 3, 1.85262, "C2xG(2,3)"),
    Table3Row(16, "(D8^2)+", 1, 2.0, None),
    Table3Row(16, "dim16 code lattice", 2, 2.06968, "dim16"),
    Table3Row(16, "BW16", 2, 2.20564, "BW16"),
    Table3Row(18, "(D6^3)+ or (A9^2)+", 1, 2.28571, None),
    Table3Row(18, "dim18 code lattice", 2, 2.35656, "dim18"),
    Table3Row(20, "(A5^4)+", 1, 2.66667, None),
    Table3Row(20, "dim20 code lattice", 2, 2.70165, "dim20"),
    Table3Row(20, "HS20", 2, 3.03551, "HS20"),
    Table3Row(22, "(A1^22)+", 1, 3.2, None),
    Table3Row(22, "A2xA11", 3, 3.12527, "A2xA11"),
)


def table_row(name):
    """Find a Table 1/2 row by its name."""
    for row in TABLE1 + TABLE2:
        if row.name == name:
            return row
    raise KeyError("no table row named %r" % name)
