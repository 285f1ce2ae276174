"""Entanglement-assisted code parameters of finite-geometry LDPC codes.

A binary ``(n - k) x n`` parity-check matrix ``H`` yields an
``[[n, 2k - n + e, d; e]]`` entanglement-assisted code with
``e = rank(H H^T)`` ebits.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .gf2 import BinaryMatrix, gram, min_distance_exhaustive, rank_gf2
from .matrices import build, expected_shape

#: Largest null-space dimension for which ``d`` is found by enumeration.
DISTANCE_BUDGET = 24

#: Default geometry dimension for each family's parameter table.
DEFAULT_DIMENSION = {"eg1": 2, "eg2": 2, "pg1": 2, "pg2": 3}


@dataclass(frozen=True)
class CodeSpec:
    family: str
    p: int
    q: int
    n: int
    k_classical: int
    d: int
    #: ``"exhaustive"`` if ``d`` was enumerated, ``"design"`` if it is J + 1.
    d_provenance: str
    L: int
    J: int

    @property
    def s(self) -> int | None:
        """``log2 q`` when q is a power of two."""
        return self.q.bit_length() - 1 if self.q & (self.q - 1) == 0 else None

    @property
    def design_distance(self) -> int:
        return self.J + 1


@dataclass(frozen=True)
class EaqeccParams:
    n: int
    k_quantum: int
    e: int
    d: int

    @property
    def net_rate(self) -> Fraction:
        return Fraction(self.k_quantum - self.e, self.n)

    @property
    def entanglement_rate(self) -> Fraction:
        return Fraction(self.e, self.n)

    def __str__(self) -> str:
        return f"[[{self.n},{self.k_quantum},{self.d};{self.e}]]"


def code_spec(
    family: str, p: int, q: int, H: BinaryMatrix | None = None, budget: int = DISTANCE_BUDGET
) -> CodeSpec:
    """Classical parameters of a family member; ``d`` is exhaustive when ``k <= budget``."""
    if H is None:
        H = build(family, p, q)
    shape = expected_shape(family, p, q)
    n = H.n_cols
    k = n - rank_gf2(H)
    L = int(H.row_weights().max(initial=0))
    J = int(H.col_weights().max(initial=0))
    if 0 < k <= budget:
        d, provenance = min_distance_exhaustive(H, budget), "exhaustive"
    else:
        d, provenance = J + 1, "design"
    if (L, J) != (shape.L, shape.J):
        raise AssertionError(f"{family}({p},{q}): weights {(L, J)} != closed form {(shape.L, shape.J)}")
    return CodeSpec(family, p, q, n, k, d, provenance, L, J)


def derive_params(H: BinaryMatrix, spec: CodeSpec) -> EaqeccParams:
    e = rank_gf2(gram(H))
    return EaqeccParams(n=spec.n, k_quantum=2 * spec.k_classical - spec.n + e, e=e, d=spec.d)


def entanglement_rate_formula(family: str, value: int) -> Fraction:
    """Closed-form ``e/n`` for the three low-entanglement families.

    ``value`` is ``s`` (with ``q = 2^s``) for ``eg1`` and ``pg1`` on the plane,
    and ``q`` for ``pg2`` on PG(3, q).
    """
    if family == "eg1":
        s = value
        return Fraction(2**s, 2 ** (2 * s) - 1)
    if family == "pg1":
        s = value
        return Fraction(1, 2 ** (2 * s) + 2**s + 1)
    if family == "pg2":
        q = value
        return Fraction(q + 1, (1 + q + q**2) * (1 + q + q**2 + q**3))
    raise ValueError(f"no closed-form entanglement rate for family {family!r}")


@dataclass(frozen=True)
class TableRow:
    family: str
    p: int
    q: int
    spec: CodeSpec | None = None
    params: EaqeccParams | None = None
    error: str | None = None


def generate_table(
    family: str, qs: Iterable[int], p: int | None = None, budget: int = DISTANCE_BUDGET
) -> list[TableRow]:
    """One row per field size in ascending order; failures are kept as rows with ``error`` set."""
    p = DEFAULT_DIMENSION[family] if p is None else p
    rows = []
    for q in sorted(qs):
        try:
            H = build(family, p, q)
            spec = code_spec(family, p, q, H, budget)
            rows.append(TableRow(family, p, q, spec, derive_params(H, spec)))
        except (ValueError, AssertionError) as exc:
            rows.append(TableRow(family, p, q, error=str(exc)))
    return rows


CSV_COLUMNS = (
    "family", "p", "q", "s", "n", "k_classical", "k_quantum", "d", "d_provenance",
    "L", "J", "e", "net_rate", "entanglement_rate",
)


def _row_values(row: TableRow) -> dict:
    spec, params = row.spec, row.params
    return {
        "family": row.family,
        "p": row.p,
        "q": row.q,
        "s": "" if spec.s is None else spec.s,
        "n": spec.n,
        "k_classical": spec.k_classical,
        "k_quantum": params.k_quantum,
        "d": spec.d,
        "d_provenance": spec.d_provenance,
        "L": spec.L,
        "J": spec.J,
        "e": params.e,
        "net_rate": repr(float(params.net_rate)),
        "entanglement_rate": repr(float(params.entanglement_rate)),
    }


def table_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        if row.error is None:
            writer.writerow(_row_values(row))
    return buf.getvalue()


def format_table(rows: list[TableRow]) -> str:
    cols = ("q", "s", "n", "k_classical", "d", "d_provenance", "L", "J", "e", "k_quantum")
    header = ("q", "s", "n", "k", "d", "d_src", "L", "J", "e", "k_q", "code", "e/n")
    body = []
    for row in rows:
        if row.error is not None:
            body.append((str(row.q),) + ("-",) * (len(header) - 2) + (f"error: {row.error}",))
            continue
        values = _row_values(row)
        rate = row.params.entanglement_rate
        body.append(tuple(str(values[c]) for c in cols) + (str(row.params), f"{rate} ({float(rate):.4g})"))
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
    lines = ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in [header, *body]]
    return "\n".join(lines)
