"""Parameter sweeps: rank L_s versus rank L_1 for tight (2s-1)-designs, and
the rationality of angle sets of the tight designs in RP^1."""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .designs import rp1_rational
from .jacobi import FIELDS, DesignParams, design_bound, rank_closed, rank_last

COLUMNS = ("field", "n", "s", "t", "rank_L1", "rank_Ls", "equal", "bound")


class CensusInvariantError(AssertionError):
    pass


@dataclass(frozen=True)
class CensusRow:
    field: str
    n: int
    s: int
    t: int
    rank_L1: Fraction
    rank_Ls: Fraction
    equal: bool
    bound: Fraction

    @property
    def difference(self) -> Fraction:
        return self.rank_Ls - self.rank_L1

    def as_strings(self) -> dict:
        return {
            "field": self.field, "n": str(self.n), "s": str(self.s), "t": str(self.t),
            "rank_L1": str(self.rank_L1), "rank_Ls": str(self.rank_Ls),
            "equal": "true" if self.equal else "false", "bound": str(self.bound),
        }


def classify(field: str, n: int, s: int) -> CensusRow:
    if s < 2:
        raise ValueError("the critical inequality concerns s >= 2")
    params = DesignParams(field, n, 2 * s - 1)
    N, m = params.N, params.m
    r1 = (N - m) * (N + 1) / m
    assert r1 == rank_closed(params, 1)
    rs = rank_last(params)
    return CensusRow(field, n, s, params.t, r1, rs, r1 == rs, design_bound(params))


def lower_bound_gap(field: str, n: int) -> Fraction:
    """(N-m)((N-m)^2 - (m^2+m+1)) / (m(m+1)), a lower bound on rank L_s - rank L_1."""
    p = DesignParams(field, n, 3)
    d, m = p.N - p.m, p.m
    return d * (d * d - (m * m + m + 1)) / (m * (m + 1))


def fp1_difference(field: str, s: int) -> Fraction:
    """Closed form of rank L_s - rank L_1 on the projective line."""
    if field == "R":
        return Fraction(-1)
    if field == "C":
        return Fraction(s - 3)
    return Fraction(s * (s + 1) * (s + 2), 6) - 5


def _check_row(row: CensusRow) -> None:
    m = DesignParams(row.field, row.n, row.t).m
    if row.difference < lower_bound_gap(row.field, row.n):
        raise CensusInvariantError(f"gap below the lower bound at {row}")
    if row.n * row.n > 1 + 1 / m + 1 / (m * m) and not row.rank_Ls > row.rank_L1:
        raise CensusInvariantError(f"expected rank L_s > rank L_1 at {row}")
    if row.field == "R" and row.n == 2 and row.rank_Ls != 2 * row.s:
        raise CensusInvariantError(f"expected rank L_s = 2s at {row}")
    if row.n == 1 and row.difference != fp1_difference(row.field, row.s):
        raise CensusInvariantError(f"projective-line difference mismatch at {row}")


def _classify_args(args):
    return classify(*args)


def sweep(fields=FIELDS, n_max: int = 10, s_max: int = 12, jobs: int = 1) -> list[CensusRow]:
    """All rows with 1 <= n <= n_max and 2 <= s <= s_max, ordered by
    (field, n, s); each row is checked against the case analysis."""
    if n_max < 1 or s_max < 1:
        raise ValueError("n_max and s_max must be >= 1")
    keys = [(f, n, s) for f in fields for n in range(1, n_max + 1) for s in range(2, s_max + 1)]
    if jobs > 1 and len(keys) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_classify_args, keys, chunksize=32))
    else:
        rows = [classify(*k) for k in keys]
    for row in rows:
        _check_row(row)
    return rows


def rationality_table(t_max: int) -> list[tuple[int, bool]]:
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    table = [(t, rp1_rational(t)) for t in range(1, t_max + 1)]
    rational = {t for t, ok in table if ok}
    if rational != {1, 2, 3, 5} & set(range(1, t_max + 1)):
        raise CensusInvariantError(f"rational cases {sorted(rational)} differ from {{1, 2, 3, 5}}")
    return table


def rows_to_csv(rows: list[CensusRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_strings())
    return buf.getvalue()


def rows_to_json(rows: list[CensusRow]) -> str:
    out = []
    for r in rows:
        d = r.as_strings()
        d.update(n=r.n, s=r.s, t=r.t, equal=r.equal)
        out.append(d)
    return json.dumps(out, indent=1) + "\n"
