"""Per-(n, k) table of small weighted Padovan graphs, measured on the built graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .closed_forms import FamilyParams, format_polynomial, weight_range
from .graph_core import build_graph, cube_polynomial_bruteforce, diameter, shape_name


@dataclass(frozen=True)
class ReportRow:
    n: int
    kmin: int
    kmax: int
    k: int | None = None
    p: int | None = None
    q: int | None = None
    order: int = 0
    size: int = 0
    diameter: int | None = None
    cubes: tuple[int, ...] = ()
    shape: str = "empty"

    def cells(self) -> list[str]:
        def show(x):
            return "-" if x is None else str(x)

        cube = format_polynomial(self.cubes) if self.k is not None else "-"
        return [
            str(self.n), str(self.kmin), str(self.kmax), show(self.k), show(self.p), show(self.q),
            str(self.order), str(self.size), show(self.diameter), cube, self.shape,
        ]


HEADER = ["n", "kmin", "kmax", "k", "p", "q", "|V|", "|E|", "diam", "cube_polynomial", "shape"]


def report_rows(max_n: int) -> list[ReportRow]:
    rows = []
    for n in range(1, max_n + 1):
        kmin, kmax = weight_range(n)
        if kmin > kmax:
            rows.append(ReportRow(n, kmin, kmax))
            continue
        for k in range(kmin, kmax + 1):
            params = FamilyParams.from_nk(n, k)
            g = build_graph("padovan", params)
            rows.append(
                ReportRow(
                    n, kmin, kmax, k, params.p, params.q, g.order, g.size,
                    diameter(g), cube_polynomial_bruteforce(g), shape_name(g),
                )
            )
    return rows


def format_table(rows: list[ReportRow]) -> str:
    lines = ["\t".join(HEADER)] + ["\t".join(r.cells()) for r in rows]
    return "\n".join(lines) + "\n"
