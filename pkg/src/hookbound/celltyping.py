"""Four-type cell numbering for diagrams with a strictly staircased top.

Given a rational multiplier alpha > 1 and a diagram whose first delta rows
are strictly decreasing and end in a removable corner, every cell receives
a type and a number N, 1..n:

  type 1   rounds of full corner peeling, repeated while the running
           diagram keeps at least 2*alpha corners; each round is a color,
           cells numbered top to bottom with a running counter;
  type 2   rounds peeling only the corners outside the delta x delta
           square, repeated while at least alpha such corners exist;
  type 3   cells of the surviving diagram outside the (delta+rho) square,
           numbered shell by shell from the outermost shell inward (a
           shell Q_m holds the cells with row m or column m); within a
           shell the row segment comes first (increasing column), then the
           column segment (increasing row);
  type 4   everything else, numbered last in row-major order.

Hooks attached to the records are always hooks of the original diagram.
The returned typing has been checked against the invariants that make the
peeling argument sound: the counter inequality alpha*h <= N for every
type-1/2/3 cell numbered N >= alpha, the round lower bounds, the type-1
mass inequality, the type-4 budget, the type-4 falling-factorial product
bound, and the aggregate product over type-1/2/3 cells that the degree
bound rests on.  A failed check raises ConsistencyError.

The per-cell inequality alpha*h <= N cannot hold for the cells numbered
below alpha (the very first peeled corner has N = 1 and hook 1, and
alpha > 1), so those cells are exempted from the hard check and surfaced
through ``eq1_violations`` instead; the aggregate product inequality
absorbs them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, HypothesisError
from .partitions import Cell, Partition


def rho(delta: int, alpha: Fraction) -> int:
    """Correction term: delta^2 for integer alpha, else floor(delta^2/frac(alpha)) + 1."""
    alpha = Fraction(alpha)
    if alpha <= 1:
        raise HypothesisError("alpha > 1", f"got {alpha}")
    if delta < 1:
        raise HypothesisError("delta >= 1", f"got {delta}")
    if alpha.denominator == 1:
        return delta * delta
    frac = alpha - math.floor(alpha)
    return math.floor(Fraction(delta * delta) / frac) + 1


@dataclass(frozen=True)
class CellRecord:
    row: int
    col: int
    cell_type: int
    color: int
    number: int
    hook: int

    def as_list(self) -> list[int]:
        return [self.row, self.col, self.cell_type, self.color, self.number, self.hook]


@dataclass(frozen=True)
class CellTyping:
    partition: Partition
    alpha: Fraction
    delta: int
    rho: int
    tau: int
    r: int
    q: int
    s_rounds: tuple[int, ...]
    t_rounds: tuple[int, ...]
    counts: tuple[int, int, int, int]
    cells: tuple[CellRecord, ...]
    mu: Partition

    @property
    def n(self) -> int:
        return self.partition.n

    def by_number(self) -> dict[int, CellRecord]:
        return {rec.number: rec for rec in self.cells}

    def of_type(self, t: int) -> tuple[CellRecord, ...]:
        return tuple(rec for rec in self.cells if rec.cell_type == t)

    def eq1_violations(self) -> tuple[CellRecord, ...]:
        """Type-1/2/3 cells with alpha*hook > number (always numbered below alpha)."""
        a = self.alpha
        return tuple(
            rec
            for rec in self.cells
            if rec.cell_type in (1, 2, 3) and a * rec.hook > rec.number
        )

    def grid_lines(self) -> list[str]:
        """One character per cell (the type), one string per diagram row."""
        types = {(rec.row, rec.col): rec.cell_type for rec in self.cells}
        return [
            "".join(str(types[(i, j)]) for j in range(1, row + 1))
            for i, row in enumerate(self.partition.parts, start=1)
        ]

    def to_json_dict(self) -> dict:
        from .partitions import format_rational

        return {
            "partition": self.partition.format(),
            "alpha": format_rational(self.alpha),
            "delta": self.delta,
            "rho": self.rho,
            "tau": self.tau,
            "rounds_type1": self.r,
            "rounds_type2": self.q,
            "s_rounds": list(self.s_rounds),
            "t_rounds": list(self.t_rounds),
            "counts": list(self.counts),
            "cells": [rec.as_list() for rec in self.cells],
        }


def check_typing_hypotheses(lam: Partition, alpha: Fraction, factor: int = 9) -> tuple[int, int]:
    """Gate for the typing construction; returns (delta, tau).

    Raises HypothesisError naming the first failing condition.  ``factor``
    is 9 for the typing itself and 18 for the diagram reduction.
    """
    alpha = Fraction(alpha)
    if alpha <= 1:
        raise HypothesisError("alpha > 1", f"got {alpha}")
    n = lam.n
    if n < 1:
        raise HypothesisError("n >= 1", "empty partition")
    delta = lam.diagonal()
    if delta < factor * alpha:
        raise HypothesisError(
            f"delta >= {factor}*alpha", f"delta={delta}, {factor}*alpha={factor * alpha}"
        )
    if lam.part(1) * alpha > n:
        raise HypothesisError("lambda_1 <= n/alpha", f"lambda_1={lam.part(1)}, n={n}")
    conj = lam.conjugate()
    if conj.part(1) * alpha > n:
        raise HypothesisError("lambda'_1 <= n/alpha", f"lambda'_1={conj.part(1)}, n={n}")
    if factor == 9:
        for i in range(1, delta):
            if lam.part(i) <= lam.part(i + 1):
                raise HypothesisError(
                    "lambda_1 > ... > lambda_delta",
                    f"lambda_{i}={lam.part(i)} <= lambda_{i + 1}={lam.part(i + 1)}",
                )
        # The peeling needs every one of the first delta rows to be a corner:
        # row delta must strictly exceed both delta-1 cells... precisely, it
        # must reach the square (>= delta) and stick out past the next row.
        if lam.part(delta) < delta:
            raise HypothesisError(
                "lambda_delta >= delta", f"lambda_delta={lam.part(delta)}, delta={delta}"
            )
        if lam.part(delta) <= lam.part(delta + 1):
            raise HypothesisError(
                "row delta is a corner",
                f"lambda_delta={lam.part(delta)} <= lambda_{delta + 1}={lam.part(delta + 1)}",
            )
    tau = 0
    while (
        tau < delta
        and conj.part(tau + 1) > conj.part(tau + 2)
        and conj.part(tau + 2) >= delta
    ):
        tau += 1
    return delta, tau


def _corners_of(parts: list[int]) -> list[Cell]:
    out = []
    for i, row in enumerate(parts, start=1):
        nxt = parts[i] if i < len(parts) else 0
        if row > 0 and row > nxt:
            out.append(Cell(i, row))
    return out


def cell_typing(lam: Partition, alpha: Fraction) -> CellTyping:
    alpha = Fraction(alpha)
    delta, tau = check_typing_hypotheses(lam, alpha, factor=9)
    n = lam.n
    rho_val = rho(delta, alpha)
    hooks = lam.hook_grid()

    assigned: dict[Cell, tuple[int, int, int]] = {}  # cell -> (type, color, N)
    work = list(lam.parts)
    counter = 0
    color = 0

    # type 1: full corner-peeling rounds while at least 2*alpha corners remain
    s_rounds: list[int] = []
    while True:
        corners = _corners_of(work)
        if Fraction(len(corners)) < 2 * alpha:
            break
        color += 1
        s_rounds.append(len(corners))
        for cell in corners:  # top to bottom
            counter += 1
            assigned[cell] = (1, color, counter)
            work[cell.row - 1] -= 1
    r = len(s_rounds)

    # type 2: peel only corners outside the delta x delta square while >= alpha
    t_rounds: list[int] = []
    while True:
        outside = [c for c in _corners_of(work) if c.row > delta or c.col > delta]
        if Fraction(len(outside)) < alpha:
            break
        color += 1
        t_rounds.append(len(outside))
        for cell in outside:
            counter += 1
            assigned[cell] = (2, color, counter)
            work[cell.row - 1] -= 1
    q = len(t_rounds)

    mu = Partition(tuple(p for p in work if p > 0))
    mu_conj = mu.conjugate()

    # type 3: shells of mu outside the (delta+rho) square, outermost first
    k_max = max(mu.part(1), mu_conj.part(1)) if mu else 0
    inner = delta + rho_val
    for m in range(k_max, inner, -1):
        row_seg = [Cell(m, j) for j in range(1, mu.part(m) + 1)]
        col_seg = [Cell(i, m) for i in range(1, mu_conj.part(m) + 1)]
        if any(c.col > delta for c in row_seg) or any(c.row > delta for c in col_seg):
            raise ConsistencyError(
                f"shell {m} reaches past column/row delta; diagram has a cell "
                f"with both coordinates above delta"
            )
        for cell in row_seg + col_seg:
            counter += 1
            assigned[cell] = (3, m, counter)

    # type 4: whatever remains, numbered last in row-major order
    t123 = counter
    for cell in mu.cells():
        if cell not in assigned:
            counter += 1
            assigned[cell] = (4, 0, counter)
    if counter != n:
        raise ConsistencyError(f"numbered {counter} cells of {n}")

    records = tuple(
        CellRecord(cell.row, cell.col, *assigned[cell], hooks[cell])
        for cell in lam.cells()
    )
    counts = tuple(sum(1 for rec in records if rec.cell_type == t) for t in (1, 2, 3, 4))
    typing = CellTyping(
        partition=lam,
        alpha=alpha,
        delta=delta,
        rho=rho_val,
        tau=tau,
        r=r,
        q=q,
        s_rounds=tuple(s_rounds),
        t_rounds=tuple(t_rounds),
        counts=counts,
        cells=records,
        mu=mu,
    )
    _check_typing(typing, t123)
    return typing


def _check_typing(ct: CellTyping, t123: int) -> None:
    lam, alpha, n = ct.partition, ct.alpha, ct.n

    numbers = sorted(rec.number for rec in ct.cells)
    if numbers != list(range(1, n + 1)):
        raise ConsistencyError("numbering is not a bijection onto 1..n")
    if sum(ct.counts) != n:
        raise ConsistencyError("types do not partition the diagram")
    last_by_type = {}
    for rec in ct.cells:
        last_by_type.setdefault(rec.cell_type, []).append(rec.number)
    for lo, hi in ((1, 2), (2, 3), (3, 4)):
        if lo in last_by_type and hi in last_by_type:
            if max(last_by_type[lo]) >= min(last_by_type[hi]):
                raise ConsistencyError(f"type-{lo} numbers overlap type-{hi} numbers")

    if ct.s_rounds and ct.s_rounds[0] < ct.delta:
        raise ConsistencyError(f"first round removed {ct.s_rounds[0]} < delta corners")
    for s in ct.s_rounds[1:]:
        if Fraction(s) < 2 * alpha:
            raise ConsistencyError("type-1 round ran with fewer than 2*alpha corners")
    for t in ct.t_rounds:
        if Fraction(t) < alpha:
            raise ConsistencyError("type-2 round ran with fewer than alpha corners")

    # counter inequality for every type-1/2/3 cell numbered at least alpha,
    # then the aggregate product that the degree bound actually uses
    prod_n = 1
    prod_h = 1
    for rec in ct.cells:
        if rec.cell_type not in (1, 2, 3):
            continue
        if Fraction(rec.number) >= alpha and alpha * rec.hook > rec.number:
            raise ConsistencyError(
                f"alpha*h <= N fails at cell ({rec.row},{rec.col}) "
                f"with N={rec.number}, h={rec.hook}"
            )
        prod_n *= rec.number
        prod_h *= rec.hook
    p, q_ = alpha.numerator, alpha.denominator
    if prod_n * q_**t123 < p**t123 * prod_h:
        raise ConsistencyError("aggregate product over type-1/2/3 cells below alpha^|T123|")

    # type-1 mass: |T1| >= 2*alpha*r + alpha*delta
    if Fraction(ct.counts[0]) < 2 * alpha * ct.r + alpha * ct.delta:
        raise ConsistencyError(
            f"|T1|={ct.counts[0]} below 2*alpha*r + alpha*delta with r={ct.r}, delta={ct.delta}"
        )

    # type-4 budget and falling-factorial product
    t4 = ct.counts[3]
    if Fraction(t4) > ct.delta**2 + alpha * ct.rho:
        raise ConsistencyError(f"|T4|={t4} exceeds delta^2 + alpha*rho")
    prod_t4 = 1
    for rec in ct.cells:
        if rec.cell_type == 4:
            prod_t4 *= rec.hook
    falling = 1
    for i in range(t4):
        falling *= n - i
    if prod_t4 > falling:
        raise ConsistencyError("type-4 hook product exceeds the falling factorial")
