"""LP relaxation over maximal cliques, solved with a dense-tableau simplex."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

import numpy as np

from .graph import Graph, WeightedInstance, bipartition
from .solvers import SearchConfig, exact_mwbis


class CliqueLimitError(RuntimeError):
    pass


class SimplexError(RuntimeError):
    """Iteration cap exceeded. ``diagnostics`` describes the last tableau."""

    def __init__(self, message: str, diagnostics: dict):
        super().__init__(f"{message}: {diagnostics}")
        self.diagnostics = diagnostics


def enumerate_maximal_cliques(graph: Graph, max_cliques: int = 100_000) -> list[frozenset[int]]:
    """All maximal cliques, each exactly once (Bron–Kerbosch with pivoting).

    Bipartite graphs are answered directly: their maximal cliques are the
    edges plus the isolated vertices.
    """
    bip, _ = bipartition(graph)
    if bip is not None:
        out = [frozenset(e) for e in graph.edges()]
        out += [frozenset((v,)) for v in range(graph.n) if graph.degree(v) == 0]
        if len(out) > max_cliques:
            raise CliqueLimitError(f"more than max_cliques={max_cliques} maximal cliques")
        return out

    nbr = graph.neighbor_sets
    out: list[frozenset[int]] = []

    def expand(r: set, p: set, x: set):
        if not p and not x:
            out.append(frozenset(r))
            if len(out) > max_cliques:
                raise CliqueLimitError(f"more than max_cliques={max_cliques} maximal cliques")
            return
        pivot = max(p | x, key=lambda u: (len(p & nbr[u]), -u))
        for v in sorted(p - nbr[pivot]):
            expand(r | {v}, p & nbr[v], x & nbr[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(graph.n)), set())
    return out


@dataclass(frozen=True)
class LpConstraint:
    """``sum(coef * x[i] for i, coef in terms) <= rhs``."""

    terms: tuple[tuple[int, int], ...]
    rhs: int
    name: str = ""
    relation: str = "<="


@dataclass(frozen=True)
class LpModel:
    num_vars: int
    objective: tuple
    constraints: tuple[LpConstraint, ...]

    def dense(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        a = np.zeros((len(self.constraints), self.num_vars))
        for r, con in enumerate(self.constraints):
            for i, coef in con.terms:
                a[r, i] = coef
        b = np.array([con.rhs for con in self.constraints], dtype=float)
        c = np.array(self.objective, dtype=float)
        return a, b, c

    @property
    def integral(self) -> bool:
        return all(isinstance(v, int) for v in self.objective) and all(
            isinstance(coef, int) for con in self.constraints for _, coef in con.terms
        ) and all(isinstance(con.rhs, int) for con in self.constraints)

    def residuals(self, x) -> np.ndarray:
        """Per-row violation ``max(0, A x - b)``."""
        a, b, _ = self.dense()
        return np.maximum(a @ np.asarray(x, dtype=float) - b, 0.0)


@dataclass(frozen=True)
class LpSolution:
    values: np.ndarray
    objective: float
    status: str  # "optimal" | "unbounded" | "infeasible"
    duals: np.ndarray | None = None
    iterations: int = 0
    exact_objective: Fraction | None = None
    exact_values: tuple[Fraction, ...] | None = field(default=None, repr=False)
    basis: tuple[int, ...] = ()


def build_lp(instance: WeightedInstance, max_cliques: int = 100_000) -> LpModel:
    """Budget row followed by one ``<= 1`` row per maximal clique."""
    n = instance.graph.n
    rows = [LpConstraint(tuple((i, 1) for i in range(n)), instance.k, "budget")]
    cliques = enumerate_maximal_cliques(instance.graph, max_cliques)
    for j, clique in enumerate(sorted(cliques, key=sorted)):
        rows.append(LpConstraint(tuple((i, 1) for i in sorted(clique)), 1, f"clique{j + 1}"))
    return LpModel(n, tuple(instance.weights), tuple(rows))


def solve_lp(model: LpModel, tol: float = 1e-10, max_iter: int | None = None,
             certify: bool = True, bland_after: int | None = None) -> LpSolution:
    """Maximise ``c x`` subject to ``A x <= b``, ``x >= 0`` (requires ``b >= 0``).

    Starts from the all-slack basis and pivots with Dantzig's rule. After
    ``bland_after`` consecutive pivots without objective progress (default
    ``5 * (rows + cols)``) it switches to Bland's rule for good. For integer data the final point is
    certified in rational arithmetic.
    """
    a, b, c = model.dense()
    m, n = a.shape
    if np.any(b < 0):
        raise ValueError("solve_lp needs non-negative right-hand sides")
    tab = np.zeros((m + 1, n + m + 1))
    tab[:m, :n] = a
    tab[:m, n:n + m] = np.eye(m)
    tab[:m, -1] = b
    tab[m, :n] = -c
    basis = list(range(n, n + m))

    stall_limit = 5 * (m + n) if bland_after is None else bland_after
    if max_iter is None:
        max_iter = 50 * (m + n) + 1000
    bland = stall_limit <= 0
    stall = 0
    it = 0
    while True:
        reduced = tab[m, :-1]
        if bland:
            cand = np.flatnonzero(reduced < -tol)
            if cand.size == 0:
                break
            col = int(cand[0])
        else:
            col = int(np.argmin(reduced))
            if reduced[col] >= -tol:
                break
        column = tab[:m, col]
        pos = column > tol
        if not pos.any():
            return LpSolution(np.full(n, np.nan), float("inf"), "unbounded", iterations=it)
        ratios = np.full(m, np.inf)
        ratios[pos] = tab[:m, -1][pos] / column[pos]
        best = ratios.min()
        ties = np.flatnonzero(ratios <= best + tol)
        row = int(min(ties, key=lambda r: basis[r])) if bland else int(ties[0])

        if it >= max_iter:
            raise SimplexError("simplex iteration cap exceeded", {
                "iterations": it, "rows": m, "cols": n, "bland": bland,
                "objective": float(tab[m, -1]), "basis": list(basis),
                "entering": col, "leaving_row": row,
            })
        before = tab[m, -1]
        tab[row] /= tab[row, col]
        for r in range(m + 1):
            if r != row and tab[r, col] != 0.0:
                tab[r] -= tab[r, col] * tab[row]
        basis[row] = col
        it += 1
        if tab[m, -1] > before + tol:
            stall = 0
        else:
            stall += 1
            if stall > stall_limit:
                bland = True

    x = np.zeros(n + m)
    x[basis] = tab[:m, -1]
    values = np.clip(x[:n], 0.0, None)
    duals = tab[m, n:n + m].copy()
    sol = LpSolution(values, float(c @ values), "optimal", duals, it, basis=tuple(basis))
    if certify and model.integral:
        exact = _certify(model, values, duals, basis)
        if exact is not None:
            xs, obj = exact
            sol = LpSolution(values, float(obj), "optimal", duals, it, obj, xs, tuple(basis))
    return sol


def _certify(model: LpModel, x: np.ndarray, y: np.ndarray, basis: list[int]):
    """Exact optimal point and objective, or ``None`` if certification fails.

    First tries rounding primal and dual to nearby rationals and checking
    primal feasibility, dual feasibility, and equal objectives exactly. If
    that fails, solves the final basis in rational arithmetic.
    """
    for denom in (10**4, 10**8):
        xs = [Fraction(float(v)).limit_denominator(denom) for v in x]
        ys = [Fraction(float(v)).limit_denominator(denom) for v in y]
        if _optimal_pair(model, xs, ys):
            return tuple(xs), sum(Fraction(c) * v for c, v in zip(model.objective, xs))
    xs = _basis_solve(model, basis)
    if xs is None:
        return None
    ys = _dual_from_basis(model, basis)
    if ys is None or not _optimal_pair(model, xs, ys):
        return None
    return tuple(xs), sum(Fraction(c) * v for c, v in zip(model.objective, xs))


def _optimal_pair(model: LpModel, xs, ys) -> bool:
    if any(v < 0 for v in xs) or any(v < 0 for v in ys):
        return False
    n = model.num_vars
    col_sums = [Fraction(0)] * n
    for con, yv in zip(model.constraints, ys):
        if sum(coef * xs[i] for i, coef in con.terms) > con.rhs:
            return False
        for i, coef in con.terms:
            col_sums[i] += coef * yv
    if any(col_sums[i] < model.objective[i] for i in range(n)):
        return False
    primal = sum(Fraction(cv) * v for cv, v in zip(model.objective, xs))
    dual = sum(Fraction(con.rhs) * yv for con, yv in zip(model.constraints, ys))
    return primal == dual


def _exact_matrix(model: LpModel) -> list[list[Fraction]]:
    m, n = len(model.constraints), model.num_vars
    rows = [[Fraction(0)] * (n + m) for _ in range(m)]
    for r, con in enumerate(model.constraints):
        for i, coef in con.terms:
            rows[r][i] = Fraction(coef)
        rows[r][n + r] = Fraction(1)
    return rows


def _solve_exact(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    size = len(mat)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][-1] for r in range(size)]


def _basis_solve(model: LpModel, basis: list[int]) -> list[Fraction] | None:
    full = _exact_matrix(model)
    bmat = [[row[j] for j in basis] for row in full]
    xb = _solve_exact(bmat, [Fraction(con.rhs) for con in model.constraints])
    if xb is None:
        return None
    x = [Fraction(0)] * (model.num_vars + len(model.constraints))
    for j, v in zip(basis, xb):
        x[j] = v
    return x[:model.num_vars]


def _dual_from_basis(model: LpModel, basis: list[int]) -> list[Fraction] | None:
    # y solves B^T y = c_B
    full = _exact_matrix(model)
    n = model.num_vars
    cost = [Fraction(model.objective[j]) if j < n else Fraction(0) for j in basis]
    bt = [[full[r][j] for r in range(len(full))] for j in basis]
    return _solve_exact(bt, cost)


def integrality_gap(instance: WeightedInstance, config: SearchConfig | None = None):
    """``IP optimum / LP optimum``; a ``Fraction`` when both sides are exact."""
    ip = exact_mwbis(instance, config)
    if not ip.proven_optimal:
        raise RuntimeError("exact solver hit its limit; IP optimum not certified")
    lp = solve_lp(build_lp(instance))
    if lp.status != "optimal":
        raise RuntimeError(f"LP status {lp.status}")
    if lp.exact_objective is not None and isinstance(ip.value, Rational):
        if lp.exact_objective == 0:
            return Fraction(1)
        return Fraction(ip.value) / lp.exact_objective
    return ip.value / lp.objective if lp.objective else 1.0


def gap_upper_bound_formula(k: int) -> Fraction:
    """``k^3 / (2k^3 - 3k^2 + 3k - 1)``, the gap-family ratio; tends to 1/2."""
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    return Fraction(k**3, 2 * k**3 - 3 * k**2 + 3 * k - 1)


def format_lp(model: LpModel, name: str = "mwbis") -> str:
    """CPLEX-style LP text: Maximize / Subject To / Bounds / End sections.

    Variables are named ``x1..xn`` after the 1-based vertex ids.
    """
    def expr(terms):
        parts = []
        for i, coef in terms:
            sign = "-" if coef < 0 else "+"
            parts.append(f"{sign} {abs(coef)} x{i + 1}")
        text = " ".join(parts) or "0 x1"
        return text[2:] if text.startswith("+ ") else text

    lines = [f"\\ {name}", "Maximize", f" obj: {expr(enumerate(model.objective))}", "Subject To"]
    for r, con in enumerate(model.constraints):
        lines.append(f" {con.name or f'r{r + 1}'}: {expr(con.terms)} {con.relation} {con.rhs}")
    lines.append("Bounds")
    lines.extend(f" x{i + 1} >= 0" for i in range(model.num_vars))
    lines.append("End")
    return "\n".join(lines) + "\n"
