"""3-CNF formulas, DIMACS parsing, and the brute-force satisfiability oracle.

Clauses always hold exactly three literal slots; narrower clauses are padded
by literal repetition, which preserves semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ClauseTooWideError,
    OddLengthError,
    ParseError,
    PromiseViolatedError,
    TooManyVariablesError,
)

MAX_BRUTE_FORCE_VARS = 26

Clause = tuple[int, int, int]


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        for clause in self.clauses:
            if len(clause) != 3:
                raise ClauseTooWideError(f"clause {clause} does not have 3 slots")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ParseError(f"literal {lit} outside 1..{self.num_vars}")

    def variables(self) -> tuple[int, ...]:
        return tuple(sorted({abs(l) for c in self.clauses for l in c}))


def _pad(lits: Sequence[int]) -> Clause:
    if len(lits) > 3:
        raise ClauseTooWideError(f"clause with {len(lits)} literals (max 3)")
    if not lits:
        raise ParseError("empty clause")
    while len(lits) < 3:
        lits = list(lits) + [lits[-1]]
    return (lits[0], lits[1], lits[2])


def make_cnf(num_vars: int, clauses: Iterable[Sequence[int]]) -> CnfFormula:
    return CnfFormula(num_vars, tuple(_pad(list(c)) for c in clauses))


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = None
    num_clauses = None
    clauses: list[Clause] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("problem line must read 'p cnf <vars> <clauses>'", line=lineno)
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer counts in problem line", line=lineno)
            continue
        if num_vars is None:
            raise ParseError("clause before problem line", line=lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", line=lineno)
            if lit == 0:
                clauses.append(_pad(current))
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise ParseError("missing problem line")
    if current:
        clauses.append(_pad(current))  # tolerate a missing trailing 0
    if num_clauses is not None and len(clauses) != num_clauses:
        raise ParseError(f"problem line promised {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def to_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    lines += [" ".join(str(l) for l in c) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SatResult:
    satisfiable: bool
    witness: tuple[bool, ...] | None

    def __bool__(self) -> bool:
        return self.satisfiable


def brute_force_sat(f: CnfFormula) -> SatResult:
    """Exhaustive check over all assignments; witness var i is index i-1."""
    if f.num_vars > MAX_BRUTE_FORCE_VARS:
        raise TooManyVariablesError(
            f"{f.num_vars} variables exceeds brute-force cap {MAX_BRUTE_FORCE_VARS}"
        )
    for bits in range(1 << f.num_vars):
        ok = True
        for clause in f.clauses:
            sat = False
            for lit in clause:
                val = (bits >> (abs(lit) - 1)) & 1
                if (lit > 0) == bool(val):
                    sat = True
                    break
            if not sat:
                ok = False
                break
        if ok:
            witness = tuple(bool((bits >> i) & 1) for i in range(f.num_vars))
            return SatResult(True, witness)
    return SatResult(False, None)


@dataclass(frozen=True)
class SatParityInstance:
    formulas: tuple[CnfFormula, ...]
    split_index: int
    sat_flags: tuple[bool, ...]

    @property
    def parity_odd(self) -> bool:
        return self.split_index % 2 == 1


def make_parity_instance(formulas: Sequence[CnfFormula]) -> SatParityInstance:
    """Compute the split index and machine-check the monotone promise."""
    formulas = tuple(formulas)
    if len(formulas) % 2 != 0:
        raise OddLengthError(f"need an even number of formulas, got {len(formulas)}")
    flags = tuple(bool(brute_force_sat(f)) for f in formulas)
    s = 0
    while s < len(flags) and flags[s]:
        s += 1
    for i in range(s, len(flags)):
        if flags[i]:
            raise PromiseViolatedError(
                f"formula {i} is satisfiable after unsatisfiable formula {s}"
            )
    return SatParityInstance(formulas, s, flags)


def make_formula(kind: str, seed: int = 0) -> CnfFormula:
    """Tiny formula factory; the seed only perturbs variable naming."""
    var = 1 + (seed % 2)
    if kind == "trivially-sat":
        return CnfFormula(var, ((var, var, var),))
    if kind == "trivially-unsat":
        return CnfFormula(var, ((var, var, var), (-var, -var, -var)))
    raise ValueError(f"unknown formula kind {kind!r}")
