"""Local solubility of H_eta: the mod-p obstruction, a p-adic search, and a box census."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import is_prime, legendre_symbol, primes_up_to, valuation
from .curves import Matrix, h_discriminant, integral_scaling

SOLUBLE = "SolubleAtP"
INSOLUBLE = "InsolubleAtP"
UNKNOWN = "UnknownAtP"
OBSTRUCTED = "ObstructionInsoluble"
CANDIDATE = "Candidate"
RULED_OUT = "LocallyRuledOut"


def _int_entries(eta) -> tuple[int, int, int, int]:
    if isinstance(eta, Matrix):
        entries = eta.entries
    else:
        entries = tuple(Fraction(e) for e in eta)
    if any(e.denominator != 1 for e in entries):
        raise ValueError(f"expected an integral matrix, got {eta}")
    return tuple(int(e) for e in entries)


def obstruction_holds(eta, p: int) -> bool:
    """p | det and both a^2+b^2 and a^2+c^2 are non-residues mod p.

    When true, H_eta has no Q_p-points.
    """
    a, b, c, d = _int_entries(eta)
    det = a * d - b * c
    if det == 0:
        raise ValueError("singular matrix")
    if p == 2 or det % p:
        return False
    return legendre_symbol(a * a + b * b, p) == -1 and legendre_symbol(a * a + c * c, p) == -1


def count_obstruction_free_modp(p: int) -> tuple[int, int]:
    """(#nonzero (a,b,c,d) mod p with ad = bc failing the obstruction, #all such)."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")
    chi = [0] + [legendre_symbol(n, p) for n in range(1, p)]
    total = failing = 0
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p or (a, b, c, d) == (0, 0, 0, 0):
            continue
        total += 1
        if not (chi[(a * a + b * b) % p] == -1 and chi[(a * a + c * c) % p] == -1):
            failing += 1
    assert total == (p + 1) ** 2 * (p - 1)
    # failing / total <= 3/4 + 1/p, in integers
    assert 4 * p * failing <= (3 * p + 4) * total
    return failing, total


def _poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_deriv(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


def _ipmul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def _chart_polys(a, b, c, d):
    """Integer coefficient lists (low first) of F(x, 1) and F(1, z)."""

    def norm(p, q):
        l1 = [a * p[i] + b * q[i] for i in range(3)]
        l2 = [c * p[i] + d * q[i] for i in range(3)]
        sq = [u + v for u, v in zip(_ipmul(l1, l1), _ipmul(l2, l2))]
        return sq

    fx = norm([1, 0, -1], [0, 2, 0])  # z = 1: (1 - x^2, 2x)
    fz = norm([-1, 0, 1], [0, 2, 0])  # x = 1: (z^2 - 1, 2z)
    return fx, fz


def _is_square_unit(u: int, p: int) -> bool:
    if p == 2:
        return u % 8 == 1
    return legendre_symbol(u, p) == 1


def _search(poly, p: int, roots: list[tuple[int, int]], k_max: int) -> str:
    """Decide whether poly(x) is a square in Q_p for some x in one of the given classes."""
    dpoly = _poly_deriv(poly)
    need = 3 if p == 2 else 1
    stack = list(roots)
    unknown = False
    while stack:
        r, k = stack.pop()
        val = _poly_eval(poly, r)
        e = valuation(val, p) if val else None
        if e is not None and e < k:
            if e % 2:
                continue
            if k - e >= need:
                if _is_square_unit((val // p**e) % p**need, p):
                    return SOLUBLE
                continue
        else:
            # Hensel: a genuine root gives a point with y = 0
            dv = _poly_eval(dpoly, r)
            if val == 0 or (dv and e > 2 * valuation(dv, p)):
                return SOLUBLE
        if k >= k_max:
            unknown = True
            continue
        pk = p**k
        stack.extend((r + j * pk, k + 1) for j in range(p))
    return UNKNOWN if unknown else INSOLUBLE


def default_precision(eta, p: int) -> int:
    _, eta_i = integral_scaling(eta if isinstance(eta, Matrix) else Matrix(*eta))
    disc = int(h_discriminant(eta_i))
    return valuation(16 * disc, p) + 3 if disc else 8


def _square_in_qp(n: int, p: int) -> bool:
    e = valuation(n, p)
    return e % 2 == 0 and _is_square_unit(n // p**e, p)


def soluble_at_p(eta, p: int, k_max: int | None = None) -> str:
    """SolubleAtP / InsolubleAtP / UnknownAtP for H_eta over Q_p.

    Points are searched as primitive (x, z) in the two charts z = 1 and
    x = 1, z in pZ_p; a class x = r mod p^k is settled once the valuation of
    the norm form is constant on it and its unit part has a constant square
    class.  UnknownAtP means the search hit k_max without settling.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    eta = eta if isinstance(eta, Matrix) else Matrix(*eta)
    _, eta_i = integral_scaling(eta)
    a, b, c, d = _int_entries(eta_i)
    if h_discriminant(eta_i) == 0:
        # y^2 = (a^2+b^2)(x^2+z^2)^2: need a^2+b^2 a square or x^2+z^2 = 0 solvable
        if _square_in_qp(a * a + b * b, p) or p % 4 == 1:
            return SOLUBLE
        return INSOLUBLE
    if k_max is None:
        k_max = default_precision(eta_i, p)
    fx, fz = _chart_polys(a, b, c, d)
    first = _search(fx, p, [(r, 1) for r in range(p)], k_max)
    if first == SOLUBLE:
        return SOLUBLE
    second = _search(fz, p, [(0, 1)], k_max)
    if second == SOLUBLE:
        return SOLUBLE
    return UNKNOWN if UNKNOWN in (first, second) else INSOLUBLE


def soluble_real(eta) -> bool:
    """Always true: the norm form is a positive sum of two squares away from its zeros."""
    return True


@dataclass
class CensusRecord:
    eta: tuple[int, int, int, int]
    det: int
    verdicts: list[tuple[int, str]]
    overall: str

    def as_json(self) -> dict:
        return {
            "eta": list(self.eta),
            "det": self.det,
            "verdicts": [[p, v] for p, v in self.verdicts],
            "overall": self.overall,
        }


@dataclass
class CensusSummary:
    X: int
    prime_bound: int
    mode: str
    seed: int | None
    drawn: int = 0
    singular_det: int = 0
    invertible: int = 0
    candidates: int = 0
    ruled_out_by_obstruction: int = 0
    unknown_verdicts: int = 0
    obstruction_counterexamples: list = field(default_factory=list)

    @property
    def survivor_fraction(self) -> float:
        return self.candidates / self.invertible if self.invertible else 0.0

    def as_json(self) -> dict:
        out = {k: v for k, v in self.__dict__.items() if k != "obstruction_counterexamples"}
        out["obstruction_counterexamples"] = [list(e) for e in self.obstruction_counterexamples]
        out["survivor_fraction"] = self.survivor_fraction
        out["survivor_fraction_of_box"] = self.candidates / self.drawn if self.drawn else 0.0
        out["summary"] = True
        return out


def census_record(eta: tuple[int, int, int, int], primes: list[int], k_max=None,
                  cross_check: bool = True, counterexamples: list | None = None) -> CensusRecord:
    a, b, c, d = eta
    det = a * d - b * c
    m = Matrix(a, b, c, d)
    disc = h_discriminant(m)
    if disc:
        checked = [p for p in primes if p == 2 or disc % p == 0]
    else:
        checked = list(primes)
    verdicts = []
    for p in checked:
        if det % p == 0 and obstruction_holds(eta, p):
            verdicts.append((p, OBSTRUCTED))
            if cross_check:
                v = soluble_at_p(m, p, k_max)
                if v != INSOLUBLE and counterexamples is not None:
                    counterexamples.append((eta, p, v))
        else:
            verdicts.append((p, soluble_at_p(m, p, k_max)))
    ruled = any(v in (OBSTRUCTED, INSOLUBLE) for _, v in verdicts)
    return CensusRecord(eta, det, verdicts, RULED_OUT if ruled else CANDIDATE)


def _box_tuples(X: int, sample: int | None, seed: int):
    if sample is None:
        yield from itertools.product(range(-X, X + 1), repeat=4)
        return
    rng = random.Random(seed)
    for _ in range(sample):
        yield tuple(rng.randint(-X, X) for _ in range(4))


def census_box(X: int, prime_bound: int = 50, k_max: int | None = None,
               sample: int | None = None, seed: int = 0, on_record=None,
               cross_check: bool = True) -> CensusSummary:
    """Local-solubility census over integer matrices in [-X, X]^4.

    Survivors are only candidates: primes above prime_bound are never
    examined, so the survivor fraction over-estimates the everywhere
    locally soluble proportion.
    """
    if X <= 0:
        raise ValueError("X must be positive")
    primes = primes_up_to(prime_bound)
    summary = CensusSummary(X, prime_bound, "exhaustive" if sample is None else "sampled",
                            None if sample is None else seed)
    for eta in _box_tuples(X, sample, seed):
        summary.drawn += 1
        a, b, c, d = eta
        if a * d - b * c == 0:
            summary.singular_det += 1
            continue
        summary.invertible += 1
        rec = census_record(eta, primes, k_max, cross_check, summary.obstruction_counterexamples)
        if rec.overall == CANDIDATE:
            summary.candidates += 1
        if any(v == OBSTRUCTED for _, v in rec.verdicts):
            summary.ruled_out_by_obstruction += 1
        summary.unknown_verdicts += sum(v == UNKNOWN for _, v in rec.verdicts)
        if on_record is not None:
            on_record(rec)
    return summary
