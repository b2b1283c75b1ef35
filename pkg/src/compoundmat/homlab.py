"""Checks of the group-theoretic properties of the compound map ``a -> m_p(a)``.

Every check returns a :class:`PropertyReport`.  A report with status
``CounterexampleFound`` carries a witness that :func:`replay` can feed back
through the same predicate.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .compounds import alternating_diagonal, compound, reversal_matrix
from .errors import DegenerateInputError, DimensionError, MembershipError, SingularError
from .exact_core import RMatrix, det_bareiss, format_rational
from .laplace import det_laplace_alt_sign, det_laplace_general
from .sampling import random_matrix


class Status(str, enum.Enum):
    VERIFIED = "Verified"
    COUNTEREXAMPLE = "CounterexampleFound"
    DISCREPANCY = "DiscrepancyWithPaper"


@dataclass
class PropertyReport:
    property: str
    instances_tested: int
    status: Status
    witness: dict[str, Any] | None = None
    paper_claim: str = ""
    computed_claim: str = ""

    def __post_init__(self) -> None:
        if self.status is Status.COUNTEREXAMPLE and not self.witness:
            raise ValueError(f"{self.property}: a counterexample needs a witness")

    def to_dict(self) -> dict[str, Any]:
        return {
            "property": self.property,
            "instances_tested": self.instances_tested,
            "status": self.status.value,
            "witness": _encode(self.witness) if self.witness is not None else None,
            "paper_claim": self.paper_claim,
            "computed_claim": self.computed_claim,
        }

    def to_text(self) -> str:
        line = (
            f"{self.status.value:<20} {self.property}  instances={self.instances_tested}"
            f"\n    claimed:  {self.paper_claim}\n    computed: {self.computed_claim}"
        )
        if self.witness is not None and self.status is not Status.VERIFIED:
            line += "\n    witness:  " + _witness_summary(self.witness)
        return line


def _encode(value):
    if isinstance(value, RMatrix):
        return [[format_rational(x) for x in row] for row in value.to_rows()]
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _witness_summary(witness: dict[str, Any]) -> str:
    parts = []
    for k, v in witness.items():
        if isinstance(v, RMatrix):
            rows = ";".join(",".join(format_rational(x) for x in r) for r in v.to_rows())
            parts.append(f"{k}=[{rows}]")
        elif isinstance(v, Fraction):
            parts.append(f"{k}={format_rational(v)}")
        else:
            parts.append(f"{k}={v}")
    return " ".join(parts)


def aggregate(
    prop: str, reports: list[PropertyReport], paper_claim: str, computed_claim: str
) -> PropertyReport:
    """Fold single-instance reports into one; the first non-verified witness is kept."""
    status = Status.VERIFIED
    witness = None
    for wanted in (Status.COUNTEREXAMPLE, Status.DISCREPANCY):
        hit = next((r for r in reports if r.status is wanted), None)
        if hit is not None:
            status, witness = wanted, hit.witness
            break
    return PropertyReport(
        prop, sum(r.instances_tested for r in reports), status, witness, paper_claim, computed_claim
    )


# ---------------------------------------------------------------------------
# group membership


@dataclass(frozen=True)
class GroupMembership:
    is_invertible: bool
    is_special: bool
    is_orthogonal: bool


def membership(a: RMatrix) -> GroupMembership:
    if not a.is_square:
        raise DimensionError(f"expected a square matrix, got {a.rows}x{a.cols}")
    d = det_bareiss(a)
    return GroupMembership(
        is_invertible=d != 0,
        is_special=d == 1,
        is_orthogonal=a @ a.T == RMatrix.identity(a.rows),
    )


def _square_pair(a: RMatrix, b: RMatrix) -> int:
    if not (a.is_square and b.is_square and a.rows == b.rows):
        raise DimensionError(f"need two square matrices of equal order, got {a.shape} and {b.shape}")
    return a.rows


# ---------------------------------------------------------------------------
# predicates: each returns True when the property holds on the given data


def _multiplicative(a: RMatrix, b: RMatrix, p: int) -> bool:
    return compound(a @ b, p).body == compound(a, p).body @ compound(b, p).body


def compound_det_exponent(n: int, p: int) -> int:
    """Exponent ``C(n-1, p-1)`` with ``det(m_p(a)) == det(a) ** exponent``."""
    return math.comb(n - 1, p - 1)


def claimed_compound_det_exponent(n: int, p: int) -> int:
    """Exponent of ``det(a)`` claimed for ``det(m_p(a))``.

    ``n - 1`` for p = 2 and for p = n - 1, and ``p`` in the general statement.
    """
    if p == 1:
        return 1
    if p == 2 or p == n - 1:
        return n - 1
    return p


def _sylvester_franke(a: RMatrix, p: int) -> bool:
    n = a.rows
    return det_bareiss(compound(a, p).body) == det_bareiss(a) ** compound_det_exponent(n, p)


def _double_compound(a: RMatrix) -> bool:
    n = a.rows
    twice = compound(compound(a, n - 1).body, n - 1).body
    return twice == det_bareiss(a) ** (n - 2) * a


def _preserves_groups(a: RMatrix, p: int) -> bool:
    src, img = membership(a), membership(compound(a, p).body)
    return (
        (not src.is_invertible or img.is_invertible)
        and (not src.is_special or img.is_special)
        and (not src.is_orthogonal or img.is_orthogonal)
    )


def reversal_conjugate(a: RMatrix) -> RMatrix:
    """``D J a J D`` with ``D = Diag(1, -1, 1, ...)`` and ``J`` the reversal matrix."""
    d = alternating_diagonal(a.rows)
    j = reversal_matrix(a.rows)
    return d @ j @ a @ j @ d


def _so4_involution(a: RMatrix) -> bool:
    m3 = compound(a, 3).body
    return compound(m3, 3).body == a and m3 == reversal_conjugate(a)


def _collision(a: RMatrix, b: RMatrix, p: int) -> bool:
    return a != b and compound(a, p).body == compound(b, p).body


# ---------------------------------------------------------------------------
# checks


def check_multiplicativity(a: RMatrix, b: RMatrix, p: int) -> PropertyReport:
    n = _square_pair(a, b)
    if not 1 <= p <= n:
        raise DimensionError(f"p={p} outside 1..{n}")
    ok = _multiplicative(a, b, p)
    return PropertyReport(
        "multiplicativity",
        1,
        Status.VERIFIED if ok else Status.COUNTEREXAMPLE,
        None if ok else {"a": a, "b": b, "p": p},
        "m_p(ab) = m_p(a) m_p(b)",
        f"n={n}, p={p}: " + ("equal" if ok else "differ"),
    )


def check_sylvester_franke(a: RMatrix, p: int) -> PropertyReport:
    """Compare ``det(m_p(a))`` with ``det(a) ** C(n-1, p-1)`` and with the claimed exponent."""
    if not a.is_square:
        raise DimensionError(f"expected a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    d = det_bareiss(a)
    dm = det_bareiss(compound(a, p).body)
    exact = compound_det_exponent(n, p)
    claimed = claimed_compound_det_exponent(n, p)
    witness = {
        "a": a,
        "p": p,
        "det_a": d,
        "det_compound": dm,
        "claimed_exponent": claimed,
        "verified_exponent": exact,
    }
    claim = f"det(m_{p}(a)) = det(a)^{claimed}"
    if dm != d**exact:
        return PropertyReport(
            "sylvester-franke", 1, Status.COUNTEREXAMPLE, witness, claim,
            f"det(m_p(a)) = {format_rational(dm)} but det(a)^{exact} = {format_rational(d**exact)}",
        )
    computed = f"det(m_{p}(a)) = det(a)^{exact} (n={n})"
    if claimed != exact:
        holds = "holds" if dm == d**claimed else "fails"
        return PropertyReport(
            "sylvester-franke", 1, Status.DISCREPANCY, witness, claim,
            f"{computed}; the claimed exponent {claimed} {holds} on this instance",
        )
    return PropertyReport("sylvester-franke", 1, Status.VERIFIED, None, claim, computed)


def check_double_compound(a: RMatrix) -> PropertyReport:
    """``m_{n-1}(m_{n-1}(a)) == det(a)**(n-2) * a`` for invertible ``a``."""
    if not a.is_square or a.rows < 2:
        raise DimensionError(f"expected a square matrix of order >= 2, got {a.rows}x{a.cols}")
    if det_bareiss(a) == 0:
        raise SingularError("the double-compound identity is checked on invertible matrices only")
    n = a.rows
    ok = _double_compound(a)
    return PropertyReport(
        "double-compound",
        1,
        Status.VERIFIED if ok else Status.COUNTEREXAMPLE,
        None if ok else {"a": a},
        f"m_{n-1}(m_{n-1}(a)) = det(a)^{n-2} a (derivation); det(a)^{n-1} a (summary statement)",
        f"n={n}: det(a)^{n-2} a " + ("confirmed" if ok else "violated"),
    )


def check_group_preservation(a: RMatrix, p: int) -> PropertyReport:
    if not a.is_square:
        raise DimensionError(f"expected a square matrix, got {a.rows}x{a.cols}")
    src, img = membership(a), membership(compound(a, p).body)
    ok = _preserves_groups(a, p)
    return PropertyReport(
        "group-preservation",
        1,
        Status.VERIFIED if ok else Status.COUNTEREXAMPLE,
        None if ok else {"a": a, "p": p},
        "a in SL => m_p(a) in SL; a in SO => m_p(a) in SO",
        f"source {src}, image {img}",
    )


def check_so4_involution(a: RMatrix) -> PropertyReport:
    if a.shape != (4, 4):
        raise MembershipError(f"expected a 4x4 matrix, got {a.rows}x{a.cols}")
    mem = membership(a)
    if not (mem.is_orthogonal and mem.is_special):
        raise MembershipError("input is not in SO(4)")
    ok = _so4_involution(a)
    return PropertyReport(
        "so4-involution",
        1,
        Status.VERIFIED if ok else Status.COUNTEREXAMPLE,
        None if ok else {"a": a},
        "m_3(m_3(a)) = a and m_3(a) = D J a J D on SO(4)",
        "both identities hold" if ok else "identity violated",
    )


@dataclass
class PreimageResult:
    """Outcome of :func:`diagonal_preimage`."""

    mu: tuple[Fraction, ...]
    conditions: dict[str, bool] = field(default_factory=dict)
    failed_condition: str | None = None
    square: Fraction | None = None
    exists_over: str | None = None
    matrix: RMatrix | None = None
    verified: bool = False

    @property
    def message(self) -> str:
        if self.failed_condition:
            return f"no preimage: {self.failed_condition} fails"
        if self.matrix is not None:
            return "preimage over Q, m_2(a) = diag(mu) verified" if self.verified else "preimage check failed"
        if self.exists_over == "R":
            return f"preimage exists over R, not over Q (a11^2 = {format_rational(self.square)})"
        return f"preimage exists over C only (a11^2 = {format_rational(self.square)} < 0)"


def _rational_sqrt(t: Fraction) -> Fraction | None:
    if t < 0:
        return None
    rn, rd = math.isqrt(t.numerator), math.isqrt(t.denominator)
    if rn * rn == t.numerator and rd * rd == t.denominator:
        return Fraction(rn, rd)
    return None


def diagonal_preimage(mu) -> PreimageResult:
    """Find a diagonal 4x4 ``a`` with ``m_2(a) == diag(mu)``.

    A preimage exists iff ``mu1*mu6 == mu2*mu5 == mu3*mu4``.  It is then
    ``diag(x, mu1/x, mu2/x, mu3/x)`` with ``x**2 == mu1*mu2/mu4``; ``x`` is
    taken as the positive root (``-x`` gives the other preimage).
    """
    mu = tuple(Fraction(m) for m in mu)
    if len(mu) != 6:
        raise DimensionError(f"need six diagonal entries, got {len(mu)}")
    if any(m == 0 for m in mu):
        raise DegenerateInputError("all mu_i must be nonzero")
    m1, m2, m3, m4, m5, m6 = mu
    res = PreimageResult(mu)
    res.conditions = {
        "mu1*mu6 = mu2*mu5": m1 * m6 == m2 * m5,
        "mu2*mu5 = mu3*mu4": m2 * m5 == m3 * m4,
    }
    for name, ok in res.conditions.items():
        if not ok:
            lhs, rhs = name.split(" = ")
            values = {"mu1*mu6": m1 * m6, "mu2*mu5": m2 * m5, "mu3*mu4": m3 * m4}
            res.failed_condition = (
                f"{name} ({format_rational(values[lhs])} != {format_rational(values[rhs])})"
            )
            return res
    t = m1 * m2 / m4
    # equivalent forms of the same square once the product conditions hold
    assert t == m1 * m3 / m5 == m2 * m3 / m6
    res.square = t
    root = _rational_sqrt(t)
    if root is None:
        res.exists_over = "R" if t > 0 else "C"
        return res
    res.exists_over = "Q"
    res.matrix = RMatrix.diag([root, m1 / root, m2 / root, m3 / root])
    res.verified = compound(res.matrix, 2).body == RMatrix.diag(mu)
    return res


def _collision_candidates(a: RMatrix, p: int, n: int):
    if p % 2 == 0:
        yield -a
    if p == n and n >= 2:
        yield a @ RMatrix.diag([2, Fraction(1, 2)] + [1] * (n - 2))


def probe_injectivity(p: int, n: int, trials: int = 20, seed: int = 0) -> PropertyReport:
    """Search for ``a != b`` with ``m_p(a) == m_p(b)``.

    Tries the structural candidates first (``I`` against ``-I`` for even
    ``p``; a determinant-preserving rescaling when ``p == n``), then the same
    candidates on random invertible samples.
    """
    if not 1 <= p <= n:
        raise DimensionError(f"p={p} outside 1..{n}")
    prop = f"injectivity[n={n},p={p}]"
    claim = f"a -> m_{p}(a) is injective on GL({n})"
    rng = random.Random(seed)
    samples = [RMatrix.identity(n)]
    while len(samples) < trials + 1:
        a = random_matrix(rng, n)
        if det_bareiss(a) != 0:
            samples.append(a)
    tested = 0
    for a in samples:
        for b in _collision_candidates(a, p, n):
            tested += 1
            if _collision(a, b, p):
                image = compound(a, p).body
                return PropertyReport(
                    prop, tested, Status.COUNTEREXAMPLE,
                    {"a": a, "b": b, "p": p, "image": image},
                    claim, f"m_{p}(a) = m_{p}(b) with a != b",
                )
    return PropertyReport(
        prop, len(samples), Status.VERIFIED, None, claim,
        f"no collision among {len(samples)} samples (verified up to sampling)",
    )


# ---------------------------------------------------------------------------
# replay


def replay(report: PropertyReport) -> bool:
    """Re-run a report's witness through its predicate.

    Returns True when the recorded counterexample (or discrepancy) is
    reproduced.
    """
    w = report.witness
    if w is None:
        raise ValueError("report has no witness to replay")
    name = report.property.split("[")[0]
    if name == "multiplicativity":
        return not _multiplicative(w["a"], w["b"], w["p"])
    if name == "sylvester-franke":
        if report.status is Status.DISCREPANCY:
            a, p = w["a"], w["p"]
            return _sylvester_franke(a, p) and compound_det_exponent(a.rows, p) != w["claimed_exponent"]
        return not _sylvester_franke(w["a"], w["p"])
    if name == "double-compound":
        return not _double_compound(w["a"])
    if name == "double-compound-stated-exponent":
        a = w["a"]
        d = det_bareiss(a)
        return _double_compound(a) and d ** (a.rows - 1) * a != d ** (a.rows - 2) * a
    if name == "group-preservation":
        return not _preserves_groups(w["a"], w["p"])
    if name == "so4-involution":
        return not _so4_involution(w["a"])
    if name == "injectivity":
        return _collision(w["a"], w["b"], w["p"])
    if name == "laplace-stated-sign":
        a, rows = w["a"], tuple(w["rows"])
        d = det_bareiss(a)
        return det_laplace_general(a, rows) == d != 0 and det_laplace_alt_sign(a, len(rows)) == -d
    raise ValueError(f"no replay predicate for {report.property!r}")
