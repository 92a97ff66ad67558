# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

"""
module laurent provides lazy formal power series R[[X]] and Laurent
series R((X)) over a base ring R with a central indeterminate X, and the
transfer of fadelian witnesses between R and R((X)):

    laurent_witness:  from witnesses in R to P = Q·B + C·Q in R[[X]],
                      coefficient by coefficient
    witness_descend:  from x·X^r = X^j·P·a + a·X^k·Q back to a witness
                      x = P_r(0)·a + a·Q_r(0) in R

Base ring elements only need +, -, * and truthiness for zero tests,
e.g. sympy's QQ elements or OrePolys.  Coefficient streams memoize;
a series must be confined to the thread which queries it.
"""

from dataclasses import dataclass
from typing import Any, Callable, Protocol, Sequence

from sympy.polys.domains import QQ

from fadel._internal.ratfun import InvariantError
from fadel._internal.ore import OrePoly, Side
from fadel._internal.diag import SurjectivityOracle, OracleIncomplete
from fadel._internal.witness import fadelian_witness

Log = Callable[[str], None]
DEFAULT_PRECISION = 32


class OracleFailure(Exception):
    """
    OracleFailure is raised if the base ring's oracle couldn't provide
    the witness of a coefficient.
    """

    def __init__(self, n: int, x: Any, a: Any) -> None:
        super().__init__(f'no base witness for coefficient {n}: '
            f'{x} = ({a})*b + c*({a})')
        self.n = n


class MalformedWitness(Exception):
    pass


class NotNormalized(Exception):
    pass


class ZeroSeries(Exception):
    pass


class SeriesWitnessNotVerified(InvariantError):
    pass


class PowerSeries:
    """
    PowerSeries is a lazily evaluated series Σ coeff(n) X^n.  Coefficients
    are computed in ascending order by given function and memoized,
    i.e. querying coefficient n forces the coefficients 0..n.  The
    function may query lower coefficients of its own series.
    """

    def __init__(self, fn: Callable[[int], Any], zero: Any) -> None:
        self._fn = fn
        self._memo = []  # type: list[Any]
        self.zero = zero

    def coeff(self, n: int) -> Any:
        if n < 0:
            return self.zero
        while len(self._memo) <= n:
            self._memo.append(self._fn(len(self._memo)))
        return self._memo[n]

    def __getitem__(self, n: int) -> Any:
        return self.coeff(n)

    @property
    def forced(self) -> int:
        """forced is the number of computed coefficients."""
        return len(self._memo)

    def truncate(self, N: int) -> list[Any]:
        return [self.coeff(n) for n in range(N)]


def from_list(cc: Sequence[Any], zero: Any) -> PowerSeries:
    """from_list returns the eventually vanishing series of given cc."""
    cc = list(cc)
    return PowerSeries(lambda n: cc[n] if n < len(cc) else zero, zero)


def from_function(fn: Callable[[int], Any], zero: Any) -> PowerSeries:
    return PowerSeries(fn, zero)


def ps_add(P: PowerSeries, Q: PowerSeries) -> PowerSeries:
    return PowerSeries(lambda n: P.coeff(n) + Q.coeff(n), P.zero)


def ps_neg(P: PowerSeries) -> PowerSeries:
    return PowerSeries(lambda n: -P.coeff(n), P.zero)


def ps_sub(P: PowerSeries, Q: PowerSeries) -> PowerSeries:
    return PowerSeries(lambda n: P.coeff(n) - Q.coeff(n), P.zero)


def ps_mul(P: PowerSeries, Q: PowerSeries) -> PowerSeries:
    """
    ps_mul returns the Cauchy product whose n-th coefficient is
    Σ_{i=0}^n p_i q_{n-i}; the factors' order is kept.
    """
    def coeff(n: int) -> Any:
        v = P.zero
        for i in range(n + 1):
            v = v + P.coeff(i) * Q.coeff(n - i)
        return v
    return PowerSeries(coeff, P.zero)


def ps_shift(P: PowerSeries, k: int) -> PowerSeries:
    """ps_shift returns X^k·P for k ≥ 0."""
    if k < 0:
        raise ValueError('negative shift of a power series')
    return PowerSeries(lambda n: P.coeff(n - k), P.zero)


def ps_tail(P: PowerSeries) -> PowerSeries:
    """ps_tail returns (P - P(0))/X."""
    return PowerSeries(lambda n: P.coeff(n + 1), P.zero)


@dataclass
class LaurentSeries:
    """
    LaurentSeries is X^valuation·body.  A nonzero series claims body(0)
    != 0 which is checked at construction; the zero series is created
    by zero_series.
    """
    valuation: int
    body: PowerSeries
    nonzero: bool = True

    def __post_init__(self) -> None:
        if self.nonzero and not self.body.coeff(0):
            raise NotNormalized('Laurent series body with vanishing '
                'constant coefficient')

    @classmethod
    def zero_series(cls, zero: Any) -> 'LaurentSeries':
        return cls(0, from_list([], zero), nonzero=False)

    @classmethod
    def normalized(cls, j: int, P: PowerSeries, precision: int
    ) -> 'LaurentSeries':
        """
        normalized returns X^j·P as Laurent series with a nonzero body
        constant by stripping leading zero coefficients.  It fails with
        ZeroSeries if the first precision coefficients vanish.
        """
        for s in range(precision):
            if P.coeff(s):
                body = P
                for _ in range(s):
                    body = ps_tail(body)
                return cls(j + s, body)
        raise ZeroSeries(f'first {precision} coefficients vanish')

    def coeff(self, n: int) -> Any:
        """coeff returns the coefficient of X^n."""
        if not self.nonzero:
            return self.body.zero
        return self.body.coeff(n - self.valuation)


def laurent_mul(u: LaurentSeries, v: LaurentSeries) -> LaurentSeries:
    """laurent_mul returns X^(j+k)·(P·Q) for u = X^j·P, v = X^k·Q."""
    if not u.nonzero or not v.nonzero:
        return LaurentSeries.zero_series(u.body.zero)
    return LaurentSeries(u.valuation + v.valuation, ps_mul(u.body, v.body))


class FadelianOracle(Protocol):
    """
    FadelianOracle provides witnesses x = a·b + c·a in a base ring as
    pair (b, c) or None if it couldn't find any.
    """

    zero: Any

    def witness(self, x: Any, a: Any) -> tuple[Any, Any] | None: ...

    def is_zero(self, x: Any) -> bool: ...


class RationalBase:
    """RationalBase is the field Q: b = a^-1·x, c = 0."""

    def __init__(self) -> None:
        self.zero = QQ.zero

    def witness(self, x: Any, a: Any) -> tuple[Any, Any] | None:
        if not a:
            return None
        return x / a, self.zero

    def is_zero(self, x: Any) -> bool:
        return not x


class OperatorBase:
    """
    OperatorBase is R[δ] whose witnesses are computed by
    fadelian_witness with given surjectivity oracle.
    """

    def __init__(
        self, oracle: SurjectivityOracle, side: Side = Side.RIGHT
    ) -> None:
        self.oracle, self.side = oracle, side
        self.zero = OrePoly.zero()

    def witness(self, x: Any, a: Any) -> tuple[Any, Any] | None:
        try:
            w = fadelian_witness(x, a, self.oracle, self.side)
        except OracleIncomplete:
            return None
        return w.b, w.c

    def is_zero(self, x: Any) -> bool:
        return not x


def laurent_witness(
    P: PowerSeries, Q: PowerSeries, oracle: FadelianOracle,
    N: int | None = DEFAULT_PRECISION, log: Log | None = None
) -> tuple[PowerSeries, PowerSeries]:
    """
    laurent_witness returns lazy series B, C with P = Q·B + C·Q.  The
    n-th coefficients solve

        q_0 b_n + c_n q_0 = p_n - Σ_{i=1}^n (q_i b_{n-i} + c_{n-i} q_i)

    by a witness of the base ring.  If N is given the identity is
    forced and verified for the coefficients 0..N-1.  It fails with
    NotNormalized if q_0 vanishes and with OracleFailure if the base
    oracle doesn't find a witness.
    """
    q0 = Q.coeff(0)
    if oracle.is_zero(q0):
        raise NotNormalized('q_0 must be nonzero')

    def pair(n: int) -> tuple[Any, Any]:
        rhs = P.coeff(n)
        for i in range(1, n + 1):
            b, c = pairs.coeff(n - i)
            rhs = rhs - (Q.coeff(i)*b + c*Q.coeff(i))
        bc = oracle.witness(rhs, q0)
        if bc is None:
            raise OracleFailure(n, rhs, q0)
        if log:
            log(f'coefficient {n}: b = {bc[0]}, c = {bc[1]}')
        return bc

    pairs = PowerSeries(pair, (oracle.zero, oracle.zero))
    B = PowerSeries(lambda n: pairs.coeff(n)[0], oracle.zero)
    C = PowerSeries(lambda n: pairs.coeff(n)[1], oracle.zero)
    if N is not None:
        lhs = ps_add(ps_mul(Q, B), ps_mul(C, Q))
        for n in range(N):
            if not oracle.is_zero(lhs.coeff(n) - P.coeff(n)):
                raise SeriesWitnessNotVerified(
                    f'coefficient {n} of Q*B + C*Q differs from P')
    return B, C


def _laurent(j: int, S: PowerSeries, precision: int) -> LaurentSeries:
    try:
        return LaurentSeries.normalized(j, S, precision)
    except ZeroSeries:
        return LaurentSeries.zero_series(S.zero)


def laurent_series_witness(
    p: LaurentSeries, q: LaurentSeries, oracle: FadelianOracle,
    N: int = DEFAULT_PRECISION, log: Log | None = None
) -> tuple[LaurentSeries, LaurentSeries]:
    """
    laurent_series_witness returns Laurent series B', C' with
    p = q·B' + C'·q for p = X^j·P and nonzero q = X^k·Q, namely
    B' = X^(j-k)·B and C' = X^(j-k)·C for P = Q·B + C·Q.  Vanishing
    results are recognized up to precision N.
    """
    if not q.nonzero:
        raise ZeroSeries('witness for the zero series')
    if not p.nonzero:
        z = LaurentSeries.zero_series(oracle.zero)
        return z, z
    B, C = laurent_witness(p.body, q.body, oracle, N, log)
    shift = p.valuation - q.valuation
    return _laurent(shift, B, N), _laurent(shift, C, N)


def witness_descend(
    x: Any, a: Any, r: int, j: int, P: PowerSeries, k: int, Q: PowerSeries,
    log: Log | None = None
) -> tuple[Any, Any, int]:
    """
    witness_descend turns a series identity x·X^r = X^j·P·a + a·X^k·Q
    into a base ring identity x = left·a + a·right and returns (left,
    right, steps).  While r > 0 the constant coefficients must cancel,
    S_P(0)·a + a·S_Q(0) = 0 for S_P = X^j·P, S_Q = X^k·Q; then both
    series are divided by X.  At r = 0 evaluation at 0 gives the
    witness.  It fails with MalformedWitness if a cancellation or the
    final identity fails.
    """
    if min(r, j, k) < 0:
        raise ValueError('exponents must be nonnegative')
    SP, SQ = ps_shift(P, j), ps_shift(Q, k)
    steps = 0
    while r > 0:
        v = SP.coeff(0)*a + a*SQ.coeff(0)
        if v:
            raise MalformedWitness(
                f'constant coefficients don\'t cancel at step {steps}')
        SP, SQ, r, steps = ps_tail(SP), ps_tail(SQ), r - 1, steps + 1
        if log:
            log(f'factored X, {r} to go')
    left, right = SP.coeff(0), SQ.coeff(0)
    if left*a + a*right != x:
        raise MalformedWitness('evaluation at 0 fails x = P(0)*a + a*Q(0)')
    return left, right, steps
