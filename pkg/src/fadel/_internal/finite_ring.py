# -*- coding: utf-8 -
#
# Copyright (c) 2022 Stephan Lukits. All rights reserved.
# Use of this source code is governed by a MIT-style
# license that can be found in the LICENSE file.

"""
module finite_ring provides explicit finite rings given by addition and
multiplication tables over the indices 0..m-1 and decides by exhaustive
search whether they are weakly fadelian, fadelian, integral, simple or
satisfy the Ore condition.  check_implications evaluates the
implications between these properties on a given ring, e.g. "weakly
fadelian implies simple", and reports each of them as pass, vacuous or
fail.

Note that a finite integral ring is a field, hence no finite ring can be
weakly fadelian without being fadelian; the lab reports, it can't find
such a counterexample.
"""

from dataclasses import dataclass, field
from functools import partial
from itertools import product
from multiprocessing import Pool
from typing import Callable, Iterator, Sequence

from fadel._internal.ore import Side

Log = Callable[[str], None]
Table = tuple[tuple[int, ...], ...]

DEFAULT_MAX_SIZE = 64
TABLE_HEADER = 'ring'

PASS, VACUOUS, FAIL = 'pass', 'vacuous', 'fail'


class AxiomViolation(Exception):
    pass


class NotADomain(Exception):
    pass


class TableFormatError(Exception):
    pass


class ImplicationViolated(Exception):
    """
    ImplicationViolated is raised by check_implications if an
    implication fails on a ring.  It carries the complete report.
    """

    def __init__(self, report: 'ImplicationReport') -> None:
        names = ', '.join(i.name for i in report.violations)
        super().__init__(f'{report.ring}: violated: {names}')
        self.report = report


@dataclass(frozen=True)
class FiniteRing:
    """
    FiniteRing is a ring on the elements 0..size-1:

    - add[x][y] index of x + y
    - mul[x][y] index of x·y
    - zero, one the indices of the neutral elements

    The ring axioms are checked exhaustively at construction.
    """
    add: Table
    mul: Table
    zero: int
    one: int
    name: str = 'R'

    def __post_init__(self) -> None:
        check_axioms(self)

    @property
    def size(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def nonzero(self) -> list[int]:
        return [x for x in self.elements if x != self.zero]

    def neg(self, x: int) -> int:
        return next(y for y in self.elements if self.add[x][y] == self.zero)


def _table(rows: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(r) for r in rows)


def check_axioms(R: FiniteRing) -> None:
    """
    check_axioms raises AxiomViolation naming the first ring axiom
    which doesn't hold for given tables.
    """
    m = len(R.add)
    if m < 2 or R.zero == R.one:
        raise AxiomViolation(f'{R.name}: ring must be nontrivial')
    for t in (R.add, R.mul):
        if len(t) != m or any(len(r) != m for r in t):
            raise AxiomViolation(f'{R.name}: tables must be {m}x{m}')
        if any(not 0 <= v < m for r in t for v in r):
            raise AxiomViolation(f'{R.name}: table entry out of range')
    if not (0 <= R.zero < m and 0 <= R.one < m):
        raise AxiomViolation(f'{R.name}: zero or one out of range')
    a, u = R.add, R.mul
    E = range(m)
    for x in E:
        if a[R.zero][x] != x or a[x][R.zero] != x:
            raise AxiomViolation(f'{R.name}: zero is not neutral for {x}')
        if u[R.one][x] != x or u[x][R.one] != x:
            raise AxiomViolation(f'{R.name}: one is not neutral for {x}')
        if all(a[x][y] != R.zero for y in E):
            raise AxiomViolation(f'{R.name}: {x} has no additive inverse')
    for x, y in product(E, E):
        if a[x][y] != a[y][x]:
            raise AxiomViolation(f'{R.name}: addition of {x}, {y} '
                'is not commutative')
    for x, y, z in product(E, E, E):
        if a[a[x][y]][z] != a[x][a[y][z]]:
            raise AxiomViolation(f'{R.name}: addition of {x}, {y}, {z} '
                'is not associative')
        if u[u[x][y]][z] != u[x][u[y][z]]:
            raise AxiomViolation(f'{R.name}: multiplication of {x}, {y}, '
                f'{z} is not associative')
        if u[x][a[y][z]] != a[u[x][y]][u[x][z]]:
            raise AxiomViolation(f'{R.name}: {x}*({y}+{z}) '
                'doesn\'t distribute')
        if u[a[y][z]][x] != a[u[y][x]][u[z][x]]:
            raise AxiomViolation(f'{R.name}: ({y}+{z})*{x} '
                'doesn\'t distribute')


def make_zmod(n: int) -> FiniteRing:
    if n < 2:
        raise ValueError(f'Z/{n}: n must be at least 2')
    E = range(n)
    return FiniteRing(
        _table([[(x + y) % n for y in E] for x in E]),
        _table([[(x * y) % n for y in E] for x in E]),
        0, 1, f'Z/{n}')


def _m2f2(e: int) -> tuple[int, int, int, int]:
    return (e >> 3) & 1, (e >> 2) & 1, (e >> 1) & 1, e & 1


def _m2f2_index(a: int, b: int, c: int, d: int) -> int:
    return (a % 2) << 3 | (b % 2) << 2 | (c % 2) << 1 | d % 2


def make_matrix_ring_2x2_f2() -> FiniteRing:
    """
    make_matrix_ring_2x2_f2 returns the 2×2 matrices over F₂ where the
    matrix [[a, b], [c, d]] has the index with bits abcd.
    """
    E = range(16)

    def add(x: int, y: int) -> int:
        return x ^ y

    def mul(x: int, y: int) -> int:
        a, b, c, d = _m2f2(x)
        e, f, g, h = _m2f2(y)
        return _m2f2_index(a*e + b*g, a*f + b*h, c*e + d*g, c*f + d*h)

    return FiniteRing(
        _table([[add(x, y) for y in E] for x in E]),
        _table([[mul(x, y) for y in E] for x in E]),
        0, _m2f2_index(1, 0, 0, 1), 'M2(F2)')


def make_field_f4() -> FiniteRing:
    """
    make_field_f4 returns F₂[w]/(w² + w + 1) with c0 + c1·w at index
    c0 + 2·c1.
    """
    E = range(4)

    def mul(x: int, y: int) -> int:
        a0, a1, b0, b1 = x & 1, x >> 1, y & 1, y >> 1
        c0, c1, c2 = a0*b0, a0*b1 + a1*b0, a1*b1
        # w² = w + 1
        return (c0 + c2) % 2 | ((c1 + c2) % 2) << 1

    return FiniteRing(
        _table([[x ^ y for y in E] for x in E]),
        _table([[mul(x, y) for y in E] for x in E]),
        0, 1, 'F4')


def make_product(R: FiniteRing, S: FiniteRing) -> FiniteRing:
    """
    make_product returns R × S with (r, s) at index r·|S| + s.
    """
    m = S.size
    E = range(R.size * m)

    def op(tR: Table, tS: Table, x: int, y: int) -> int:
        return tR[x // m][y // m] * m + tS[x % m][y % m]

    return FiniteRing(
        _table([[op(R.add, S.add, x, y) for y in E] for x in E]),
        _table([[op(R.mul, S.mul, x, y) for y in E] for x in E]),
        R.zero * m + S.zero, R.one * m + S.one, f'{R.name}x{S.name}')


def load_table(text: str, name: str = 'table') -> FiniteRing:
    """
    load_table reads a ring from the whitespace separated format

        ring <m>
        <m×m addition table>
        <m×m multiplication table>
        <zero> <one>

    It fails with TableFormatError for malformed text and with
    AxiomViolation if the tables don't define a ring.
    """
    tokens = text.split()
    if len(tokens) < 2 or tokens[0] != TABLE_HEADER:
        raise TableFormatError(f'{name}: expected header "ring <m>"')
    try:
        vv = [int(t) for t in tokens[1:]]
    except ValueError as e:
        raise TableFormatError(f'{name}: {e}') from e
    m = vv[0]
    if m < 2:
        raise TableFormatError(f'{name}: ring size must be at least 2')
    if len(vv) != 1 + 2*m*m + 2:
        raise TableFormatError(f'{name}: expected {2*m*m + 2} entries '
            f'after the header, got {len(vv) - 1}')
    add, mul = vv[1:1 + m*m], vv[1 + m*m:1 + 2*m*m]
    return FiniteRing(
        _table([add[i*m:(i + 1)*m] for i in range(m)]),
        _table([mul[i*m:(i + 1)*m] for i in range(m)]),
        vv[-2], vv[-1], name)


def is_isomorphic(R: FiniteRing, S: FiniteRing, mapping: Sequence[int]
) -> bool:
    """
    is_isomorphic reports if mapping, i.e. x ↦ mapping[x], is a ring
    isomorphism from R onto S.
    """
    if R.size != S.size or sorted(mapping) != list(S.elements):
        return False
    f = mapping
    if f[R.one] != S.one:
        return False
    return all(f[R.add[x][y]] == S.add[f[x]][f[y]] and
        f[R.mul[x][y]] == S.mul[f[x]][f[y]]
        for x, y in product(R.elements, R.elements))


def _right_multiples(R: FiniteRing, a: int) -> set[int]:
    return {R.mul[a][b] for b in R.elements}


def _left_multiples(R: FiniteRing, a: int) -> set[int]:
    return {R.mul[c][a] for c in R.elements}


def _sums(R: FiniteRing, a: int) -> set[int]:
    """_sums returns aR + Ra."""
    return {R.add[u][v]
        for u in _right_multiples(R, a) for v in _left_multiples(R, a)}


def _scan(
    R: FiniteRing, pred: Callable[[FiniteRing, int], bool], workers: int
) -> bool:
    """_scan reports if pred holds for every nonzero element."""
    if workers > 1:
        with Pool(workers) as pool:
            return all(pool.map(partial(pred, R), R.nonzero))
    return all(pred(R, a) for a in R.nonzero)


def _one_in_sums(R: FiniteRing, a: int) -> bool:
    return R.one in _sums(R, a)


def _all_in_sums(R: FiniteRing, a: int) -> bool:
    return len(_sums(R, a)) == R.size


def ideal(R: FiniteRing, a: int) -> frozenset[int]:
    """
    ideal returns the two-sided ideal generated by a, i.e. the
    additive closure of all r·a·s.
    """
    gens = {R.mul[R.mul[r][a]][s] for r in R.elements for s in R.elements}
    closure, todo = {R.zero}, [R.zero]
    while todo:
        x = todo.pop()
        for g in gens:
            y = R.add[x][g]
            if y not in closure:
                closure.add(y)
                todo.append(y)
    return frozenset(closure)


def _generates_everything(R: FiniteRing, a: int) -> bool:
    return R.one in ideal(R, a)


def is_commutative(R: FiniteRing) -> bool:
    return all(R.mul[x][y] == R.mul[y][x]
        for x, y in product(R.elements, R.elements))


def is_division_ring(R: FiniteRing) -> bool:
    return all(any(R.mul[a][b] == R.one and R.mul[b][a] == R.one
        for b in R.elements) for a in R.nonzero)


def is_integral(R: FiniteRing) -> bool:
    """is_integral reports if R has no zero divisors."""
    return all(R.mul[a][b] != R.zero
        for a, b in product(R.nonzero, R.nonzero))


def is_simple(R: FiniteRing, workers: int = 0) -> bool:
    """
    is_simple reports if every nonzero element generates R as two-sided
    ideal.
    """
    return _scan(R, _generates_everything, workers)


def is_weakly_fadelian(R: FiniteRing, workers: int = 0) -> bool:
    """
    is_weakly_fadelian reports if 1 = a·b + c·a is solvable for every
    nonzero a.
    """
    return _scan(R, _one_in_sums, workers)


def is_fadelian(R: FiniteRing, workers: int = 0) -> bool:
    """
    is_fadelian reports if x = a·b + c·a is solvable for every x and
    every nonzero a.
    """
    return _scan(R, _all_in_sums, workers)


def find_witness(R: FiniteRing, x: int, a: int) -> tuple[int, int] | None:
    """find_witness returns some (b, c) with x = a·b + c·a or None."""
    left = {}  # type: dict[int, int]
    for c in R.elements:
        left.setdefault(R.mul[c][a], c)
    for b in R.elements:
        v = R.add[x][R.neg(R.mul[a][b])]
        if v in left:
            return b, left[v]
    return None


def is_ore(side: Side, R: FiniteRing) -> bool:
    """
    is_ore reports for an integral ring if any two nonzero right ideals
    aR, xR (for Side.LEFT left ideals Ra, Rx) intersect nontrivially.
    It fails with NotADomain if R has zero divisors.
    """
    if not is_integral(R):
        raise NotADomain(f'{R.name} has zero divisors')
    multiples = (_right_multiples if side is Side.RIGHT
        else _left_multiples)
    ii = {a: multiples(R, a) for a in R.nonzero}
    return all(len(ii[a] & ii[x]) > 1
        for a, x in product(R.nonzero, R.nonzero))


@dataclass(frozen=True)
class Implication:
    name: str
    premise: bool
    conclusion: bool

    @property
    def status(self) -> str:
        if not self.premise:
            return VACUOUS
        return PASS if self.conclusion else FAIL


@dataclass
class ImplicationReport:
    """
    ImplicationReport holds the evaluated predicates of a ring and the
    implications between them.
    """
    ring: str
    size: int
    predicates: dict[str, bool | None] = field(default_factory=dict)
    implications: list[Implication] = field(default_factory=list)

    @property
    def violations(self) -> list[Implication]:
        return [i for i in self.implications if i.status == FAIL]


def _annihilators_square_to_zero(R: FiniteRing) -> bool:
    """xy = yx = 0 implies x² = 0 or y² = 0."""
    sq = [R.mul[x][x] for x in R.elements]
    return all(sq[x] == R.zero or sq[y] == R.zero
        for x, y in product(R.elements, R.elements)
        if R.mul[x][y] == R.zero and R.mul[y][x] == R.zero)


def _no_nilpotent_squares(R: FiniteRing) -> bool:
    """x² = 0 implies x = 0."""
    return all(R.mul[x][x] != R.zero for x in R.nonzero)


def classify(R: FiniteRing, workers: int = 0) -> dict[str, bool | None]:
    """
    classify evaluates all predicates of R; the Ore predicates are None
    for rings with zero divisors.
    """
    integral = is_integral(R)
    return {
        'commutative': is_commutative(R),
        'division_ring': is_division_ring(R),
        'integral': integral,
        'simple': is_simple(R, workers),
        'weakly_fadelian': is_weakly_fadelian(R, workers),
        'fadelian': is_fadelian(R, workers),
        'ore_right': is_ore(Side.RIGHT, R) if integral else None,
        'ore_left': is_ore(Side.LEFT, R) if integral else None,
    }


def check_implications(
    R: FiniteRing, workers: int = 0, log: Log | None = None
) -> ImplicationReport:
    """
    check_implications evaluates exhaustively on R:

    - weakly fadelian ⇒ simple
    - weakly fadelian ⇒ integral
    - weakly fadelian ⇒ (xy = yx = 0 ⇒ x² = 0 or y² = 0)
    - weakly fadelian ⇒ (x² = 0 ⇒ x = 0)
    - weakly fadelian ∧ right Ore ⇒ fadelian
    - weakly fadelian ∧ left Ore ⇒ fadelian
    - division ring ⇒ fadelian
    - fadelian ⇒ weakly fadelian
    - commutative ∧ weakly fadelian ⇒ division ring

    and returns the report.  It fails with ImplicationViolated carrying
    the report if an implication fails.
    """
    p = classify(R, workers)
    wf = bool(p['weakly_fadelian'])
    ii = [
        Implication('weakly fadelian => simple', wf, bool(p['simple'])),
        Implication('weakly fadelian => integral', wf, bool(p['integral'])),
        Implication('weakly fadelian => (xy = yx = 0 => x^2 = 0 or '
            'y^2 = 0)', wf, _annihilators_square_to_zero(R)),
        Implication('weakly fadelian => (x^2 = 0 => x = 0)', wf,
            _no_nilpotent_squares(R)),
        Implication('weakly fadelian and right Ore => fadelian',
            wf and bool(p['ore_right']), bool(p['fadelian'])),
        Implication('weakly fadelian and left Ore => fadelian',
            wf and bool(p['ore_left']), bool(p['fadelian'])),
        Implication('division ring => fadelian',
            bool(p['division_ring']), bool(p['fadelian'])),
        Implication('fadelian => weakly fadelian', bool(p['fadelian']), wf),
        Implication('commutative and weakly fadelian => division ring',
            bool(p['commutative']) and wf, bool(p['division_ring'])),
    ]
    report = ImplicationReport(R.name, R.size, p, ii)
    if log:
        for i in ii:
            log(f'{R.name}: {i.name}: {i.status}')
    if report.violations:
        raise ImplicationViolated(report)
    return report


def corpus(max_size: int = DEFAULT_MAX_SIZE) -> Iterator[FiniteRing]:
    """
    corpus yields Z/n for 2 ≤ n ≤ 12, M₂(F₂), Z/2×Z/3 and F₄ as far as
    their size doesn't exceed max_size.
    """
    rings = [lambda n=n: make_zmod(n) for n in range(2, 13)] + [
        make_matrix_ring_2x2_f2,
        lambda: make_product(make_zmod(2), make_zmod(3)),
        make_field_f4,
    ]
    sizes = list(range(2, 13)) + [16, 6, 4]
    for make, m in zip(rings, sizes):
        if m <= max_size:
            yield make()
