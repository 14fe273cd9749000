"""Seeded property suites over one graph.

Each property returns a PropertyResult; a failing one carries the first
counterexample together with the seed that reproduces it.
"""

from __future__ import annotations

import logging
import math
import random
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from mpmath import mp

from chf_cli.core.cartography import (
    R0,
    R0SQ,
    R1,
    Word,
    act,
    borel_face_generators,
    compose,
    is_regular,
    monodromy_order,
    reduce,
    schreier_generators,
)
from chf_cli.core.chf import (
    chf_eval,
    chf_eval_precise,
    face_shear_sum,
    fuchsian_generators,
    is_parabolic,
    matrix_L,
    matrix_X,
    psl2z_to_word,
    relation_holds,
    word_matrix_z0,
)
from chf_cli.core.errors import ClosureBoundError
from chf_cli.core.mobius import Mobius
from chf_cli.core.net import (
    BASE_POINTS,
    IdealTriangle,
    find_triangle,
    fundamental_domain,
    generate_net,
    is_farey,
    marked_key,
)
from chf_cli.core.ribbon_graph import EdgeLabeling
from chf_cli.core.shear_system import parabolic_family

if TYPE_CHECKING:
    from collections.abc import Sequence

    from chf_cli.core.ribbon_graph import DartId, RibbonGraph

logger = logging.getLogger(__name__)

_LETTERS = (R0, R0SQ, R1)
INTEGER_MODE_WORDS = 500


@dataclass(frozen=True)
class VerifyOptions:
    """Knobs shared by all properties."""

    seed: int = 42
    samples: int = 200
    tolerance: float = 1e-9
    depth_limit: int = 8
    closure_bound: int = 10**6
    precision: int = 50


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    checks: int
    detail: str = ""


class _Failure(Exception):
    pass


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise _Failure(message)


def random_word(rng: random.Random, max_length: int) -> Word:
    return reduce(rng.choice(_LETTERS) for _ in range(rng.randint(0, max_length)))


def random_labeling(rng: random.Random, graph: RibbonGraph) -> EdgeLabeling:
    """Rational shears in [-2, 2] with denominator 4."""
    return EdgeLabeling.from_edges(graph, (Fraction(rng.randint(-8, 8), 4) for _ in graph.edges))


def random_cusped_labeling(rng: random.Random, graph: RibbonGraph) -> EdgeLabeling | None:
    """A random rational point of the parabolicity nullspace, or None if it is {0}."""
    family = parabolic_family(graph)
    if not family.dimension:
        return None
    values = [Fraction(0)] * graph.edge_count
    for vector in family.basis:
        coefficient = Fraction(rng.randint(-4, 4), 4)
        values = [v + coefficient * x for v, x in zip(values, vector, strict=True)]
    return EdgeLabeling.from_edges(graph, values)


def _borel_pool(graph: RibbonGraph, eps: DartId) -> list[Word]:
    generators = schreier_generators(graph, eps)
    return generators + [w.inverse() for w in generators]


def _precise_equal(m: mp.matrix, n: mp.matrix, tol: float) -> bool:
    """Projective equality of mpmath matrices, relative to the larger entry."""
    left = [x for row in m.tolist() for x in row]
    right = [x for row in n.tolist() for x in row]
    scale = max(1, *(abs(x) for x in left + right))
    return any(
        max(abs(x - sign * y) for x, y in zip(left, right)) <= tol * scale for sign in (1, -1)
    )


def _homomorphism(graph: RibbonGraph, eps: DartId, opts: VerifyOptions, rng: random.Random) -> int:
    pool = _borel_pool(graph, eps)
    checks = 0
    for i in range(opts.samples):
        z = EdgeLabeling.zero(graph) if i % 2 == 0 else random_labeling(rng, graph)
        w2 = random_word(rng, 20)
        w1 = reduce(x for _ in range(rng.randint(0, 5)) for x in rng.choice(pool).letters)
        if z.is_zero:
            left = chf_eval(compose(w2, w1), graph, z, eps)
            right = chf_eval(w2, graph, z, eps) @ chf_eval(w1, graph, z, eps)
            equal = left.projectively_equal(right)
        else:
            with mp.workdps(opts.precision):
                left = chf_eval_precise(compose(w2, w1), graph, z, eps)
                right = chf_eval_precise(w2, graph, z, eps) * chf_eval_precise(w1, graph, z, eps)
                equal = _precise_equal(left, right, opts.tolerance)
        _check(
            equal,
            f"CHF({w2} * {w1}) = {left} but CHF({w2}) CHF({w1}) = {right}",
        )
        checks += 1
    return checks


def _carrier_triangle(carrier: Mobius) -> IdealTriangle:
    p, q, r = (carrier.apply(x) for x in BASE_POINTS)
    return IdealTriangle((p, q, r))


def _net_samples(
    graph: RibbonGraph, eps: DartId, opts: VerifyOptions, rng: random.Random, fact: bool
) -> int:
    depth = min(6, opts.depth_limit)
    count = max(1, opts.samples // 2)
    checks = 0
    for z in (EdgeLabeling.zero(graph), random_labeling(rng, graph)):
        net = generate_net(graph, z, eps, depth, opts.depth_limit, opts.tolerance)
        for _ in range(count):
            w = random_word(rng, 6)
            carrier = chf_eval(w, graph, z, eps).inverse()
            node = find_triangle(net, _carrier_triangle(carrier), opts.tolerance)
            _check(node is not None, f"CHF({w})^-1 T0 is missing from the depth-{depth} net")
            assert node is not None
            if fact:
                side = (carrier.apply(BASE_POINTS[0]), carrier.apply(BASE_POINTS[1]))
                label = node.side_label(side, opts.tolerance)
                expected = z.at(act(w, eps, graph))
                _check(label == expected, f"z* across CHF({w})^-1 [0,inf] is {label}, expected {expected}")
            checks += 1
    return checks


def _net_membership(graph: RibbonGraph, eps: DartId, opts: VerifyOptions, rng: random.Random) -> int:
    return _net_samples(graph, eps, opts, rng, fact=False)


def _dual_label_fact(graph: RibbonGraph, eps: DartId, opts: VerifyOptions, rng: random.Random) -> int:
    return _net_samples(graph, eps, opts, rng, fact=True)


def _trace_cosh(graph: RibbonGraph, eps: DartId, opts: VerifyOptions, rng: random.Random) -> int:
    checks = 0
    for _ in range(max(1, opts.samples // 4)):
        z = random_labeling(rng, graph)
        for generator in fuchsian_generators(graph, z, eps):
            expected = 2 * math.cosh(float(face_shear_sum(graph, z, generator.loop.face)) / 2)
            actual = abs(float(generator.matrix.trace()))
            _check(
                abs(actual - expected) <= opts.tolerance * max(1.0, expected),
                f"face {generator.loop.face_index}: |trace| {actual} != 2cosh(sum/2) {expected}",
            )
            checks += 1
        cusped = random_cusped_labeling(rng, graph)
        if cusped is None:
            continue
        for generator in fuchsian_generators(graph, cusped, eps):
            _check(
                is_parabolic(generator.matrix, opts.tolerance),
                f"face {generator.loop.face_index} is not parabolic on a nullspace labeling",
            )
            checks += 1
    return checks


def _integer_mode(graph: RibbonGraph, eps: DartId, opts: VerifyOptions, rng: random.Random) -> int:
    zero = EdgeLabeling.zero(graph)
    checks = 0
    _check((matrix_L() ** 3).is_identity(), "L^3 is not the identity")
    _check((matrix_X(0) ** 2).is_identity(), "X_0^2 is not the identity")
    for _ in range(max(INTEGER_MODE_WORDS, opts.samples)):
        w = random_word(rng, 30)
        m = chf_eval(w, graph, zero, eps)
        _check(m.is_exact() and m.det() == 1, f"CHF({w}) = {m} is not in SL2(Z)")
        _check(word_matrix_z0(psl2z_to_word(m)).projectively_equal(m), f"round trip fails on {m}")
        checks += 1
    domain = fundamental_domain(graph, zero, eps)
    _check(len(domain) == graph.dart_count, f"{len(domain)} domain triangles for {graph.dart_count} darts")
    _check(
        len({marked_key(node) for node in domain}) == len(domain),
        "fundamental domain repeats a marked triangle",
    )
    return checks + 1


def _product_relation(graph: RibbonGraph, eps: DartId, opts: VerifyOptions, rng: random.Random) -> int:
    if graph.genus() != 0:
        return 0
    checks = 0
    for z in (EdgeLabeling.zero(graph), random_labeling(rng, graph)):
        _check(relation_holds(fuchsian_generators(graph, z, eps), opts.tolerance), "gamma_n ... gamma_1 != 1")
        checks += 1
    return checks


def _farey(graph: RibbonGraph, eps: DartId, opts: VerifyOptions, _rng: random.Random) -> int:
    depth = min(5, opts.depth_limit)
    net = generate_net(graph, EdgeLabeling.zero(graph), eps, depth, opts.depth_limit)
    for node in net:
        _check(is_farey(node.triangle), f"({node.triangle.format()}) is not a Farey triangle")
    return len(net)


def _regularity_monodromy(
    graph: RibbonGraph, eps: DartId, opts: VerifyOptions, _rng: random.Random
) -> int:
    words = borel_face_generators(graph, eps) + schreier_generators(graph, eps)
    for w in words:
        _check(act(w, eps, graph) == eps, f"{w} does not stabilize the base dart")
    try:
        order = monodromy_order(graph, opts.closure_bound)
    except ClosureBoundError:
        return len(words)
    regular = is_regular(graph, eps)
    _check(
        regular == (order == graph.dart_count),
        f"regular={regular} but monodromy order {order} vs {graph.dart_count} darts",
    )
    return len(words) + 1


Property = Callable[["RibbonGraph", int, VerifyOptions, random.Random], int]

PROPERTIES: dict[str, Property] = {
    "homomorphism": _homomorphism,
    "net-membership": _net_membership,
    "dual-label-fact": _dual_label_fact,
    "trace-cosh": _trace_cosh,
    "integer-mode": _integer_mode,
    "product-relation": _product_relation,
    "farey": _farey,
    "regularity-monodromy": _regularity_monodromy,
}


def run_property(name: str, graph: RibbonGraph, eps: DartId, opts: VerifyOptions) -> PropertyResult:
    """Run one named property with its own generator seeded from opts.seed."""
    rng = random.Random(f"{opts.seed}:{name}")
    try:
        checks = PROPERTIES[name](graph, eps, opts, rng)
    except _Failure as failure:
        logger.debug("property %s failed: %s", name, failure)
        return PropertyResult(name, False, 0, f"{failure} (seed {opts.seed})")
    return PropertyResult(name, True, checks)


def run_suite(
    graph: RibbonGraph,
    eps: DartId,
    opts: VerifyOptions,
    names: Sequence[str] | None = None,
) -> list[PropertyResult]:
    return [run_property(name, graph, eps, opts) for name in (names or list(PROPERTIES))]
