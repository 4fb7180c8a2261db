"""Prime-degree isogeny steps, chains, walks, and an exhaustive recovery
search.

Steps are computed with Velu's formulas in translation-sum form: the image
of P is obtained by summing P over translates by the kernel, and the
codomain coefficients are (a - 5t, b - 7w) for the usual kernel sums t, w.
An optional post-composition with the isomorphism (x, y) -> (u^2 x, u^3 y)
lets a recovered chain land exactly on a prescribed target curve.
"""

import random

from .curves import (
    INFINITY,
    CurvePoint,
    CurveSpec,
    is_on_curve,
    j_invariant,
    point_add,
    random_point,
    scalar_mul,
)
from .errors import BadKernel, NoIsogenyFound, NoSuchOrder, NotOnCurve
from .fields import Fp2, fp2_from_int, fp2_sqrt, is_prime


class IsogenyStep:
    """One degree-ell isogeny with cyclic kernel <K>."""

    __slots__ = ("domain", "kernel", "ell", "scale", "kernel_points", "codomain")

    def __init__(self, domain: CurveSpec, kernel: CurvePoint, ell: int, scale=None):
        if not is_prime(ell):
            raise BadKernel(f"step degree {ell} must be prime")
        if kernel.is_infinity or not is_on_curve(domain, kernel):
            raise BadKernel("kernel generator must be a finite point on the domain")
        pts = []
        q = kernel
        while not q.is_infinity:
            pts.append(q)
            q = point_add(domain, q, kernel)
        if len(pts) != ell - 1:
            raise BadKernel(f"kernel generator has order {len(pts) + 1}, expected {ell}")
        self.domain = domain
        self.kernel = kernel
        self.ell = ell
        self.scale = scale if scale is not None else fp2_from_int(1, domain.p)
        self.kernel_points = pts
        p = domain.p
        t = Fp2(0, 0, p)
        w = Fp2(0, 0, p)
        three = fp2_from_int(3, p)
        two = fp2_from_int(2, p)
        for q in pts:
            gx = three * q.x * q.x + domain.a
            t = t + gx
            w = w + two * q.y * q.y + q.x * gx
        five = fp2_from_int(5, p)
        seven = fp2_from_int(7, p)
        a_new = domain.a - five * t
        b_new = domain.b - seven * w
        u = self.scale
        u2 = u * u
        u4 = u2 * u2
        self.codomain = CurveSpec(u4 * a_new, u4 * u2 * b_new, p)

    def with_scale(self, u: Fp2) -> "IsogenyStep":
        return IsogenyStep(self.domain, self.kernel, self.ell, scale=u)

    def evaluate(self, pt: CurvePoint) -> CurvePoint:
        if not is_on_curve(self.domain, pt):
            raise NotOnCurve(f"{pt} not on step domain")
        if pt.is_infinity or pt in self.kernel_points:
            return INFINITY
        x = pt.x
        y = pt.y
        for q in self.kernel_points:
            shifted = point_add(self.domain, pt, q)
            x = x + shifted.x - q.x
            y = y + shifted.y - q.y
        u = self.scale
        u2 = u * u
        return CurvePoint(u2 * x, u2 * u * y)

    def kernel_key(self):
        return self.kernel.key()


class IsogenyChain:
    """Composition of steps; the empty chain is the identity isogeny."""

    __slots__ = ("domain", "steps")

    def __init__(self, domain: CurveSpec, steps=()):
        steps = tuple(steps)
        prev = domain
        for step in steps:
            if step.domain != prev:
                raise NotOnCurve("consecutive steps do not chain")
            prev = step.codomain
        self.domain = domain
        self.steps = steps

    @property
    def codomain(self) -> CurveSpec:
        return self.steps[-1].codomain if self.steps else self.domain

    @property
    def degree(self) -> int:
        d = 1
        for step in self.steps:
            d *= step.ell
        return d

    def extended(self, step: IsogenyStep) -> "IsogenyChain":
        return IsogenyChain(self.domain, self.steps + (step,))

    def sort_key(self):
        return tuple(step.kernel_key() for step in self.steps)

    def __len__(self):
        return len(self.steps)

    def __repr__(self):
        return f"IsogenyChain(degree={self.degree}, steps={len(self.steps)})"


def evaluate_chain(chain: IsogenyChain, pt: CurvePoint) -> CurvePoint:
    if not is_on_curve(chain.domain, pt):
        raise NotOnCurve(f"{pt} not on chain domain")
    for step in chain.steps:
        pt = step.evaluate(pt)
    return pt


def velu_step(e: CurveSpec, kernel: CurvePoint, ell: int) -> IsogenyStep:
    return IsogenyStep(e, kernel, ell)


def _canonical_generator(e: CurveSpec, gen: CurvePoint, ell: int) -> CurvePoint:
    """Smallest-serialization generator of <gen>."""
    best = gen
    q = gen
    for _ in range(ell - 2):
        q = point_add(e, q, gen)
        if q.key() < best.key():
            best = q
    return best


def ell_torsion_subgroups(e: CurveSpec, ell: int) -> list[CurvePoint]:
    """Canonical generators of the ell+1 cyclic subgroups of E[ell], sorted.

    Requires ell | p+1 so that E[ell] is rational with (Z/ell)^2 structure.
    """
    if (e.p + 1) % ell != 0:
        raise NoSuchOrder(f"{ell} does not divide p+1")
    rng = random.Random(("torsion", e.key(), ell).__repr__())
    cofactor = (e.p + 1) // ell
    # (p+1)^2 / ell^2 torsion still leaves points of order ell * something
    # when ell^2 | p+1; strip the remaining ell-power.
    extra = 1
    m = cofactor
    while m % ell == 0:
        m //= ell
        extra *= ell

    def sample() -> CurvePoint:
        while True:
            q = scalar_mul(e, cofactor, random_point(e, rng))
            if q.is_infinity:
                continue
            while not scalar_mul(e, ell, q).is_infinity:
                q = scalar_mul(e, ell, q)
            return q

    g1 = sample()
    g1_span = {scalar_mul(e, i, g1) for i in range(ell)}
    while True:
        g2 = sample()
        if g2 not in g1_span:
            break
    gens = [g1] + [point_add(e, g2, scalar_mul(e, i, g1)) for i in range(ell)]
    canonical = [_canonical_generator(e, g, ell) for g in gens]
    canonical.sort(key=lambda q: q.key())
    return canonical


def _other_subgroup_point(subgroups, chosen: CurvePoint) -> CurvePoint:
    for g in subgroups:
        if g != chosen:
            return g
    raise AssertionError("ell+1 >= 2 subgroups always exist")


def random_walk(e0: CurveSpec, ell: int, e: int, seed) -> IsogenyChain:
    """Non-backtracking walk of e steps of degree ell, deterministic per seed."""
    if (e0.p + 1) % ell != 0:
        raise NoSuchOrder(f"{ell} does not divide p+1")
    rng = random.Random(("walk", repr(seed)).__repr__())
    chain = IsogenyChain(e0)
    forbidden = None
    current = e0
    for _ in range(e):
        subgroups = ell_torsion_subgroups(current, ell)
        if forbidden is not None:
            subgroups = [g for g in subgroups if g != forbidden]
        kernel = subgroups[rng.randrange(len(subgroups))]
        step = velu_step(current, kernel, ell)
        aux = _other_subgroup_point(ell_torsion_subgroups(current, ell), kernel)
        forbidden = _canonical_generator(step.codomain, step.evaluate(aux), ell)
        chain = chain.extended(step)
        current = step.codomain
    return chain


def isomorphism_scales(src: CurveSpec, dst: CurveSpec) -> list[Fp2]:
    """All u with (u^4 a, u^6 b) = (a', b'), i.e. isomorphisms src -> dst."""
    p = src.p
    if bool(src.a) != bool(dst.a) or bool(src.b) != bool(dst.b):
        return []
    candidates: list[Fp2] = []
    if src.a and src.b:
        u2 = (src.a * dst.b) / (dst.a * src.b)
        u = fp2_sqrt(u2)
        if u is not None:
            candidates = [u, -u]
    elif src.b:
        # j = 0: u^6 = b'/b, via cube roots then square roots.
        for v in _cube_roots(dst.b / src.b):
            s = fp2_sqrt(v)
            if s is not None:
                candidates.extend([s, -s])
    else:
        # j = 1728: u^4 = a'/a.
        w = dst.a / src.a
        s = fp2_sqrt(w)
        if s is not None:
            for u2 in (s, -s):
                t = fp2_sqrt(u2)
                if t is not None:
                    candidates.extend([t, -t])
    seen = set()
    result = []
    for u in candidates:
        u2 = u * u
        u4 = u2 * u2
        if u.key() not in seen and u4 * src.a == dst.a and u4 * u2 * src.b == dst.b:
            seen.add(u.key())
            result.append(u)
    result.sort(key=lambda u: u.key())
    return result


_cube_root_tables: dict[int, dict] = {}


def _cube_roots(c: Fp2) -> list[Fp2]:
    p = c.p
    if p not in _cube_root_tables:
        table: dict[tuple, list] = {}
        for c0 in range(p):
            for c1 in range(p):
                v = Fp2(c0, c1, p)
                table.setdefault((v * v * v).key(), []).append(v)
        _cube_root_tables[p] = table
    return _cube_root_tables[p].get(c.key(), [])


def _walks(e0: CurveSpec, ell: int, e: int):
    """All non-backtracking length-e walks, kernels in canonical sorted order."""
    stack = [(IsogenyChain(e0), None)]
    while stack:
        chain, forbidden = stack.pop()
        if len(chain) == e:
            yield chain
            continue
        current = chain.codomain
        subgroups = ell_torsion_subgroups(current, ell)
        for kernel in reversed(subgroups):
            if forbidden is not None and kernel == forbidden:
                continue
            step = velu_step(current, kernel, ell)
            aux = _other_subgroup_point(subgroups, kernel)
            next_forbidden = _canonical_generator(
                step.codomain, step.evaluate(aux), ell
            )
            stack.append((chain.extended(step), next_forbidden))


def recover_isogeny(
    e0: CurveSpec,
    e1: CurveSpec,
    point: CurvePoint,
    image: CurvePoint,
    ell: int,
    e: int,
) -> IsogenyChain:
    """Exhaustive stand-in for the torsion-point isogeny recovery oracle.

    Searches every non-backtracking ell-walk of length e out of e0 and
    returns the lexicographically smallest chain (by kernel serialization)
    whose codomain can be identified with e1 by an isomorphism carrying the
    walk's image of `point` to `image`.  The winning chain's final step is
    rescaled so its codomain equals e1 and its action sends point to image
    literally.
    """
    if not is_on_curve(e0, point):
        raise NotOnCurve("torsion point not on the starting curve")
    if not is_on_curve(e1, image):
        raise NotOnCurve("image point not on the target curve")
    target_j = j_invariant(e1)
    best = None
    if e == 0:
        if e1 == e0 and image == point:
            return IsogenyChain(e0)
        raise NoIsogenyFound("no length-0 walk matches")
    for chain in _walks(e0, ell, e):
        if j_invariant(chain.codomain) != target_j:
            continue
        mapped = evaluate_chain(chain, point)
        for u in isomorphism_scales(chain.codomain, e1):
            u2 = u * u
            if mapped.is_infinity:
                adjusted_pt = INFINITY
            else:
                adjusted_pt = CurvePoint(u2 * mapped.x, u2 * u * mapped.y)
            if adjusted_pt != image:
                continue
            last = chain.steps[-1].with_scale(chain.steps[-1].scale * u)
            candidate = IsogenyChain(e0, chain.steps[:-1] + (last,))
            if best is None or candidate.sort_key() < best.sort_key():
                best = candidate
            break
    if best is None:
        raise NoIsogenyFound(
            f"no degree {ell}^{e} chain maps the torsion point as required"
        )
    return best
