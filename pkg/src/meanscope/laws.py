"""Catalog of verified inequality and identity laws.

Each law bundles an instance sampler (random matrices and in-region
parameters from a seed) with a check procedure that evaluates every link of
the law's chain.  Inequality links produce Loewner verdicts with margins;
identity links produce relative Frobenius residuals.  A trial passes iff
every link holds.

The registry is open: ``register_law`` lets tests inject additional laws
(e.g. deliberately broken ones for exercising the harness failure path).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import means
from .linalg import (
    HermitianMatrix,
    PDMatrix,
    congruence,
    hadamard,
    kron,
    kron_diagonal_block,
    loewner_leq,
    pd_sum,
    power,
    rel_residual,
)
from .ensembles import (
    EnsembleSpec,
    REGION_BOUNDARY,
    random_invertible,
    random_ordered_pair,
    random_pd,
    random_pd_tuple,
    sample_region,
)

DEFAULT_TOL = 1e-8        # Loewner link tolerance (relative to operand scale)
EQUALITY_TOL = 1e-9       # identity link tolerance (chains compose ~5 functions)
SCALAR_TOL = 1e-12        # scalar sequence inequalities
SUBMATRIX_TOL = 1e-13     # Hadamard member vs tensor principal submatrix


class InstanceError(Exception):
    """Instance shape or parameters do not match the law's requirements."""


@dataclass(frozen=True)
class IneqLink:
    label: str
    verdict: object  # LoewnerVerdict

    @property
    def holds(self):
        return self.verdict.holds

    @property
    def margin(self):
        return self.verdict.margin


@dataclass(frozen=True)
class EqLink:
    label: str
    residual: float
    tolerance: float

    @property
    def holds(self):
        return self.residual <= self.tolerance

    @property
    def margin(self):
        return -self.residual


@dataclass(frozen=True)
class CheckResult:
    law: str
    summary: dict
    links: tuple
    skipped: bool = False
    skip_reason: str = ""

    @property
    def holds(self):
        return all(link.holds for link in self.links)

    @property
    def status(self):
        if self.skipped:
            return "skip"
        return "pass" if self.holds else "fail"

    @property
    def margin(self):
        """Worst link margin of the trial (negative residual for identities)."""
        if not self.links:
            return 0.0
        return min(link.margin for link in self.links)


@dataclass
class LawInstance:
    law: str
    seed: int
    n: int
    m: int
    field: str
    As: list = None
    Bs: list = None
    sigma: object = None
    params: dict = field(default_factory=dict)
    ordered: tuple = None        # ((A, B), (C, D)) with A <= B and C <= D
    congruence: np.ndarray = None
    a_seq: np.ndarray = None     # positive scalar sequences
    b_seq: np.ndarray = None


@dataclass(frozen=True)
class LawSpec:
    name: str
    sampler: object
    check: object
    n_cap: int = 6
    region: str = None


_LAWS = {}


def register_law(name, sampler, check, n_cap=6, region=None):
    _LAWS[name] = LawSpec(name=name, sampler=sampler, check=check,
                          n_cap=n_cap, region=region)


def law_names():
    return list(_LAWS)


def law_spec(name):
    try:
        return _LAWS[name]
    except KeyError:
        raise InstanceError(f"unknown law {name!r}") from None


def sample_instance(name, n, m, fieldname, kappa_max, seed, boundary=None):
    """Build a random instance for a law; ``boundary`` forces (s, t) params."""
    spec = law_spec(name)
    n = min(n, spec.n_cap)
    espec = EnsembleSpec(n=n, m=m, field=fieldname, kappa_max=kappa_max, seed=seed)
    return spec.sampler(espec, boundary)


def check_law(name, instance, tol=DEFAULT_TOL):
    spec = law_spec(name)
    if instance.law != name:
        raise InstanceError(
            f"instance was sampled for {instance.law!r}, not {name!r}"
        )
    return spec.check(instance, tol)


def _summary(inst):
    return {"n": inst.n, "m": inst.m, "seed": inst.seed, "field": inst.field,
            "params": dict(inst.params)}


def _ineq(label, A, B, tol):
    return IneqLink(label, loewner_leq(A, B, tol))


def _eq(label, X, Y, tol=EQUALITY_TOL):
    return EqLink(label, rel_residual(X, Y), tol)


def _scalar_ineq(label, lo, hi, tol=SCALAR_TOL):
    from .linalg import LoewnerVerdict
    scale = max(abs(lo), abs(hi))
    margin = hi - lo
    return IneqLink(label, LoewnerVerdict(
        holds=margin >= -tol * max(1.0, scale),
        margin=float(margin), scale=float(scale), tolerance=tol))


# A roster of concrete means used by laws quantified over "any mean".
def _sigma_roster():
    return [
        means.arithmetic(),
        means.harmonic(),
        means.geometric(),
        means.power_mean(0.5),
        means.power_mean(-0.5),
        means.weighted_geometric(0.25),
        means.dual_raw(means.power_mean(0.5)),
    ]


def _pick_sigma(rng):
    roster = _sigma_roster()
    return roster[int(rng.integers(len(roster)))]


def _inst_rng(espec, tag):
    return np.random.default_rng(
        np.random.SeedSequence((int(espec.seed) & (2**63 - 1), 101, tag)))


# ---------------------------------------------------------------------------
# mean-axioms: normalization, congruence equivariance, joint monotonicity
# ---------------------------------------------------------------------------

def _sample_mean_axioms(espec, boundary):
    rng = _inst_rng(espec, 1)
    a, b = random_ordered_pair(espec, 0)
    c, d = random_ordered_pair(espec, 1)
    x = random_pd(espec, 2)
    y = random_pd(espec, 3)
    cmat = random_invertible(espec, 0)
    sigma = _pick_sigma(rng)
    return LawInstance(law="mean-axioms", seed=espec.seed, n=espec.n, m=1,
                       field=espec.field, As=[x], Bs=[y],
                       sigma=sigma, ordered=((a, b), (c, d)),
                       congruence=cmat,
                       params={"sigma": means.format_descriptor(sigma)})


def _check_mean_axioms(inst, tol):
    d = inst.sigma
    n = inst.n
    eye = PDMatrix.identity(n)
    links = []
    links.append(_eq("normalization", means.mean(d, eye, eye),
                     HermitianMatrix.identity(n), tol=1e-13))
    x, y = inst.As[0], inst.Bs[0]
    c = inst.congruence
    lhs = congruence(c, means.mean(d, x, y).hermitian)
    rhs = means.mean(d, PDMatrix(congruence(c, x.hermitian)),
                     PDMatrix(congruence(c, y.hermitian))).hermitian
    links.append(_eq("congruence-equivariance", lhs, rhs))
    (a, b), (cc, dd) = inst.ordered
    links.append(_ineq("joint-monotonicity",
                       means.mean(d, a, cc), means.mean(d, b, dd), tol))
    return CheckResult("mean-axioms", _summary(inst), tuple(links))


# ---------------------------------------------------------------------------
# superadditivity: sum of means <= mean of sums
# ---------------------------------------------------------------------------

def _sample_superadditivity(espec, boundary):
    rng = _inst_rng(espec, 2)
    sigma = _pick_sigma(rng)
    return LawInstance(law="superadditivity", seed=espec.seed, n=espec.n,
                       m=espec.m, field=espec.field,
                       As=random_pd_tuple(espec, 0),
                       Bs=random_pd_tuple(espec, 1), sigma=sigma,
                       params={"sigma": means.format_descriptor(sigma)})


def _check_superadditivity(inst, tol):
    d = inst.sigma
    lhs = pd_sum([means.mean(d, a, b) for a, b in zip(inst.As, inst.Bs)])
    rhs = means.mean(d, pd_sum(inst.As), pd_sum(inst.Bs))
    links = (_ineq("superadditivity", lhs, rhs, tol),)
    return CheckResult("superadditivity", _summary(inst), links)


# ---------------------------------------------------------------------------
# sharp-identity: (A sigma B) # (A sigma-dual B) = A # B
# ---------------------------------------------------------------------------

def _sample_sharp_identity(espec, boundary):
    rng = _inst_rng(espec, 3)
    sigma = _pick_sigma(rng)
    return LawInstance(law="sharp-identity", seed=espec.seed, n=espec.n, m=1,
                       field=espec.field, As=[random_pd(espec, 0)],
                       Bs=[random_pd(espec, 1)], sigma=sigma,
                       params={"sigma": means.format_descriptor(sigma)})


def _check_sharp_identity(inst, tol):
    d = inst.sigma
    a, b = inst.As[0], inst.Bs[0]
    left = means.geomean(means.mean(d, a, b), means.mean(means.dual(d), a, b))
    links = (_eq("sharp-identity", left, means.geomean(a, b)),)
    return CheckResult("sharp-identity", _summary(inst), links)


# ---------------------------------------------------------------------------
# callebaut-operator: sum of # <= (sum sigma) # (sum dual) <= (sum A) # (sum B)
# ---------------------------------------------------------------------------

def _sample_callebaut_operator(espec, boundary):
    rng = _inst_rng(espec, 4)
    sigma = _pick_sigma(rng)
    return LawInstance(law="callebaut-operator", seed=espec.seed, n=espec.n,
                       m=espec.m, field=espec.field,
                       As=random_pd_tuple(espec, 0),
                       Bs=random_pd_tuple(espec, 1), sigma=sigma,
                       params={"sigma": means.format_descriptor(sigma)})


def _check_callebaut_operator(inst, tol):
    d = inst.sigma
    dd = means.dual(d)
    pairs = list(zip(inst.As, inst.Bs))
    lo = pd_sum([means.geomean(a, b) for a, b in pairs])
    mid = means.geomean(pd_sum([means.mean(d, a, b) for a, b in pairs]),
                        pd_sum([means.mean(dd, a, b) for a, b in pairs]))
    hi = means.geomean(pd_sum(inst.As), pd_sum(inst.Bs))
    links = (_ineq("lower-link", lo, mid, tol),
             _ineq("upper-link", mid, hi, tol))
    return CheckResult("callebaut-operator", _summary(inst), links)


# ---------------------------------------------------------------------------
# geo-path-callebaut: the weighted-geometric specialization
# ---------------------------------------------------------------------------

def _sample_geo_path_callebaut(espec, boundary):
    if boundary is not None:
        s = boundary[0]
    else:
        s, _ = sample_region("unit", espec.seed)
    return LawInstance(law="geo-path-callebaut", seed=espec.seed, n=espec.n,
                       m=espec.m, field=espec.field,
                       As=random_pd_tuple(espec, 0),
                       Bs=random_pd_tuple(espec, 1),
                       params={"s": float(s)})


def _geo_path_mid(As, Bs, s):
    pairs = list(zip(As, Bs))
    return means.geomean(
        pd_sum([means.mean(means.geometric_path(s), a, b) for a, b in pairs]),
        pd_sum([means.mean(means.geometric_path(1.0 - s), a, b) for a, b in pairs]))


def _check_geo_path_callebaut(inst, tol):
    s = inst.params["s"]
    pairs = list(zip(inst.As, inst.Bs))
    lo = pd_sum([means.geomean(a, b) for a, b in pairs])
    mid = _geo_path_mid(inst.As, inst.Bs, s)
    hi = means.geomean(pd_sum(inst.As), pd_sum(inst.Bs))
    links = (_ineq("lower-link", lo, mid, tol),
             _ineq("upper-link", mid, hi, tol))
    return CheckResult("geo-path-callebaut", _summary(inst), links)


# ---------------------------------------------------------------------------
# path-monotonicity: F(s) <= F(t) for s between t and 1-t
# ---------------------------------------------------------------------------

def _sample_path_monotonicity(espec, boundary):
    rng = _inst_rng(espec, 5)
    if boundary is not None:
        s, t = boundary
    else:
        s, t = sample_region("between", espec.seed)
    # geometric path by default; occasionally a power path, which triggers
    # the dual-symmetry hypothesis test and is normally skipped
    use_power = bool(rng.integers(8) == 0)
    r = float(rng.uniform(-1.0, 1.0)) if use_power else 0.0
    return LawInstance(law="path-monotonicity", seed=espec.seed, n=espec.n,
                       m=espec.m, field=espec.field,
                       As=random_pd_tuple(espec, 0),
                       Bs=random_pd_tuple(espec, 1),
                       params={"s": float(s), "t": float(t), "r": r})


def _path_dual_symmetry_residual(r, t):
    """Residual of the hypothesis dual(sigma_t) = sigma_{1-t} on a grid."""
    d = means.power_path(r, t) if abs(r) >= means.R_GEOMETRIC_CUTOFF \
        else means.geometric_path(t)
    flipped = means.power_path(r, 1.0 - t) if abs(r) >= means.R_GEOMETRIC_CUTOFF \
        else means.geometric_path(1.0 - t)
    f = means.representing_fn(means.dual(d))
    g = means.representing_fn(flipped)
    grid = np.geomspace(0.1, 10.0, 9)
    return max(abs(f(float(x)) - g(float(x))) / max(1.0, abs(g(float(x))))
               for x in grid)


def _check_path_monotonicity(inst, tol):
    s, t, r = inst.params["s"], inst.params["t"], inst.params["r"]
    if not min(t, 1.0 - t) - 1e-12 <= s <= max(t, 1.0 - t) + 1e-12:
        raise InstanceError(f"s={s} is not between t={t} and 1-t={1.0 - t}")
    hyp = max(_path_dual_symmetry_residual(r, u) for u in (t, s, 0.25))
    if hyp > EQUALITY_TOL:
        return CheckResult(
            "path-monotonicity", _summary(inst), (),
            skipped=True,
            skip_reason=f"dual-symmetry hypothesis fails for r={r} "
                        f"(residual {hyp:.3e})")

    def F(u):
        pairs = list(zip(inst.As, inst.Bs))
        return means.geomean(
            pd_sum([means.path_point(r, u, a, b) for a, b in pairs]),
            pd_sum([means.path_point(r, 1.0 - u, a, b) for a, b in pairs]))

    links = (_ineq("path-monotonicity", F(s), F(t), tol),)
    return CheckResult("path-monotonicity", _summary(inst), links)


# ---------------------------------------------------------------------------
# scalar-callebaut: the classical chain plus monotonicity in the exponent
# spread, on positive scalar sequences
# ---------------------------------------------------------------------------

def scalar_callebaut_chain(a, b, s, t):
    """The four chain members of the classical inequality, in order."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    v0 = float(np.sum(np.sqrt(a * b))) ** 2
    v1 = float(np.sum(a ** s * b ** (1.0 - s)) * np.sum(a ** (1.0 - s) * b ** s))
    v2 = float(np.sum(a ** t * b ** (1.0 - t)) * np.sum(a ** (1.0 - t) * b ** t))
    v3 = float(np.sum(a) * np.sum(b))
    return v0, v1, v2, v3


def callebaut_f(a, b, r, s):
    """Callebaut's two-parameter product, increasing in |r|."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(np.sum(a ** (s + r) * b ** (s - r)) *
                 np.sum(a ** (s - r) * b ** (s + r)))


def _sample_scalar_callebaut(espec, boundary):
    rng = _inst_rng(espec, 6)
    if boundary is not None:
        s, t = boundary
    else:
        s, t = sample_region("callebaut", espec.seed)
    half_log = 0.5 * np.log(espec.kappa_max)
    a = np.exp(rng.uniform(-half_log, half_log, size=espec.m))
    b = np.exp(rng.uniform(-half_log, half_log, size=espec.m))
    r1, r2 = sorted(rng.uniform(0.0, 1.0, size=2))
    sc = float(rng.uniform(0.0, 1.0))
    return LawInstance(law="scalar-callebaut", seed=espec.seed, n=1,
                       m=espec.m, field="real", a_seq=a, b_seq=b,
                       params={"s": float(s), "t": float(t),
                               "r1": float(r1), "r2": float(r2), "sc": sc})


def _check_scalar_callebaut(inst, tol):
    p = inst.params
    s, t = p["s"], p["t"]
    if not ((0.0 <= t <= s <= 0.5) or (0.5 <= s <= t <= 1.0)):
        raise InstanceError(f"(s={s}, t={t}) outside the Callebaut region")
    v0, v1, v2, v3 = scalar_callebaut_chain(inst.a_seq, inst.b_seq, s, t)
    links = [
        _scalar_ineq("geometric-vs-s", v0, v1),
        _scalar_ineq("s-vs-t", v1, v2),
        _scalar_ineq("t-vs-cauchy-schwarz", v2, v3),
        _scalar_ineq("r-monotonicity",
                     callebaut_f(inst.a_seq, inst.b_seq, p["r1"], p["sc"]),
                     callebaut_f(inst.a_seq, inst.b_seq, p["r2"], p["sc"])),
    ]
    return CheckResult("scalar-callebaut", _summary(inst), tuple(links))


# ---------------------------------------------------------------------------
# power-lemma: A^r + A^{-r} <= A + A^{-1} for 0 <= r <= 1
# ---------------------------------------------------------------------------

POWER_LEMMA_GRID = tuple(np.round(np.linspace(0.0, 1.0, 11), 10))


def _sample_power_lemma(espec, boundary):
    return LawInstance(law="power-lemma", seed=espec.seed, n=espec.n, m=1,
                       field=espec.field, As=[random_pd(espec, 0)],
                       params={"r_grid": list(POWER_LEMMA_GRID)})


def _check_power_lemma(inst, tol):
    a = inst.As[0]
    rhs = power(a, 1.0).hermitian + power(a, -1.0).hermitian
    links = []
    for r in inst.params["r_grid"]:
        lhs = power(a, r).hermitian + power(a, -r).hermitian
        links.append(_ineq(f"r={r:g}", lhs, rhs, tol))
    # degenerate endpoints: r=0 collapses to 2I, r=1 collapses to the bound
    links.append(_eq("r0-degenerate",
                     power(a, 0.0).hermitian + power(a, -0.0).hermitian,
                     2.0 * HermitianMatrix.identity(inst.n)))
    links.append(_eq("r1-degenerate",
                     power(a, 1.0).hermitian + power(a, -1.0).hermitian, rhs))
    return CheckResult("power-lemma", _summary(inst), tuple(links))


# ---------------------------------------------------------------------------
# tensor-f / tensor-g: V-shaped Loewner monotonicity of tensor sums
# ---------------------------------------------------------------------------

def tensor_f_value(a, b, t):
    """A^{1+t} x B^{1-t} + A^{1-t} x B^{1+t}."""
    return (kron(power(a, 1.0 + t).hermitian, power(b, 1.0 - t).hermitian) +
            kron(power(a, 1.0 - t).hermitian, power(b, 1.0 + t).hermitian))


def tensor_g_value(a, b, t):
    """A^t x B^{1-t} + A^{1-t} x B^t."""
    return (kron(power(a, t).hermitian, power(b, 1.0 - t).hermitian) +
            kron(power(a, 1.0 - t).hermitian, power(b, t).hermitian))


def vshape_grid(lo, hi, pivot, points_per_side=9):
    left = np.linspace(lo, pivot, points_per_side)
    right = np.linspace(pivot, hi, points_per_side)
    return np.unique(np.concatenate([left, right]))


def _sample_tensor(espec, boundary, law):
    return LawInstance(law=law, seed=espec.seed, n=espec.n, m=1,
                       field=espec.field, As=[random_pd(espec, 0)],
                       Bs=[random_pd(espec, 1)], params={})


def _vshape_links(values, grid, pivot, tol):
    """Pairwise Loewner links: decreasing left of the pivot, increasing right."""
    links = []
    for (t0, v0), (t1, v1) in zip(zip(grid, values), zip(grid[1:], values[1:])):
        if t1 <= pivot + 1e-12:
            links.append(_ineq(f"decreasing {t0:g}->{t1:g}", v1, v0, tol))
        elif t0 >= pivot - 1e-12:
            links.append(_ineq(f"increasing {t0:g}->{t1:g}", v0, v1, tol))
    return links


def _check_tensor_f(inst, tol):
    a, b = inst.As[0], inst.Bs[0]
    grid = vshape_grid(-1.0, 1.0, 0.0)
    values = [tensor_f_value(a, b, t) for t in grid]
    links = _vshape_links(values, grid, 0.0, tol)
    return CheckResult("tensor-f", _summary(inst), tuple(links))


def _check_tensor_g(inst, tol):
    a, b = inst.As[0], inst.Bs[0]
    grid = vshape_grid(0.0, 1.0, 0.5)
    values = [tensor_g_value(a, b, t) for t in grid]
    links = _vshape_links(values, grid, 0.5, tol)
    return CheckResult("tensor-g", _summary(inst), tuple(links))


# ---------------------------------------------------------------------------
# matrix-callebaut: the tensor-product chain of Callebaut type
# ---------------------------------------------------------------------------

def matrix_callebaut_members(As, Bs, s, t):
    """The four chain members (each Hermitian of dimension n^2), in order."""
    pairs = list(zip(As, Bs))
    sharp = pd_sum([means.geomean(a, b) for a, b in pairs]).hermitian

    def member(u):
        su = pd_sum([means.mean(means.geometric_path(u), a, b)
                     for a, b in pairs]).hermitian
        s1u = pd_sum([means.mean(means.geometric_path(1.0 - u), a, b)
                      for a, b in pairs]).hermitian
        return kron(su, s1u) + kron(s1u, su)

    sa = pd_sum(As).hermitian
    sb = pd_sum(Bs).hermitian
    return (2.0 * kron(sharp, sharp), member(s), member(t),
            kron(sa, sb) + kron(sb, sa))


def _sample_matrix_callebaut(espec, boundary):
    if boundary is not None:
        s, t = boundary
    else:
        s, t = sample_region("callebaut", espec.seed)
    return LawInstance(law="matrix-callebaut", seed=espec.seed, n=espec.n,
                       m=espec.m, field=espec.field,
                       As=random_pd_tuple(espec, 0),
                       Bs=random_pd_tuple(espec, 1),
                       params={"s": float(s), "t": float(t)})


def _require_callebaut_region(s, t):
    if not ((0.0 <= t <= s <= 0.5) or (0.5 <= s <= t <= 1.0)):
        raise InstanceError(f"(s={s}, t={t}) outside the Callebaut region")


def _check_matrix_callebaut(inst, tol):
    s, t = inst.params["s"], inst.params["t"]
    _require_callebaut_region(s, t)
    m0, m1, m2, m3 = matrix_callebaut_members(inst.As, inst.Bs, s, t)
    links = (_ineq("geometric-vs-s", m0, m1, tol),
             _ineq("s-vs-t", m1, m2, tol),
             _ineq("t-vs-outer", m2, m3, tol))
    return CheckResult("matrix-callebaut", _summary(inst), links)


# ---------------------------------------------------------------------------
# hadamard-callebaut: the entrywise-product corollary, cross-checked against
# the principal submatrix of the tensor chain
# ---------------------------------------------------------------------------

def hadamard_callebaut_members(As, Bs, s, t):
    pairs = list(zip(As, Bs))
    sharp = pd_sum([means.geomean(a, b) for a, b in pairs]).hermitian

    def member(u):
        su = pd_sum([means.mean(means.geometric_path(u), a, b)
                     for a, b in pairs]).hermitian
        s1u = pd_sum([means.mean(means.geometric_path(1.0 - u), a, b)
                      for a, b in pairs]).hermitian
        return hadamard(su, s1u)

    return (hadamard(sharp, sharp), member(s), member(t),
            hadamard(pd_sum(As).hermitian, pd_sum(Bs).hermitian))


def _sample_hadamard_callebaut(espec, boundary):
    inst = _sample_matrix_callebaut(espec, boundary)
    inst.law = "hadamard-callebaut"
    return inst


def _check_hadamard_callebaut(inst, tol):
    s, t = inst.params["s"], inst.params["t"]
    _require_callebaut_region(s, t)
    h = hadamard_callebaut_members(inst.As, inst.Bs, s, t)
    links = [_ineq("geometric-vs-s", h[0], h[1], tol),
             _ineq("s-vs-t", h[1], h[2], tol),
             _ineq("t-vs-outer", h[2], h[3], tol)]
    # derivation route: twice each Hadamard member is the principal
    # submatrix of the corresponding tensor chain member
    tensor = matrix_callebaut_members(inst.As, inst.Bs, s, t)
    for i, (hm, tm) in enumerate(zip(h, tensor)):
        links.append(_eq(f"submatrix-consistency-{i}", 2.0 * hm,
                         kron_diagonal_block(tm, inst.n), tol=SUBMATRIX_TOL))
    return CheckResult("hadamard-callebaut", _summary(inst), tuple(links))


# ---------------------------------------------------------------------------
# hadamard-power: the averaged-powers corollary (B_j = I)
# ---------------------------------------------------------------------------

def _sample_hadamard_power(espec, boundary):
    if boundary is not None:
        t = boundary[1]
    else:
        _, t = sample_region("unit", espec.seed)
    return LawInstance(law="hadamard-power", seed=espec.seed, n=espec.n,
                       m=espec.m, field=espec.field,
                       As=random_pd_tuple(espec, 0), params={"t": float(t)})


def _check_hadamard_power(inst, tol):
    t = inst.params["t"]
    m = len(inst.As)
    avg = 1.0 / m
    p_half = pd_sum([power(a, 0.5) for a in inst.As], scale=avg).hermitian
    p_t = pd_sum([power(a, t) for a in inst.As], scale=avg).hermitian
    p_1t = pd_sum([power(a, 1.0 - t) for a in inst.As], scale=avg).hermitian
    diag_part = HermitianMatrix(
        sum(np.diag(np.diagonal(a.array)) for a in inst.As) * avg)
    links = (_ineq("sqrt-vs-t", hadamard(p_half, p_half),
                   hadamard(p_t, p_1t), tol),
             _ineq("t-vs-diagonal", hadamard(p_t, p_1t), diag_part, tol))
    return CheckResult("hadamard-power", _summary(inst), links)


# ---------------------------------------------------------------------------
# interpolation-identity: geodesic reparametrization of the geometric path
# ---------------------------------------------------------------------------

def _sample_interpolation_identity(espec, boundary):
    rng = _inst_rng(espec, 7)
    p, q, r = rng.uniform(0.0, 1.0, size=3)
    if boundary is not None:
        r = boundary[0]
    return LawInstance(law="interpolation-identity", seed=espec.seed,
                       n=espec.n, m=1, field=espec.field,
                       As=[random_pd(espec, 0)], Bs=[random_pd(espec, 1)],
                       params={"p": float(p), "q": float(q), "r": float(r)})


def _check_interpolation_identity(inst, tol):
    p, q, r = inst.params["p"], inst.params["q"], inst.params["r"]
    a, b = inst.As[0], inst.Bs[0]
    x = means.mean(means.geometric_path(p), a, b)
    y = means.mean(means.geometric_path(q), a, b)
    lhs = means.mean(means.geometric_path(r), x, y)
    rhs = means.mean(means.geometric_path((1.0 - r) * p + r * q), a, b)
    links = (_eq("reparametrization", lhs, rhs),)
    return CheckResult("interpolation-identity", _summary(inst), links)


# ---------------------------------------------------------------------------
# path-axioms: endpoints, midpoint, interpolation midpoint, continuity
# ---------------------------------------------------------------------------

def _sample_path_axioms(espec, boundary):
    rng = _inst_rng(espec, 8)
    r = float(rng.uniform(-1.0, 1.0))
    p, q = rng.uniform(0.0, 1.0, size=2)
    if boundary is not None:
        p, q = boundary
    return LawInstance(law="path-axioms", seed=espec.seed, n=espec.n, m=1,
                       field=espec.field, As=[random_pd(espec, 0)],
                       Bs=[random_pd(espec, 1)],
                       params={"r": r, "p": float(p), "q": float(q)})


def _check_path_axioms(inst, tol):
    r, p, q = inst.params["r"], inst.params["p"], inst.params["q"]
    a, b = inst.As[0], inst.Bs[0]
    base = means.power_mean(r)
    links = [
        _eq("left-endpoint", means.path_point(r, 0.0, a, b), a),
        _eq("right-endpoint", means.path_point(r, 1.0, a, b), b),
        _eq("midpoint-is-mean", means.path_point(r, 0.5, a, b),
            means.mean(base, a, b)),
        _eq("interpolation-midpoint",
            means.mean(base, means.path_point(r, p, a, b),
                       means.path_point(r, q, a, b)),
            means.path_point(r, (p + q) / 2.0, a, b)),
    ]
    # norm continuity, probed by a small parameter step
    t0 = min(max(p, 1e-6), 1.0 - 1e-6)
    step = 1e-7
    links.append(_eq("continuity", means.path_point(r, t0, a, b),
                     means.path_point(r, t0 + step, a, b), tol=1e-3))
    return CheckResult("path-axioms", _summary(inst), tuple(links))


# ---------------------------------------------------------------------------
# wada: the tensor-product Callebaut refinement for a single pair
# ---------------------------------------------------------------------------

def _sample_wada(espec, boundary):
    rng = _inst_rng(espec, 9)
    sigma = _pick_sigma(rng)
    return LawInstance(law="wada", seed=espec.seed, n=espec.n, m=1,
                       field=espec.field, As=[random_pd(espec, 0)],
                       Bs=[random_pd(espec, 1)], sigma=sigma,
                       params={"sigma": means.format_descriptor(sigma)})


def _check_wada(inst, tol):
    d = inst.sigma
    a, b = inst.As[0], inst.Bs[0]
    sharp = means.geomean(a, b).hermitian
    x = means.mean(d, a, b).hermitian
    y = means.mean(means.dual(d), a, b).hermitian
    lo = kron(sharp, sharp)
    mid = 0.5 * (kron(x, y) + kron(y, x))
    hi = 0.5 * (kron(a.hermitian, b.hermitian) + kron(b.hermitian, a.hermitian))
    links = (_ineq("lower-link", lo, mid, tol),
             _ineq("upper-link", mid, hi, tol))
    return CheckResult("wada", _summary(inst), links)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

register_law("mean-axioms", _sample_mean_axioms, _check_mean_axioms)
register_law("superadditivity", _sample_superadditivity, _check_superadditivity)
register_law("sharp-identity", _sample_sharp_identity, _check_sharp_identity)
register_law("callebaut-operator", _sample_callebaut_operator,
             _check_callebaut_operator)
register_law("path-monotonicity", _sample_path_monotonicity,
             _check_path_monotonicity, region="between")
register_law("geo-path-callebaut", _sample_geo_path_callebaut,
             _check_geo_path_callebaut, region="unit")
register_law("scalar-callebaut", _sample_scalar_callebaut,
             _check_scalar_callebaut, region="callebaut")
register_law("power-lemma", _sample_power_lemma, _check_power_lemma)
register_law("tensor-f", lambda e, b: _sample_tensor(e, b, "tensor-f"),
             _check_tensor_f, n_cap=3)
register_law("tensor-g", lambda e, b: _sample_tensor(e, b, "tensor-g"),
             _check_tensor_g, n_cap=3)
register_law("matrix-callebaut", _sample_matrix_callebaut,
             _check_matrix_callebaut, n_cap=3, region="callebaut")
register_law("hadamard-callebaut", _sample_hadamard_callebaut,
             _check_hadamard_callebaut, n_cap=3, region="callebaut")
register_law("hadamard-power", _sample_hadamard_power, _check_hadamard_power,
             region="unit")
register_law("interpolation-identity", _sample_interpolation_identity,
             _check_interpolation_identity)
register_law("path-axioms", _sample_path_axioms, _check_path_axioms)
register_law("wada", _sample_wada, _check_wada, n_cap=3)


def boundary_params(name):
    """Forced degenerate parameter points for a law, if it has a region."""
    spec = law_spec(name)
    if spec.region is None:
        return []
    return list(REGION_BOUNDARY[spec.region])


# ---------------------------------------------------------------------------
# sweeps: scalar summaries of matrix-valued functions over a grid
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CurvePoint:
    t: float
    trace: float
    lambda_min: float
    lambda_max: float
    link_margin: float  # Loewner margin of the monotone link ending here (nan for first)
    link_holds: bool


@dataclass(frozen=True)
class Curve:
    law: str
    grid: tuple
    points: tuple

    @property
    def holds(self):
        return all(p.link_holds for p in self.points)


@dataclass(frozen=True)
class SweepSpec:
    name: str
    instance_law: str
    evaluator: object  # (instance, t) -> HermitianMatrix
    pivot: float       # minimum location; monotone direction flips here
    domain: tuple


def _sweep_tensor_f(inst, t):
    return tensor_f_value(inst.As[0], inst.Bs[0], t)


def _sweep_tensor_g(inst, t):
    return tensor_g_value(inst.As[0], inst.Bs[0], t)


def _sweep_matrix_callebaut_middle(inst, t):
    pairs = list(zip(inst.As, inst.Bs))
    su = pd_sum([means.mean(means.geometric_path(t), a, b)
                 for a, b in pairs]).hermitian
    s1u = pd_sum([means.mean(means.geometric_path(1.0 - t), a, b)
                  for a, b in pairs]).hermitian
    return kron(su, s1u) + kron(s1u, su)


def _sweep_scalar_callebaut_f(inst, t):
    return HermitianMatrix([[callebaut_f(inst.a_seq, inst.b_seq, t,
                                         inst.params["sc"])]])


SWEEPS = {
    "tensor-f": SweepSpec("tensor-f", "tensor-f", _sweep_tensor_f,
                          0.0, (-1.0, 1.0)),
    "tensor-g": SweepSpec("tensor-g", "tensor-g", _sweep_tensor_g,
                          0.5, (0.0, 1.0)),
    "matrix-callebaut-middle": SweepSpec(
        "matrix-callebaut-middle", "matrix-callebaut",
        _sweep_matrix_callebaut_middle, 0.5, (0.0, 1.0)),
    "scalar-callebaut-f": SweepSpec(
        "scalar-callebaut-f", "scalar-callebaut", _sweep_scalar_callebaut_f,
        0.0, (0.0, 1.0)),
}


def sweep_law(name, instance, grid, tol=DEFAULT_TOL):
    """Evaluate a sweepable law over a sorted grid, with pairwise links."""
    try:
        sw = SWEEPS[name]
    except KeyError:
        raise InstanceError(f"law {name!r} is not sweepable") from None
    grid = [float(t) for t in grid]
    if any(t1 <= t0 for t0, t1 in zip(grid, grid[1:])):
        raise InstanceError("sweep grid must be strictly increasing")
    lo, hi = sw.domain
    if grid[0] < lo - 1e-12 or grid[-1] > hi + 1e-12:
        raise InstanceError(
            f"grid [{grid[0]}, {grid[-1]}] outside domain [{lo}, {hi}]")
    values = [sw.evaluator(instance, t) for t in grid]
    points = []
    prev = None
    for t, v in zip(grid, values):
        lam = v.decomposition().eigenvalues
        margin, holds = float("nan"), True
        if prev is not None:
            t0, v0 = prev
            if t <= sw.pivot + 1e-12:
                verdict = loewner_leq(v, v0, tol)       # decreasing side
            elif t0 >= sw.pivot - 1e-12:
                verdict = loewner_leq(v0, v, tol)       # increasing side
            else:
                verdict = None                          # straddles the pivot
            if verdict is not None:
                margin, holds = verdict.margin, verdict.holds
        points.append(CurvePoint(t=t, trace=v.trace(),
                                 lambda_min=float(lam[0]),
                                 lambda_max=float(lam[-1]),
                                 link_margin=margin, link_holds=holds))
        prev = (t, v)
    return Curve(law=name, grid=tuple(grid), points=tuple(points))
