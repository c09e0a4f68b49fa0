"""Verification suites behind ``pdwpf verify``.

A suite is a list of independent jobs.  Every job gets its own seed derived
from the run seed and the job key, so the report does not depend on how the
jobs are scheduled.  A job returns case dicts ``{id, expected, actual, pass}``
and optional records (data that is reported but not asserted).
"""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb

from .determinants import (
    bethe_solve_numeric,
    izergin_dwpf,
    pdwpf_hybrid,
    pdwpf_kostov,
    pdwpf_partition_sum,
    pdwpf_trig_hybrid,
    pdwpf_trig_kostov,
    slavnov_scalar_product,
)
from .exactnum import Jet2, format_scalar, is_exact, vandermonde
from .gv import (
    derivative_identity_check,
    gv_map_direct,
    gv_pdwpf_det,
    h2_g2_action,
    m2_cyclic,
    zeta1_jet,
)
from .korepin import (
    Variant,
    check_property_A,
    check_property_B,
    check_property_C,
    check_property_D,
    zeta,
)
from .limits import (
    limit_check_many,
    limit_check_one,
    limit_check_sequential,
    limit_check_slavnov,
    limit_check_trig,
    limit_check_trig_slavnov,
)
from .sampling import Sampler
from .sixvertex import POLYNOMIAL, RATIONAL, WeightScheme, binomial_split_factor, partition_function
from .symfun import (
    TauSpec,
    casorati_check,
    complete_h,
    complete_h_table,
    discrete_derivative,
    elementary_e,
    hirota_miwa_check,
    kp_bilinear_check,
    miwa_triples,
    tau_value,
)

__all__ = ["SUITES", "DEFAULT_CAPS", "run_suite", "thread_count"]

NUMERIC_RTOL = 1e-9
BETHE_RESIDUAL = 1e-12

# largest N per suite; chosen so that the whole run stays within minutes
DEFAULT_CAPS = {
    "izergin": 5,
    "pdwpf-equivalence": 6,
    "trig-split": 4,
    "korepin": 5,
    "symfun-identities": 5,
    "kp": 4,
    "gv": 5,
    "binomial": 5,
    "limits": 3,
    "slavnov-numeric": 4,
}

DRAWS = {
    "izergin": 20,
    "pdwpf-equivalence": 10,
    "trig-split": 5,
    "korepin": 3,
    "symfun-identities": 5,
    "kp": 10,
    "gv": 10,
    "binomial": 3,
    "limits": 3,
    "slavnov-numeric": 2,
}


def job_seed(seed, *key):
    text = ":".join(str(k) for k in (seed,) + key)
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


def _fmt(value):
    if isinstance(value, bool):
        return str(value).lower()
    if is_exact(value):
        return format_scalar(value)
    if isinstance(value, (int, float, str)):
        return str(value)
    import mpmath

    return mpmath.nstr(value, 12)


def _case(cid, expected, actual, passed=None):
    if passed is None:
        passed = expected == actual
    return {"id": cid, "expected": _fmt(expected), "actual": _fmt(actual), "pass": bool(passed)}


def _record(rid, value):
    return {"id": rid, "value": _fmt(value)}


def _tri(max_N):
    return [(n, N) for N in range(1, max_N + 1) for n in range(1, N + 1)]


# ---------------------------------------------------------------------------
# jobs; each takes (suite seed, params) and returns (cases, records)


def _job_izergin(seed, kind, N, draws):
    cases = []
    for d in range(draws):
        s = Sampler(job_seed(seed, "izergin", kind, N, d))
        cid = f"izergin/{kind}/N={N}/draw={d:02d}"
        if kind == "rational":
            xs, ys = s.rational_rapidities(N, N)
            expected = partition_function("dwbc", xs, ys, RATIONAL)
            cases.append(_case(cid, expected, izergin_dwpf(xs, ys, RATIONAL)))
        else:
            xs, ys, g = s.trig_rapidities(N, N)
            scheme = WeightScheme.trigonometric(g)
            expected = partition_function("dwbc", xs, ys, scheme)
            cases.append(_case(cid, expected, izergin_dwpf(xs, ys, scheme)))
    return cases, []


def _job_equivalence(seed, n, N, draws):
    cases = []
    for d in range(draws):
        s = Sampler(job_seed(seed, "pdwpf-equivalence", n, N, d))
        xs, ys = s.rational_rapidities(n, N)
        oracle = partition_function("pdw-topsum", xs, ys, RATIONAL)
        base = f"pdwpf-equivalence/n={n},N={N}/draw={d:02d}"
        for name, value in (("hybrid", pdwpf_hybrid(xs, ys)),
                            ("hybrid-h-rows", pdwpf_hybrid(xs, ys, h_rows=True)),
                            ("kostov", pdwpf_kostov(xs, ys)),
                            ("partition-sum", pdwpf_partition_sum(xs, ys))):
            cases.append(_case(f"{base}/{name}", oracle, value))
    return cases, []


def _job_trig_split(seed, n, N, draws):
    cases, records = [], []
    for d in range(draws):
        s = Sampler(job_seed(seed, "trig-split", n, N, d))
        base = f"trig-split/n={n},N={N}/draw={d:02d}"
        xs, ys, g = s.trig_rapidities(n, N)
        scheme = WeightScheme.trigonometric(g)
        top = partition_function("pdw-topsum", xs, ys, scheme)
        z2 = partition_function("pdw-z2", xs, ys, scheme)
        cases.append(_case(f"{base}/hybrid-vs-topsum", top, pdwpf_trig_hybrid(xs, ys, g)))
        cases.append(_case(f"{base}/kostov-vs-z2", z2, pdwpf_trig_kostov(xs, ys, g)))
        if z2 != 0:
            records.append(_record(f"{base}/topsum-over-z2", top / z2))
        rx, ry = s.rational_rapidities(n, N)
        cases.append(_case(f"{base}/rational-topsum-vs-z2",
                           partition_function("pdw-topsum", rx, ry, RATIONAL),
                           partition_function("pdw-z2", rx, ry, RATIONAL)))
    return cases, records


def _job_korepin(seed, n, N, draws):
    cases = []
    for d in range(draws):
        s = Sampler(job_seed(seed, "korepin", n, N, d))
        xs, ys = s.rational_rapidities(n, N)
        base = f"korepin/n={n},N={N}/draw={d:02d}"
        perm = list(range(N))
        s.rng.shuffle(perm)
        for v in Variant:
            reports = [check_property_A(v, xs[:-1], ys), check_property_B(v, xs, ys, perm)]
            if n >= 2:
                reports.append(check_property_C(v, xs, ys))
            if n == 1:
                reports.append(check_property_D(ys, v))
            for r in reports:
                cases.append(_case(f"{base}/{r.name.split('/')[0]}/{v.value}", True, r.passed))
        oracle = partition_function("pdw-topsum", xs, ys, POLYNOMIAL)
        cases.append(_case(f"{base}/zeta1-vs-oracle", oracle, zeta(Variant.ZETA1, xs, ys)))
        cases.append(_case(f"{base}/zeta2-vs-oracle", oracle, zeta(Variant.ZETA2, xs, ys)))
    return cases, []


def _job_symfun_generating(seed, size, draws):
    """h/e generating-series identities on random variable sets."""
    cases = []
    for d in range(draws):
        s = Sampler(job_seed(seed, "symfun", "gen", size, d))
        xs = s.distinct(size, lambda: s.rational(span=20, max_den=5), forbidden=[0])
        base = f"symfun-identities/generating/size={size}/draw={d:02d}"
        m, k = s.rng.randrange(size), None
        if size > 1:
            k = s.rng.choice([t for t in range(size) if t != m])
        rest_m = xs[:m] + xs[m + 1:]
        for i in range(0, 7):
            # removing one variable
            cases.append(_case(f"{base}/i={i}/remove-one",
                               complete_h(i, xs), complete_h(i, rest_m) + xs[m] * complete_h(i - 1, xs)))
            cases.append(_case(f"{base}/i={i}/discrete-derivative",
                               complete_h(i - 1, xs), discrete_derivative(i, xs, m)))
            if k is not None:
                rest_k = xs[:k] + xs[k + 1:]
                cases.append(_case(f"{base}/i={i}/two-removals",
                                   (xs[m] - xs[k]) * complete_h(i - 1, xs),
                                   complete_h(i, rest_k) - complete_h(i, rest_m)))
            # sum_j (-1)^j e_j h_{i-j} = delta_{i0}
            alt = sum(((-1) ** j * elementary_e(j, xs) * complete_h(i - j, xs)
                       for j in range(i + 1)), Fraction(0))
            cases.append(_case(f"{base}/i={i}/e-h-duality", Fraction(int(i == 0)), alt))
    return cases, []


def _job_symfun_tau(seed, n, N, draws):
    cases = []
    for d in range(draws):
        s = Sampler(job_seed(seed, "symfun", "tau", n, N, d))
        xs, ys = s.rational_rapidities(n, N)
        base = f"symfun-identities/tau/n={n},N={N}/draw={d:02d}"
        ik = TauSpec.ik(xs, ys)
        sign = (-1) ** comb(N, 2)
        cases.append(_case(f"{base}/tau-ik-vs-zeta1", sign * zeta(Variant.ZETA1, xs, ys) * vandermonde(xs, 1),
                           tau_value(ik)))
        sp = TauSpec.s(xs, ys)
        cases.append(_case(f"{base}/tau-s-vs-zeta2", zeta(Variant.ZETA2, xs, ys), tau_value(sp)))
        for spec, label in ((ik, "ik"), (sp, "s")):
            base_mult = spec.default_multiplicities()
            for m in range(len(spec.miwa)):
                if spec.miwa[m] == 0:
                    continue
                pair = (m, (m + 1) % len(spec.miwa)) if len(spec.miwa) > 1 else None
                if pair and spec.miwa[pair[0]] == spec.miwa[pair[1]]:
                    pair = None
                cases.append(_case(f"{base}/casorati-{label}/m={m}", True,
                                   casorati_check(spec, base_mult, m, pair)))
        # all Miwa variables at zero: the bare coefficient determinant
        zero = TauSpec.ik(xs, [0] * N)
        coeffs = zero.coefficients()
        from .exactnum import det
        cases.append(_case(f"{base}/tau-ik-at-zero", det([row[:N] for row in coeffs]),
                           tau_value(zero)))
    return cases, []


def _nonzero_rapidities(s, n, N):
    # zero Miwa variables drop out of the Hirota-Miwa triples
    while True:
        xs, ys = s.rational_rapidities(n, N)
        if 0 not in xs and 0 not in ys:
            return xs, ys


def _shift_list(s, base, count):
    out = []
    while len(out) < count:
        out.append(s.multiplicities(base))
    return out


def _job_kp(seed, source, n, N, shifts):
    s = Sampler(job_seed(seed, "kp", source, n, N))
    xs, ys = _nonzero_rapidities(s, n, N)
    cases = []
    if source == "ik":
        spec = TauSpec.ik(xs, ys)
    else:
        # the n x n form needs at least three Miwa variables
        extra = s.distinct(max(0, 3 - n), lambda: s.rational(span=20, max_den=5),
                           forbidden=[0] + xs)
        spec = TauSpec.s(xs, ys, extra)
    base = f"kp/{source}/n={n},N={N}"
    coeffs = spec.coefficients()

    def tau(ms):
        return tau_value(spec, ms, coeffs)

    for t, mult in enumerate(_shift_list(s, spec.default_multiplicities(), shifts)):
        for trio in miwa_triples(spec):
            r = hirota_miwa_check(spec, mult, *trio, tau=tau)
            cases.append(_case(f"{base}/hirota-miwa/shift={t:02d}/triple={trio}", Fraction(0), r))
    # negative control: a perturbed tau must not satisfy the equation
    trio = miwa_triples(spec)[0]
    mult = spec.default_multiplicities()
    bad = hirota_miwa_check(spec, mult, *trio, tau=lambda ms: tau(ms) + ms[0] ** 2 + 1)
    cases.append(_case(f"{base}/negative-control/perturbed", "nonzero", _fmt(bad), bad != 0))
    return cases, []


def _job_kp_bilinear(seed, source, size):
    s = Sampler(job_seed(seed, "kp-bilinear", source, size))
    if source == "ik":
        xs, ys = _nonzero_rapidities(s, 2, size)
        spec = TauSpec.ik(xs, ys)
    else:
        xs, ys = _nonzero_rapidities(s, size, size + 1)
        spec = TauSpec.s(xs, ys)
    good = [t for t, v in enumerate(spec.miwa) if v != 0][:size]
    base = f"kp/bilinear/{source}/size={size}"
    mult = spec.default_multiplicities()
    cases = [_case(f"{base}/determinant", Fraction(0), kp_bilinear_check(spec, mult, good))]
    scrambled = kp_bilinear_check(spec, mult, good, scramble=True)
    cases.append(_case(f"{base}/negative-control/scrambled", "nonzero", _fmt(scrambled), scrambled != 0))
    return cases, []


def _h_monomials(max_degree, length):
    """Exponent vectors ``(m_1, .., m_L)`` with ``sum k m_k <= max_degree``."""
    out = []

    def rec(k, left, acc):
        if k > length:
            out.append(tuple(acc))
            return
        for m in range(left // k + 1):
            rec(k + 1, left - k * m, acc + [m])

    rec(1, max_degree, [])
    return out


def _h_monomial_fn(exps):
    def f(ys):
        h = complete_h_table(len(exps), ys)
        out = Fraction(1)
        for k, m in enumerate(exps, start=1):
            for _ in range(m):
                out = h[k] * out
        return out

    return f


def _jet_h2_g2(exps, N):
    """``h_2(d) f`` and ``(h_1(d)^2 + m_2(d)) f`` at 0 from jet derivatives."""
    jet = _h_monomial_fn(exps)([Jet2.variable(i, N) for i in range(N)])
    if not isinstance(jet, Jet2):
        jet = Jet2(N, jet)
    h2 = sum((jet.hess(i, j) for i in range(N) for j in range(i, N)), Fraction(0))
    g2 = sum((jet.hess(i, j) for i in range(N) for j in range(N)), Fraction(0))
    g2 += sum((jet.hess(i, (i + 1) % N) for i in range(N)), Fraction(0))
    return h2, g2


def _job_gv(seed, n, N, draws):
    cases, records = [], []
    for d in range(draws):
        s = Sampler(job_seed(seed, "gv", n, N, d))
        xs = s.distinct(n, s.rational)
        g2 = s.rational(span=9, max_den=9)
        base = f"gv/n={n},N={N}/draw={d:02d}"
        direct = gv_map_direct(zeta1_jet(xs, N), N, g2)
        closed = gv_pdwpf_det(xs, N, g2)
        cases.append(_case(f"{base}/g0", direct[1][0], closed[1][0]))
        cases.append(_case(f"{base}/g2", direct[1][1], closed[1][1]))
        cases.append(_case(f"{base}/g0-vs-zeta2-at-0", zeta(Variant.ZETA2, xs, [0] * N), closed[1][0]))
        # the shifted coefficient table read as a Casoratian tau: data only
        if d == 0 and N >= 3:
            spec = TauSpec.ik(xs, s.distinct(N, s.rational, forbidden=[0]))
            coeffs = spec.coefficients()
            for k in (N - 2, N - 1):
                for i in range(N):
                    coeffs[i][k] += g2 * N * coeffs[i][k + 2] if k + 2 < spec.width else 0
            trio = miwa_triples(spec)[0]
            r = hirota_miwa_check(spec, spec.default_multiplicities(), *trio,
                                  tau=lambda ms: tau_value(spec, ms, coeffs))
            records.append(_record(f"{base}/shifted-casoratian-hirota-miwa-residual", r))
    return cases, records


def _job_gv_operators(seed, N):
    cases = []
    for exps in _h_monomials(4, 4):
        if not any(exps):
            continue
        want = h2_g2_action(exps, N)
        got = _jet_h2_g2(exps, N)
        label = "h" + ".".join(str(m) for m in exps)
        cases.append(_case(f"gv/operators/N={N}/{label}/H2", want[0], got[0]))
        cases.append(_case(f"gv/operators/N={N}/{label}/G2", want[1], got[1]))
    s = Sampler(job_seed(seed, "gv-identity", N))
    ys = [s.rational() for _ in range(N)]
    cases.append(_case(f"gv/derivative-identity/N={N}", Fraction(0), derivative_identity_check(ys)))
    brute = sum((ys[i] * ys[(i + 1) % N] for i in range(N)), Fraction(0))
    cases.append(_case(f"gv/m2-cyclic/N={N}", brute, m2_cyclic(ys)))
    return cases, []


def _job_binomial(seed, n, m, N, draws):
    cases = []
    for d in range(draws):
        s = Sampler(job_seed(seed, "binomial", n, m, N, d))
        xs, ys = s.rational_rapidities(n, N)
        top = partition_function("pdw-topsum", xs, ys, RATIONAL)
        split = partition_function("pdw-split", xs, ys, RATIONAL, m=m)
        cases.append(_case(f"binomial/n={n},m={m},N={N}/draw={d:02d}",
                           binomial_split_factor(n, m, N) * top, split))
    return cases, []


def _report_cases(prefix, reports):
    return [_case(f"{prefix}/{r.name}", r.expected, r.actual) for r in reports]


def _job_limits(seed, draw, max_N):
    s = Sampler(job_seed(seed, "limits", draw))
    cases = []
    pre = f"limits/draw={draw:02d}"
    for N in range(2, max_N + 1):
        xs, ys = s.rational_rapidities(N, N)
        cases += _report_cases(pre, [limit_check_one(xs[:-1], ys, t=s.rng.randint(1, 5))])
        cases += _report_cases(pre, limit_check_sequential(xs, ys))
    xs, ys = s.rational_rapidities(3, 3)
    ts = s.distinct(2, lambda: Fraction(s.rng.randint(1, 9)))
    cases += _report_cases(pre, [limit_check_many(xs[:1], ys, ts)])
    exs, eys, g = s.trig_rapidities(2, 2)
    cases += _report_cases(pre, [limit_check_trig(exs[:1], eys, g, [Fraction(s.rng.randint(1, 9))])])
    for n in (1, 2):
        xs, ys = s.rational_rapidities(n, n + 1)
        ts = s.distinct(n, lambda: Fraction(s.rng.randint(1, 9)))
        cases += _report_cases(pre, [limit_check_slavnov(xs, ys, ts)])
        exs, eys, g = s.trig_rapidities(n, n + 1)
        ts = s.distinct(n, lambda: Fraction(s.rng.randint(1, 9)))
        cases += _report_cases(pre, [limit_check_trig_slavnov(exs, eys, g, ts)])
    return cases, []


def _relative(a, b):
    import mpmath

    scale = max(abs(a), abs(b))
    return mpmath.mpf(0) if scale == 0 else abs(a - b) / scale


def _job_slavnov(seed, kind, n, N, draw):
    import mpmath

    from .determinants import BETHE_PREC, bethe_check

    s = Sampler(job_seed(seed, "slavnov", kind, n, N, draw))
    base = f"slavnov-numeric/{kind}/n={n},N={N}/draw={draw:02d}"
    with mpmath.workprec(BETHE_PREC):
        if kind == "rational":
            xs, ys = s.rational_rapidities(n, N)
            scheme = RATIONAL
        else:
            xs, ys, g = s.trig_rapidities(n, N)
            scheme = WeightScheme.trigonometric(g)
        bs = bethe_solve_numeric(n, ys, scheme, seed=job_seed(seed, "roots", kind, n, N, draw))
        residual = max(abs(r) for r in bethe_check(bs, ys, scheme))
        value = slavnov_scalar_product(xs, bs, ys, scheme)
        oracle = partition_function("scalar-product", xs, ys, scheme, bs=bs)
        rel = _relative(value, oracle)
        if kind == "rational":
            vanish = abs(pdwpf_kostov(bs, ys))
        else:
            vanish = abs(pdwpf_trig_kostov(bs, ys, scheme.eg))
    cases = [
        _case(f"{base}/bethe-residual", f"< {BETHE_RESIDUAL}", residual, residual < BETHE_RESIDUAL),
        _case(f"{base}/relative-error", f"< {NUMERIC_RTOL}", rel, rel < NUMERIC_RTOL),
        _case(f"{base}/kostov-at-roots", f"< {NUMERIC_RTOL}", vanish, vanish < NUMERIC_RTOL),
    ]
    return cases, []


def _job_slavnov_exact(seed):
    """Exact roots where they are known in closed form."""
    from .sixvertex import WeightScheme as WS

    cases = []
    xs, bs, ys = [Fraction(3)], [Fraction(-1, 2)], [Fraction(0), Fraction(0)]
    cases.append(_case("slavnov-numeric/exact/rational", partition_function(
        "scalar-product", xs, ys, RATIONAL, bs=bs), slavnov_scalar_product(xs, bs, ys, RATIONAL, tol=0)))
    scheme = WS.trigonometric(Fraction(7))
    xs, bs, ys = [Fraction(3)], [Fraction(5, 7)], [Fraction(1), Fraction(1)]
    cases.append(_case("slavnov-numeric/exact/trigonometric", partition_function(
        "scalar-product", xs, ys, scheme, bs=bs), slavnov_scalar_product(xs, bs, ys, scheme, tol=0)))
    return cases, []


# ---------------------------------------------------------------------------
# suite planning


def _plan(suite, seed, max_N):
    cap = max_N if max_N is not None else DEFAULT_CAPS[suite]
    draws = DRAWS[suite]
    if suite == "izergin":
        return [(_job_izergin, (seed, k, N, draws)) for k in ("rational", "trigonometric")
                for N in range(1, cap + 1)]
    if suite == "pdwpf-equivalence":
        return [(_job_equivalence, (seed, n, N, draws)) for n, N in _tri(cap)]
    if suite == "trig-split":
        return [(_job_trig_split, (seed, n, N, draws)) for n, N in _tri(cap)]
    if suite == "korepin":
        return [(_job_korepin, (seed, n, N, draws)) for n, N in _tri(cap)]
    if suite == "symfun-identities":
        jobs = [(_job_symfun_generating, (seed, size, draws)) for size in range(1, 9)]
        return jobs + [(_job_symfun_tau, (seed, n, N, 2)) for n, N in _tri(cap)]
    if suite == "kp":
        pairs = [(n, N) for n, N in ((2, 3), (3, 4)) if N <= cap]
        jobs = [(_job_kp, (seed, src, n, N, draws)) for src in ("ik", "s") for n, N in pairs]
        return jobs + [(_job_kp_bilinear, (seed, src, size)) for src in ("ik", "s") for size in (3, 4)
                       if size <= cap]
    if suite == "gv":
        jobs = [(_job_gv, (seed, n, N, draws)) for n, N in _tri(cap)]
        return jobs + [(_job_gv_operators, (seed, N)) for N in range(1, cap + 1)]
    if suite == "binomial":
        return [(_job_binomial, (seed, n, m, N, draws)) for n, N in _tri(cap)
                for m in range(n, N + 1)]
    if suite == "limits":
        return [(_job_limits, (seed, d, cap)) for d in range(draws)]
    if suite == "slavnov-numeric":
        # finite Bethe roots need N >= 2n
        jobs = [(_job_slavnov, (seed, kind, n, N, d)) for kind in ("rational", "trigonometric")
                for n in (1, 2) for N in range(2 * n, cap + 1) for d in range(draws)]
        return jobs + [(_job_slavnov_exact, (seed,))]
    raise ValueError(f"unknown suite {suite!r}")


SUITES = tuple(DEFAULT_CAPS) + ("all",)


def _run_job(job):
    fn, args = job
    return fn(*args)


def thread_count():
    raw = os.environ.get("PDWPF_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"PDWPF_THREADS must be a positive integer, got {raw!r}") from None


def run_suite(suite, seed=0, max_N=None, threads=None):
    """Run a suite (or ``all``) and return the JSON-ready report."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    jobs = [job for name in names for job in _plan(name, seed, max_N)]
    threads = threads or thread_count()
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_job, jobs))
    else:
        results = [_run_job(job) for job in jobs]
    cases = sorted((c for res in results for c in res[0]), key=lambda c: c["id"])
    records = sorted((r for res in results for r in res[1]), key=lambda r: r["id"])
    failed = sum(not c["pass"] for c in cases)
    return {
        "suite": suite,
        "seed": seed,
        "max_N": max_N,
        "summary": {"total": len(cases), "failed": failed},
        "passed": failed == 0,
        "cases": cases,
        "records": records,
    }
