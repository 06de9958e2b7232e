"""Seeded verification suites and their machine-readable reports.

Every suite is deterministic given its parameters: a single seed is split
per trial (``Random(f"{seed}:{label}:{trial}")``, which hashes the string
with SHA-512, so the split is stable across platforms and runs).  A
report serializes to JSON with sorted keys; rerunning with the same seed
reproduces it byte for byte apart from the elapsed-time field.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field

from .errors import UnsupportedRingError
from .groups import (
    GeneratorWord,
    WordToken,
    elementary_matrix,
    embed_stabilize,
    form_matrix,
    format_word,
    preserves_form,
    sigma_index,
    unitary_generator,
)
from .matrix import (
    Matrix,
    format_matrix,
    format_vector,
    outer_product,
    unit_vector,
    vec_dot,
    vec_is_zero,
)
from .normal_forms import (
    in_row_span,
    kernel_basis,
    principal_kernel_family,
    smith_normal_form,
    solution_stream,
)
from .rings import Integers, IntegerPolynomials, Ring
from .witnesses import (
    StabilizerContext,
    block_unipotent_witnesses,
    conjugate_by_stabilizer,
    intersection_witnesses,
    transvection,
    transvection_fixes_constraints,
    transvection_short,
)

SUITE_IDS = (
    "ring-axioms",
    "snf-oracle",
    "kernel-oracle",
    "rigidity-empirical",
    "lemma-ke",
    "lemma-new",
    "forms-generators",
    "transvections",
    "t-a-witnesses",
    "abelian-s",
)


@dataclass
class WitnessReport:
    suite: str
    ring: str
    params: dict
    trials: int
    failures: list = field(default_factory=list)
    samples: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    verdict: str = "pass"

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ring": self.ring,
            "params": self.params,
            "trials": self.trials,
            "failures": self.failures,
            "samples": self.samples,
            "elapsed_ms": self.elapsed_ms,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def canonical_json(self) -> str:
        """Serialization with the timing field removed (for byte comparison)."""
        payload = self.to_dict()
        del payload["elapsed_ms"]
        return json.dumps(payload, sort_keys=True, indent=2)


def _rng(seed: int, label: str, trial: int) -> random.Random:
    return random.Random(f"{seed}:{label}:{trial}")


def _fail(failures: list, input_: str, expected: str, got: str):
    failures.append({"input": input_, "expected": expected, "got": got})


def _element_pool(ring: Ring, size: int = 100) -> list:
    return ring.take(size)


def _small_params(ring: Ring, bound: int = 3) -> list:
    """Nonzero elements with small literals, e.g. 1, -1, 2, -2, 3, -3 over Z."""
    pool = []
    for k in range(1, bound + 1):
        for text in (str(k), f"-{k}"):
            value = ring.parse(text)
            if value != ring.zero and value not in pool:
                pool.append(value)
    return pool


def random_elementary_word(rng: random.Random, ring: Ring, n: int, length: int,
                           bound: int = 3) -> GeneratorWord:
    pool = _small_params(ring, bound)
    tokens = []
    for _ in range(length):
        i = rng.randrange(1, n + 1)
        j = rng.randrange(1, n + 1)
        while j == i:
            j = rng.randrange(1, n + 1)
        tokens.append(WordToken("e", i, j, rng.choice(pool), rng.choice((1, -1))))
    return GeneratorWord(ring, "en", n, tuple(tokens))


def random_unitary_word(rng: random.Random, ring: Ring, kind: str, n: int, length: int,
                        bound: int = 3) -> GeneratorWord:
    pool = _small_params(ring, bound)
    size = 2 * n
    tokens = []
    for _ in range(length):
        if kind == "esp" and rng.random() < 0.25:
            tokens.append(WordToken("rl", rng.randrange(1, size + 1), None,
                                    rng.choice(pool), rng.choice((1, -1))))
            continue
        while True:
            i = rng.randrange(1, size + 1)
            j = rng.randrange(1, size + 1)
            if j != i and j != sigma_index(n, i):
                break
        tokens.append(WordToken("rs", i, j, rng.choice(pool), rng.choice((1, -1))))
    return GeneratorWord(ring, kind, n, tuple(tokens))


# -- suite implementations ---------------------------------------------------

def _suite_ring_axioms(ring: Ring, p: dict) -> dict:
    samples = p["samples"]
    pool = _element_pool(ring)
    failures: list = []
    kept = []
    rng = _rng(p["seed"], "ring-axioms", 0)
    for t in range(samples):
        a, b, c = (rng.choice(pool) for _ in range(3))
        triple = f"({ring.format(a)}, {ring.format(b)}, {ring.format(c)})"
        checks = (
            ("(a+b)+c == a+(b+c)",
             ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c))),
            ("a*b == b*a", ring.mul(a, b), ring.mul(b, a)),
            ("a*(b+c) == a*b + a*c",
             ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c))),
            ("a*1 == a", ring.mul(a, ring.one), a),
            ("a+0 == a", ring.add(a, ring.zero), a),
        )
        for law, lhs, rhs in checks:
            if lhs != rhs:
                _fail(failures, f"{law} on {triple}", ring.format(rhs), ring.format(lhs))
        if t < 3:
            kept.append(triple)
    return {"trials": samples, "failures": failures, "samples": kept}


def _int_matrix(rng: random.Random, ring: Ring, rows: int, cols: int, bound: int) -> Matrix:
    return Matrix(ring, [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)])


def _minor_gcd(a: Matrix, k: int) -> int:
    g = 0
    for rows in itertools.combinations(range(a.rows), k):
        for cols in itertools.combinations(range(a.cols), k):
            sub = Matrix(a.ring, [[a.entries[r][c] for c in cols] for r in rows])
            g = math.gcd(g, abs(sub.det_cofactor()))
    return g


def _suite_snf_oracle(ring: Ring, p: dict) -> dict:
    if not isinstance(ring, Integers):
        raise UnsupportedRingError("the Smith-form oracle suite runs over Z")
    failures: list = []
    kept = []
    for t in range(p["trials"]):
        rng = _rng(p["seed"], "snf-oracle", t)
        rows, cols = rng.randint(1, 4), rng.randint(1, 5)
        a = _int_matrix(rng, ring, rows, cols, 9)
        d, u, v = smith_normal_form(a)
        label = format_matrix(a)
        if u @ a @ v != d:
            _fail(failures, label, "U*A*V == D", format_matrix(u @ a @ v))
            continue
        if u.det() not in (1, -1) or v.det() not in (1, -1):
            _fail(failures, label, "unimodular U, V", f"det(U)={u.det()}, det(V)={v.det()}")
        diag = [d.entries[i][i] for i in range(min(rows, cols))]
        for i in range(len(diag) - 1):
            ok = (diag[i + 1] == 0) if diag[i] == 0 else (diag[i + 1] % diag[i] == 0)
            if not ok:
                _fail(failures, label, "divisibility chain", str(diag))
        off_diag = [
            d.entries[i][j] for i in range(rows) for j in range(cols) if i != j
        ]
        if any(off_diag):
            _fail(failures, label, "diagonal D", format_matrix(d))
        product = 1
        for k in range(1, min(rows, cols) + 1):
            product *= abs(diag[k - 1])
            oracle = _minor_gcd(a, k)
            if product != oracle:
                _fail(failures, label, f"d1..d{k} == gcd of {k}x{k} minors ({oracle})", str(product))
        if t < 2:
            kept.append({"matrix": label, "d": format_matrix(d),
                         "u": format_matrix(u), "v": format_matrix(v)})
    return {"trials": p["trials"], "failures": failures, "samples": kept}


def _suite_kernel_oracle(ring: Ring, p: dict) -> dict:
    if not isinstance(ring, Integers):
        raise UnsupportedRingError("the kernel oracle suite runs over Z")
    box = p["box"]
    failures: list = []
    kept = []
    for t in range(p["trials"]):
        rng = _rng(p["seed"], "kernel-oracle", t)
        rows, cols = rng.randint(1, 2), rng.randint(1, 3)
        a = _int_matrix(rng, ring, rows, cols, 4)
        label = format_matrix(a)
        kernel = kernel_basis(a)
        for vec in kernel.basis:
            if not vec_is_zero(ring, a.apply(vec)):
                _fail(failures, label, "A v == 0", format_vector(ring, vec))
        grid = a.entries
        for point in itertools.product(range(-box, box + 1), repeat=cols):
            if all(sum(r * x for r, x in zip(row, point)) == 0 for row in grid):
                if any(point) and not in_row_span(ring, kernel.basis, point):
                    _fail(failures, label, "box kernel vector in span of basis", str(point))
        if t < 2:
            kept.append({"matrix": label,
                         "basis": [format_vector(ring, v) for v in kernel.basis]})
    return {"trials": p["trials"], "failures": failures, "samples": kept}


def _suite_rigidity(ring: Ring, p: dict) -> dict:
    failures: list = []
    kept = []
    if ring.is_finite:
        m = ring.cardinality
        trials = p["finite_trials"]
        for t in range(trials):
            rng = _rng(p["seed"], "rigidity-finite", t)
            rows, cols = rng.randint(1, 2), rng.randint(2, 3)
            a = Matrix(ring, [[rng.randrange(m) for _ in range(cols)] for _ in range(rows)])
            label = format_matrix(a)
            space = list(itertools.product(range(m), repeat=cols))
            kernel_vectors = {v for v in space if vec_is_zero(ring, a.apply(v))}
            image = {a.apply(v) for v in space}
            if len(kernel_vectors) * len(image) != m ** cols:
                _fail(failures, label, f"|ker|*|im| == {m ** cols}",
                      f"{len(kernel_vectors)}*{len(image)}")
            streamed = list(solution_stream(a, m ** cols + 5))
            if set(streamed) != kernel_vectors - {tuple([0] * cols)}:
                _fail(failures, label, "stream == nonzero kernel", str(len(streamed)))
            if len(streamed) != len(set(streamed)):
                _fail(failures, label, "stream distinct", str(len(streamed)))
            if t < 3:
                kept.append({"matrix": label, "kernel_size": len(kernel_vectors),
                             "image_size": len(image)})
        return {"trials": trials, "failures": failures, "samples": kept,
                "extra": {"finite_ring": True}}

    trials, need = p["trials"], p["need"]
    pool = _element_pool(ring, 40)
    use_family = isinstance(ring, IntegerPolynomials)
    for t in range(trials):
        rng = _rng(p["seed"], "rigidity-infinite", t)
        a, b = rng.choice(pool), rng.choice(pool)
        label = f"({ring.format(a)}, {ring.format(b)})"
        if use_family:
            found = list(principal_kernel_family(ring, a, b, need))
        else:
            found = list(solution_stream(Matrix(ring, [[a, b]]), need))
        bad = [v for v in found
               if ring.add(ring.mul(a, v[0]), ring.mul(b, v[1])) != ring.zero]
        if bad:
            _fail(failures, label, "kernel membership", format_vector(ring, bad[0]))
        if len(set(found)) < need:
            _fail(failures, label, f">= {need} distinct kernel elements", str(len(set(found))))
        if t < 2:
            kept.append({"map": label,
                         "kernel_sample": [format_vector(ring, v) for v in found[:3]]})
    return {"trials": trials, "failures": failures, "samples": kept,
            "extra": {"finite_ring": False}}


def _stabilizer_trial(ring: Ring, n: int, seed: int, trial: int, p: dict):
    """Deterministic context + witnesses shared by the intersection and
    conjugation suites (same seed => same witnesses)."""
    rng = _rng(seed, "lemma-ke", trial)
    words = [
        random_elementary_word(rng, ring, n, rng.randint(1, p["word_length"]), p["param_bound"])
        for _ in range(n - 2)
    ]
    ctx = StabilizerContext(ring, n, tuple(w.evaluate() for w in words))
    witnesses = list(itertools.islice(intersection_witnesses(ctx, p["need"]), p["need"]))
    return words, ctx, witnesses


def _suite_intersection(ring: Ring, p: dict) -> dict:
    n = p["n"]
    if n < 3:
        raise ValueError("the intersection suite needs n >= 3")
    failures: list = []
    kept = []
    need = p["need"]
    for t in range(p["trials"]):
        words, ctx, witnesses = _stabilizer_trial(ring, n, p["seed"], t, p)
        label = " | ".join(format_word(w) for w in words)
        if not ring.is_finite and len(witnesses) < need:
            _fail(failures, label, f"{need} witnesses", str(len(witnesses)))
        matrices = {w.matrix for w in witnesses}
        if len(matrices) != len(witnesses):
            _fail(failures, label, "pairwise distinct witnesses", str(len(matrices)))
        e1 = ctx.e1
        for w in witnesses:
            for g, g_inv in zip(ctx.conjugators, ctx.inverses):
                if g_inv.apply(w.matrix.apply(g.column(0))) != e1:
                    _fail(failures, label, "g^-1 T g e1 == e1", format_matrix(w.matrix))
                    break
        if t == 0:
            kept.append({"conjugators": [format_word(w) for w in words],
                         "witnesses": [format_matrix(w.matrix) for w in witnesses[:3]]})
    return {"trials": p["trials"], "failures": failures, "samples": kept,
            "extra": {"conjugators_per_trial": n - 2}}


def _random_stabilizer_conjugator(rng: random.Random, ring: Ring, n: int,
                                  functionals: list) -> Matrix:
    """A random (1, x; 0, A) fixing the context images: x annihilates them,
    and A is a product of unit-determinant shears I + w f with f in the
    annihilator and f(w) = 0."""
    dim = n - 1
    coeff_pool = [ring.parse(str(c)) for c in (-2, -1, 0, 1, 2)]

    def combo():
        out = [ring.zero] * dim
        for f in functionals:
            c = rng.choice(coeff_pool)
            if c != ring.zero:
                out = [ring.add(x, ring.mul(c, y)) for x, y in zip(out, f)]
        return tuple(out)

    x_part = combo()
    block = Matrix.identity(ring, dim)
    for _ in range(rng.randint(0, 2)):
        psi = combo()
        if all(c == ring.zero for c in psi):
            continue
        w_kernel = kernel_basis(Matrix(ring, [list(psi)]))
        if not w_kernel.basis:
            continue
        w = [ring.zero] * dim
        for gen in w_kernel.basis:
            c = rng.choice(coeff_pool)
            if c != ring.zero:
                w = [ring.add(a, ring.mul(c, b)) for a, b in zip(w, gen)]
        block = block @ (Matrix.identity(ring, dim) + outer_product(ring, tuple(w), psi))
    top = (ring.one,) + x_part
    grid = [top] + [
        (ring.zero,) + tuple(block.entries[r]) for r in range(dim)
    ]
    return Matrix(ring, grid)


def _suite_conjugation(ring: Ring, p: dict) -> dict:
    n = p["n"]
    failures: list = []
    kept = []
    for t in range(p["trials"]):
        words, ctx, witnesses = _stabilizer_trial(ring, n, p["seed"], t, p)
        label = " | ".join(format_word(w) for w in words)
        rng = _rng(p["seed"], "lemma-new", t)
        functionals = [w.functional for w in witnesses[:3]]
        conjugators = [
            _random_stabilizer_conjugator(rng, ring, n, functionals)
            for _ in range(p["conjugators"])
        ]
        for w in witnesses:
            for q in conjugators:
                try:
                    result = conjugate_by_stabilizer(w, q, ctx)
                except Exception as exc:  # noqa: BLE001 - reported, not raised
                    _fail(failures, f"{label} ; q={format_matrix(q)}",
                          "closed under conjugation", repr(exc))
                    continue
                if any(vec_dot(ring, result.functional, u) != ring.zero
                       for u in ctx.projected_images):
                    _fail(failures, f"{label} ; q={format_matrix(q)}",
                          "functional annihilates images", format_matrix(result.matrix))
        if t == 0 and witnesses and conjugators:
            sample = conjugate_by_stabilizer(witnesses[0], conjugators[0], ctx)
            kept.append({"witness": format_matrix(witnesses[0].matrix),
                         "conjugator": format_matrix(conjugators[0]),
                         "conjugate": format_matrix(sample.matrix)})
    return {"trials": p["trials"], "failures": failures, "samples": kept}


def _suite_forms_generators(ring: Ring, p: dict) -> dict:
    failures: list = []
    kept = []
    params = [ring.parse(str(v)) for v in (1, -1, 2)]
    checks = 0
    for n in p["ns"]:
        size = 2 * n
        symplectic = form_matrix(ring, n, "symplectic")
        orthogonal = form_matrix(ring, n, "orthogonal")
        for a in params:
            for i in range(1, size + 1):
                si = sigma_index(n, i)
                long_root = unitary_generator(ring, n, -1, i, si, a)
                checks += 1
                if not preserves_form(long_root, symplectic):
                    _fail(failures, f"n={n} long({i},{ring.format(a)})",
                          "preserves symplectic form", format_matrix(long_root))
                # the same one-position matrix must fail the orthogonal form
                # whenever 2a is nonzero
                if ring.add(a, a) != ring.zero:
                    checks += 1
                    if preserves_form(long_root, orthogonal):
                        _fail(failures, f"n={n} long({i},{ring.format(a)})",
                              "fails orthogonal form", format_matrix(long_root))
                for j in range(1, size + 1):
                    if j in (i, si):
                        continue
                    for eps, form in ((-1, symplectic), (1, orthogonal)):
                        gen = unitary_generator(ring, n, eps, i, j, a)
                        checks += 1
                        if not preserves_form(gen, form):
                            _fail(failures, f"n={n} eps={eps} rho({i},{j},{ring.format(a)})",
                                  "preserves form", format_matrix(gen))
                        # mirror identity: rho_ij(a) == rho_{sj,si}(-a')
                        sj = sigma_index(n, j)
                        mirrored = gen.entries[sj - 1][si - 1]  # equals -a'
                        twin = unitary_generator(ring, n, eps, sj, si, mirrored)
                        checks += 1
                        if twin != gen:
                            _fail(failures, f"n={n} eps={eps} rho({i},{j})",
                                  "mirror identity", format_matrix(twin))
        # additivity of parameters along a fixed root
        rng = _rng(p["seed"], "forms-generators", n)
        for _ in range(20):
            a, b = rng.choice(params), rng.choice(params)
            i = rng.randrange(1, size + 1)
            j = rng.randrange(1, size + 1)
            while j in (i, sigma_index(n, i)):
                j = rng.randrange(1, size + 1)
            eps = rng.choice((-1, 1))
            lhs = unitary_generator(ring, n, eps, i, j, a) @ unitary_generator(ring, n, eps, i, j, b)
            rhs = unitary_generator(ring, n, eps, i, j, ring.add(a, b))
            checks += 1
            if lhs != rhs:
                _fail(failures, f"n={n} eps={eps} rho({i},{j}) additivity",
                      format_matrix(rhs), format_matrix(lhs))
            ii = rng.randrange(1, n + 1)
            jj = rng.randrange(1, n + 1)
            while jj == ii:
                jj = rng.randrange(1, n + 1)
            lhs = elementary_matrix(ring, n, ii, jj, a) @ elementary_matrix(ring, n, ii, jj, b)
            checks += 1
            if lhs != elementary_matrix(ring, n, ii, jj, ring.add(a, b)):
                _fail(failures, f"n={n} e({ii},{jj}) additivity", "e(a+b)", format_matrix(lhs))
    for n in range(1, 9):
        for k in range(1, 2 * n + 1):
            checks += 1
            if sigma_index(n, sigma_index(n, k)) != k:
                _fail(failures, f"sigma involution n={n} k={k}", str(k),
                      str(sigma_index(n, sigma_index(n, k))))
    # determinant-one and inverse identities on random words
    rng = _rng(p["seed"], "forms-generators-words", 0)
    for t in range(p["words"]):
        kind = rng.choice(("en", "esp", "eo"))
        n = rng.choice((2, 3))
        length = rng.randint(1, 8)
        if kind == "en":
            word = random_elementary_word(rng, ring, n + 1, length)
        else:
            word = random_unitary_word(rng, ring, kind, n, length)
        m = word.evaluate()
        checks += 1
        if m.det() != ring.one:  # every generator is unipotent
            _fail(failures, format_word(word), "det == 1", ring.format(m.det()))
        checks += 1
        if not (m @ word.inverse().evaluate()).is_identity():
            _fail(failures, format_word(word), "word * word^-1 == I", format_matrix(m))
    # stabilization embedding respects the symplectic form
    rng = _rng(p["seed"], "forms-generators-embed", 0)
    for _ in range(10):
        word = random_unitary_word(rng, ring, "esp", 2, rng.randint(1, 5))
        m = word.evaluate()
        bigger = embed_stabilize(m)
        checks += 1
        if not preserves_form(bigger, form_matrix(ring, 3, "symplectic")):
            _fail(failures, format_word(word), "embedding preserves the form",
                  format_matrix(bigger))
    kept.append({"checked": checks})
    return {"trials": checks, "failures": failures, "samples": kept}


def _isotropic_pool(ctx: StabilizerContext) -> list:
    """Basis of the intersection of the totally isotropic first-block span
    with the complement of the constraint vectors."""
    form = ctx.form
    ring = ctx.ring
    n = form.n
    gram_t = form.gram.transpose()
    rows = []
    for w in ctx.constraint_vectors:
        rows.append(gram_t.apply(w)[:n])  # condition on the first block only
    if all(vec_is_zero(ring, row) for row in rows):
        heads = [unit_vector(ring, n, i) for i in range(n)]
    else:
        heads = list(kernel_basis(Matrix(ring, rows)).basis)
    zero_tail = tuple(ring.zero for _ in range(n))
    return [tuple(h) + zero_tail for h in heads]


def _combine(rng: random.Random, ring: Ring, vectors: list, size: int) -> tuple:
    coeffs = [ring.parse(str(c)) for c in (-2, -1, 1, 2)]
    out = tuple(ring.zero for _ in range(size))
    for v in vectors:
        if rng.random() < 0.5:
            c = rng.choice(coeffs)
            out = tuple(ring.add(x, ring.mul(c, y)) for x, y in zip(out, v))
    return out


def _suite_transvections(ring: Ring, p: dict) -> dict:
    failures: list = []
    kept = []
    combos = [(kind, n) for kind in ("symplectic", "orthogonal") for n in p["ns"]]
    per_combo = max(1, p["trials"] // len(combos))
    trials = 0
    for kind, n in combos:
        form = form_matrix(ring, n, kind)
        word_kind = "esp" if kind == "symplectic" else "eo"
        for t in range(per_combo):
            trials += 1
            rng = _rng(p["seed"], f"transvections:{kind}:{n}", t)
            k = rng.randint(0, min(2, n - 1))
            conjugators = tuple(
                random_unitary_word(rng, ring, word_kind, n, rng.randint(1, 4)).evaluate()
                for _ in range(k)
            )
            ctx = StabilizerContext(ring, 2 * n, conjugators, form)
            pool = _isotropic_pool(ctx)
            label = f"{kind} n={n} k={k}"
            if not pool:
                continue
            u = _combine(rng, ring, pool, 2 * n)
            v = _combine(rng, ring, pool, 2 * n)
            r = rng.choice(_small_params(ring))
            tau = transvection(form, u, v)
            if not preserves_form(tau, form):
                _fail(failures, label, "form preservation", format_matrix(tau))
            short = transvection_short(form, v, r)
            if kind == "orthogonal" and not short.is_identity():
                _fail(failures, label, "identity on the orthogonal side", format_matrix(short))
            try:
                transvection_fixes_constraints(ctx, u, v, r)
            except Exception as exc:  # noqa: BLE001
                _fail(failures, label, "fixes constraint vectors", repr(exc))
            # conjugation equivariance under a random form-preserving word
            g_word = random_unitary_word(rng, ring, word_kind, n, rng.randint(1, 4))
            g = g_word.evaluate()
            g_inv = g_word.inverse().evaluate()
            lhs = g @ tau @ g_inv
            rhs = transvection(form, g.apply(u), g.apply(v))
            if lhs != rhs:
                _fail(failures, label, "g tau g^-1 == tau(gu, gv)", format_matrix(lhs))
            # pairs fixed by a transvection commute with it exactly
            u2 = _combine(rng, ring, pool, 2 * n)
            v2 = _combine(rng, ring, pool, 2 * n)
            center = transvection(form, u2, v2)
            center_inv = transvection(form, u2, tuple(ring.neg(c) for c in v2))
            if center @ tau @ center_inv != tau:
                _fail(failures, label, "central conjugate equals tau", format_matrix(tau))
            if t == 0:
                kept.append({"context": label, "u": format_vector(ring, u),
                             "v": format_vector(ring, v), "tau": format_matrix(tau)})
    return {"trials": trials, "failures": failures, "samples": kept}


def _suite_block_witnesses(ring: Ring, p: dict) -> dict:
    failures: list = []
    kept = []
    need = p["need"]
    trials = 0
    for kind, n in p["configs"]:
        form = form_matrix(ring, n, kind)
        word_kind = "esp" if kind == "symplectic" else "eo"
        ctx = StabilizerContext(ring, 2 * n, (), form)
        for t in range(p["trials"]):
            trials += 1
            rng = _rng(p["seed"], f"t-a:{kind}:{n}", t)
            g_word = random_unitary_word(rng, ring, word_kind, n, rng.randint(1, p["word_length"]))
            g = g_word.evaluate()
            label = f"{kind} n={n} g={format_word(g_word)}"
            found = list(itertools.islice(block_unipotent_witnesses(ctx, g, need), need))
            if not ring.is_finite and len(found) < need:
                _fail(failures, label, f"{need} block witnesses", str(len(found)))
            if len(set(found)) != len(found):
                _fail(failures, label, "pairwise distinct", str(len(set(found))))
            image = g.column(0)
            for w in found:
                if w.apply(image) != image or not preserves_form(w, form):
                    _fail(failures, label, "fixes g e1 and preserves the form",
                          format_matrix(w))
                    break
            if t == 0 and found:
                kept.append({"g": format_word(g_word), "witness": format_matrix(found[0])})
    return {"trials": trials, "failures": failures, "samples": kept}


def _suite_abelian(ring: Ring, p: dict) -> dict:
    failures: list = []
    kept = []
    params = [ring.parse(str(v)) for v in (1, -1, 2)]
    checks = 0
    for n in p["ns"]:
        # row group inside the linear group: pairwise commuting
        gens = [elementary_matrix(ring, n, 1, j, a) for j in range(2, n + 1) for a in params]
        for g1, g2 in itertools.combinations(gens, 2):
            checks += 1
            if g1 @ g2 != g2 @ g1:
                _fail(failures, f"linear n={n}", "commuting row generators",
                      format_matrix(g1 @ g2))
        size = 2 * n
        s1 = sigma_index(n, 1)
        # orthogonal side: the row generators commute
        ortho = [unitary_generator(ring, n, 1, 1, i, a)
                 for i in range(2, size + 1) if i != s1 for a in params]
        for g1, g2 in itertools.combinations(ortho, 2):
            checks += 1
            if g1 @ g2 != g2 @ g1:
                _fail(failures, f"orthogonal n={n}", "commuting row generators",
                      format_matrix(g1 @ g2))
        # symplectic side: two-step nilpotent, not abelian.  Mirror-index
        # pairs commute only up to a central long root with doubled product:
        # rho_1i(a) rho_1{si}(b) == rho_1{si}(b) rho_1i(a) rho_1{s1}(2ab).
        for i in range(2, size + 1):
            if i == s1:
                continue
            si = sigma_index(n, i)
            if si == s1 or si <= i:
                continue
            for a in params:
                for b in params:
                    lhs = unitary_generator(ring, n, -1, 1, i, a) @ unitary_generator(
                        ring, n, -1, 1, si, b)
                    correction = unitary_generator(
                        ring, n, -1, 1, s1, ring.add(ring.mul(a, b), ring.mul(a, b)))
                    rhs = unitary_generator(ring, n, -1, 1, si, b) @ unitary_generator(
                        ring, n, -1, 1, i, a) @ correction
                    checks += 1
                    if lhs != rhs:
                        _fail(failures, f"symplectic n={n} pair (1,{i}),(1,{si})",
                              "commutator equals the central long root", format_matrix(lhs))
        # long roots are central among the symplectic row generators
        for a in params:
            central = unitary_generator(ring, n, -1, 1, s1, a)
            others = [unitary_generator(ring, n, -1, 1, i, params[0])
                      for i in range(2, size + 1) if i != s1]
            for g in others:
                checks += 1
                if central @ g != g @ central:
                    _fail(failures, f"symplectic n={n} long root", "central",
                          format_matrix(central @ g))
        # non-mirror symplectic pairs commute outright
        for i in range(2, size + 1):
            if i == s1:
                continue
            for j in range(i + 1, size + 1):
                if j in (s1, sigma_index(n, i)):
                    continue
                g1 = unitary_generator(ring, n, -1, 1, i, params[0])
                g2 = unitary_generator(ring, n, -1, 1, j, params[1])
                checks += 1
                if g1 @ g2 != g2 @ g1:
                    _fail(failures, f"symplectic n={n} pair (1,{i}),(1,{j})",
                          "commuting", format_matrix(g1 @ g2))
    kept.append({"checked": checks,
                 "note": "symplectic row group is two-step nilpotent; its mirror-pair "
                         "commutators are the central long roots"})
    return {"trials": checks, "failures": failures, "samples": kept}


_DEFAULTS = {
    "ring-axioms": {"samples": 1000},
    "snf-oracle": {"trials": 200},
    "kernel-oracle": {"trials": 500, "box": 6},
    "rigidity-empirical": {"trials": 200, "need": 50, "finite_trials": 40},
    "lemma-ke": {"n": 3, "trials": 20, "need": 50, "word_length": 6, "param_bound": 3},
    "lemma-new": {"n": 3, "trials": 20, "need": 50, "word_length": 6, "param_bound": 3,
                  "conjugators": 10},
    "forms-generators": {"ns": [2, 3], "words": 100},
    "transvections": {"ns": [2, 4], "trials": 100},
    "t-a-witnesses": {"configs": [["symplectic", 2], ["orthogonal", 4]],
                      "trials": 20, "need": 50, "word_length": 6},
    "abelian-s": {"ns": [2, 3, 4]},
}

_RUNNERS = {
    "ring-axioms": _suite_ring_axioms,
    "snf-oracle": _suite_snf_oracle,
    "kernel-oracle": _suite_kernel_oracle,
    "rigidity-empirical": _suite_rigidity,
    "lemma-ke": _suite_intersection,
    "lemma-new": _suite_conjugation,
    "forms-generators": _suite_forms_generators,
    "transvections": _suite_transvections,
    "t-a-witnesses": _suite_block_witnesses,
    "abelian-s": _suite_abelian,
}


def run_suite(suite_id: str, ring: Ring, params: dict | None = None) -> WitnessReport:
    """Run a verification suite; deterministic given params (seed included)."""
    if suite_id not in _RUNNERS:
        raise ValueError(f"unknown suite {suite_id!r}; known: {', '.join(SUITE_IDS)}")
    resolved = dict(_DEFAULTS[suite_id])
    resolved["seed"] = 0
    resolved.update(params or {})
    start = time.perf_counter()
    outcome = _RUNNERS[suite_id](ring, resolved)
    elapsed = (time.perf_counter() - start) * 1000.0
    recorded = dict(resolved)
    recorded.update(outcome.get("extra", {}))
    failures = sorted(outcome["failures"], key=lambda f: json.dumps(f, sort_keys=True))
    return WitnessReport(
        suite=suite_id,
        ring=ring.descriptor,
        params=recorded,
        trials=outcome["trials"],
        failures=failures,
        samples=outcome["samples"],
        elapsed_ms=round(elapsed, 3),
        verdict="pass" if not failures else "fail",
    )
