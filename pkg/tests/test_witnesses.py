import itertools
import random
import warnings

import pytest

from rigidlin import (
    Integers,
    Matrix,
    Modular,
    StabilizerContext,
    assemble_block,
    block_unipotent_witnesses,
    build_shear,
    complement_module,
    conjugate_by_stabilizer,
    elementary_matrix,
    evaluate_word,
    form_matrix,
    in_row_span,
    intersection_witnesses,
    parse_matrix,
    parse_word,
    preserves_form,
    stabilizer_check,
    transvection,
    transvection_fixes_constraints,
    transvection_short,
    unit_vector,
    unitary_generator,
)
from rigidlin.suites import random_elementary_word, random_unitary_word

Z = Integers()


def test_stabilizer_check():
    assert stabilizer_check(Matrix.identity(Z, 3))
    assert stabilizer_check(elementary_matrix(Z, 3, 1, 2, 7))  # first column untouched
    assert not stabilizer_check(elementary_matrix(Z, 3, 2, 1, 1))  # e1 -> e1 + e2


def test_build_shear():
    assert build_shear(Z, 3, (0, 0)).matrix == Matrix.identity(Z, 3)
    c = 9
    assert build_shear(Z, 3, (0, c)).matrix == elementary_matrix(Z, 3, 1, 3, c)
    f, g = (1, -2), (3, 5)
    lhs = build_shear(Z, 3, f).matrix @ build_shear(Z, 3, g).matrix
    assert lhs == build_shear(Z, 3, (4, 3)).matrix  # functionals add
    with pytest.raises(ValueError):
        build_shear(Z, 3, (1,))


def test_intersection_witnesses_pinned_example():
    # one conjugator moving e1 to e1 + e2: image tail (1, 0), so the
    # annihilator is the (0, c) family and the witnesses are the (1,3) shears
    ctx = StabilizerContext(Z, 3, (elementary_matrix(Z, 3, 2, 1, 1),))
    assert ctx.projected_images == ((1, 0),)
    found = list(itertools.islice(intersection_witnesses(ctx, 4), 4))
    assert [w.matrix for w in found] == [
        elementary_matrix(Z, 3, 1, 3, c) for c in (1, -1, 2, -2)
    ]
    g = ctx.conjugators[0]
    g_inv = ctx.inverses[0]
    e1 = unit_vector(Z, 3, 0)
    for w in found:
        assert g_inv.apply(w.matrix.apply(g.apply(e1))) == e1


def test_intersection_witnesses_unconstrained():
    ctx = StabilizerContext(Z, 3, (Matrix.identity(Z, 3),))
    found = list(itertools.islice(intersection_witnesses(ctx, 6), 6))
    assert len({w.matrix for w in found}) == 6  # every shear qualifies


def test_intersection_witnesses_finite_ring():
    m5 = Modular(5)
    rng = random.Random(73)
    word = random_elementary_word(rng, m5, 3, 4)
    ctx = StabilizerContext(m5, 3, (evaluate_word(word),))
    found = list(intersection_witnesses(ctx, 10_000))
    assert 0 < len(found) < 25  # finite stream, exhausted
    e1 = unit_vector(m5, 3, 0)
    for w in found:
        for g, g_inv in zip(ctx.conjugators, ctx.inverses):
            assert g_inv.apply(w.matrix.apply(g.apply(e1))) == e1


def test_conjugate_by_identity_and_row_shears():
    ctx = StabilizerContext(Z, 4, ())
    witness = build_shear(Z, 4, (1, 2, 3))
    assert conjugate_by_stabilizer(witness, Matrix.identity(Z, 4), ctx).functional == (1, 2, 3)
    # a pure row shear (lower block identity) leaves the functional alone
    q = build_shear(Z, 4, (7, -1, 0)).matrix
    assert conjugate_by_stabilizer(witness, q, ctx).functional == (1, 2, 3)


def test_conjugate_by_block_embedding():
    # q = 1 (+) A rotates the functional by A
    a = parse_matrix(Z, "0,1;-1,0")
    q = assemble_block(Matrix.identity(Z, 1), Matrix.zeros(Z, 1, 2),
                       Matrix.zeros(Z, 2, 1), a)
    ctx = StabilizerContext(Z, 3, ())
    witness = build_shear(Z, 3, (2, 5))
    result = conjugate_by_stabilizer(witness, q, ctx)
    assert result.functional == (-5, 2)  # (2,5) @ [[0,1],[-1,0]]
    assert result.matrix == q.inverse() @ witness.matrix @ q


def test_conjugate_respects_context_constraints():
    ctx = StabilizerContext(Z, 3, (elementary_matrix(Z, 3, 2, 1, 1),))
    witness = next(iter(intersection_witnesses(ctx, 1)))
    # a conjugator that moves the image is rejected as input error
    bad = assemble_block(Matrix.identity(Z, 1), Matrix.zeros(Z, 1, 2),
                         Matrix.zeros(Z, 2, 1), parse_matrix(Z, "0,1;-1,0"))
    with pytest.raises(ValueError):
        conjugate_by_stabilizer(witness, bad, ctx)
    # one that fixes it is accepted and the new functional annihilates it
    good = assemble_block(Matrix.identity(Z, 1), parse_matrix(Z, "0,4"),
                          Matrix.zeros(Z, 2, 1), parse_matrix(Z, "1,7;0,1"))
    result = conjugate_by_stabilizer(witness, good, ctx)
    assert sum(x * u for x, u in zip(result.functional, (1, 0))) == 0


def test_conjugate_rejects_non_stabilizer():
    ctx = StabilizerContext(Z, 3, ())
    witness = build_shear(Z, 3, (1, 0))
    with pytest.raises(ValueError):
        conjugate_by_stabilizer(witness, elementary_matrix(Z, 3, 2, 1, 1), ctx)
    with pytest.raises(ValueError):
        bad = parse_matrix(Z, "1,0,0;0,2,0;0,0,1")  # determinant 2
        conjugate_by_stabilizer(witness, bad, ctx)


def test_complement_module_examples():
    sym = form_matrix(Z, 2, "symplectic")
    e = [unit_vector(Z, 4, k) for k in range(4)]
    c = complement_module(sym, [e[0]])
    assert len(c.basis) == 3
    for v in (e[0], e[1], e[3]):  # pairing with e1 reads the third coordinate
        assert in_row_span(Z, c.basis, v)
    assert not in_row_span(Z, c.basis, e[2])
    full = complement_module(sym, [])
    assert len(full.basis) == 4
    two = complement_module(sym, [e[0], e[1]])
    assert len(two.basis) == 2
    for v in two.basis:
        assert v[2] == 0 and v[3] == 0


def test_transvection_trivial_cases():
    sym = form_matrix(Z, 2, "symplectic")
    zero = (0, 0, 0, 0)
    e2 = unit_vector(Z, 4, 1)
    assert transvection(sym, zero, e2) == Matrix.identity(Z, 4)
    assert transvection(sym, e2, zero) == Matrix.identity(Z, 4)


def test_transvection_short_pinned():
    sym = form_matrix(Z, 2, "symplectic")
    e1 = unit_vector(Z, 4, 0)
    assert transvection_short(sym, e1, 1) == parse_matrix(
        Z, "1,0,-1,0;0,1,0,0;0,0,1,0;0,0,0,1")
    orth = form_matrix(Z, 2, "orthogonal")
    assert transvection_short(orth, e1, 1) == Matrix.identity(Z, 4)


def test_transvection_isotropy_enforced():
    orth = form_matrix(Z, 2, "orthogonal")
    e1 = unit_vector(Z, 4, 0)
    e3 = unit_vector(Z, 4, 2)  # <e1, e3> = 1 under the split form
    with pytest.raises(ValueError):
        transvection(orth, e1, e3)
    anisotropic = (1, 0, 1, 0)  # <v, v> = 2
    with pytest.raises(ValueError):
        transvection(orth, anisotropic, e1)
    with pytest.raises(ValueError):
        transvection_short(orth, anisotropic, 1)


def test_transvection_preserves_form_and_equivariance():
    rng = random.Random(79)
    for kind, word_kind in (("symplectic", "esp"), ("orthogonal", "eo")):
        form = form_matrix(Z, 2, kind)
        for _ in range(25):
            # isotropic pairs from the totally isotropic first-block span
            u = (rng.randint(-3, 3), rng.randint(-3, 3), 0, 0)
            v = (rng.randint(-3, 3), rng.randint(-3, 3), 0, 0)
            tau = transvection(form, u, v)
            assert preserves_form(tau, form)
            word = random_unitary_word(rng, Z, word_kind, 2, rng.randint(1, 4))
            g = evaluate_word(word)
            g_inv = evaluate_word(word.inverse())
            assert g @ tau @ g_inv == transvection(form, g.apply(u), g.apply(v))


def test_transvection_fixed_by_commuting_conjugator():
    # all four vectors drawn from one totally isotropic block: the
    # conjugating transvection fixes u and v, so conjugation is trivial
    form = form_matrix(Z, 3, "orthogonal")
    u = (1, 0, 2, 0, 0, 0)
    v = (0, 1, -1, 0, 0, 0)
    u2 = (2, 1, 0, 0, 0, 0)
    v2 = (0, 3, 1, 0, 0, 0)
    tau = transvection(form, u, v)
    g = transvection(form, u2, v2)
    g_inv = transvection(form, u2, tuple(-c for c in v2))
    assert (g @ g_inv).is_identity()
    assert g @ tau @ g_inv == tau


def test_transvection_fixes_constraints():
    sym = form_matrix(Z, 2, "symplectic")
    ctx = StabilizerContext(Z, 4, (), sym)
    assert transvection_fixes_constraints(ctx, (1, 2, 0, 0), (0, 1, 0, 0), 3)
    g = unitary_generator(Z, 2, -1, 3, 1, 1)  # g e1 = e1 + e3
    ctx2 = StabilizerContext(Z, 4, (g,), sym)
    # u, v must pair to zero with e1 and e1 + e3: second-block coordinate
    # directions e2 work
    assert transvection_fixes_constraints(ctx2, (0, 1, 0, 0), (0, 2, 0, 0), 1)


def test_block_witness_word_realization():
    # the ordered product of the upper-block generators equals (I, A; 0, I)
    for kind, word_text, a_text in (
        ("esp", "rl(1,3);rs(1,4,5);rl(2,-2)", "3,5;5,-2"),
        ("eo", "rs(1,4,5)", "0,5;-5,0"),
    ):
        word = parse_word(Z, kind, 2, word_text)
        block = parse_matrix(Z, a_text)
        expected = assemble_block(Matrix.identity(Z, 2), block,
                                  Matrix.zeros(Z, 2, 2), Matrix.identity(Z, 2))
        assert evaluate_word(word) == expected


def test_block_witnesses_symplectic_pinned():
    sym = form_matrix(Z, 2, "symplectic")
    ctx = StabilizerContext(Z, 4, (), sym)
    g = unitary_generator(Z, 2, -1, 3, 1, 1)  # g e1 = e1 + e3, so y = (1, 0)
    found = list(itertools.islice(block_unipotent_witnesses(ctx, g, 3), 3))
    image = g.column(0)
    for w in found:
        # first row and column of the symmetric block are forced to zero
        assert w.entries[0][2] == 0 and w.entries[0][3] == 0 and w.entries[1][2] == 0
        assert w.apply(image) == image
        assert preserves_form(w, sym)
    assert found[0].entries[1][3] == 1  # free diagonal parameter walks 1, -1, 2


def test_block_witness_constraint_convention():
    # regression pin: for t = (I, A; 0, I) and w = (x, y), t(w) - w = (A y, 0)
    rng = random.Random(83)
    for kind in ("symplectic", "orthogonal"):
        form = form_matrix(Z, 3, kind)
        for _ in range(10):
            entries = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
            if kind == "symplectic":
                for i in range(3):
                    for j in range(i):
                        entries[i][j] = entries[j][i]
            else:
                for i in range(3):
                    entries[i][i] = 0
                    for j in range(i):
                        entries[i][j] = -entries[j][i]
            a = Matrix(Z, entries)
            t = assemble_block(Matrix.identity(Z, 3), a, Matrix.zeros(Z, 3, 3),
                               Matrix.identity(Z, 3))
            assert preserves_form(t, form)
            w = tuple(rng.randint(-5, 5) for _ in range(6))
            moved = t.apply(w)
            delta = tuple(m - x for m, x in zip(moved, w))
            assert delta[:3] == a.apply(w[3:])
            assert delta[3:] == (0, 0, 0)


def test_block_witnesses_identity_conjugator():
    orth = form_matrix(Z, 4, "orthogonal")
    ctx = StabilizerContext(Z, 8, (), orth)
    found = list(itertools.islice(block_unipotent_witnesses(ctx, Matrix.identity(Z, 8), 20), 20))
    assert len(set(found)) == 20
    e1 = unit_vector(Z, 8, 0)
    for w in found:
        assert w.apply(e1) == e1


def test_block_witnesses_reject_bad_g():
    sym = form_matrix(Z, 2, "symplectic")
    ctx = StabilizerContext(Z, 4, (), sym)
    not_symplectic = parse_matrix(Z, "1,1,0,0;0,1,0,0;0,0,1,0;0,0,0,1")
    with pytest.raises(ValueError):
        list(block_unipotent_witnesses(ctx, not_symplectic, 1))


def test_block_witnesses_orthogonal_small_rank_warns():
    orth = form_matrix(Z, 2, "orthogonal")
    ctx = StabilizerContext(Z, 4, (), orth)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        list(itertools.islice(block_unipotent_witnesses(ctx, Matrix.identity(Z, 4), 2), 2))
    assert any("half-rank" in str(w.message) for w in caught)


def test_symplectic_row_generators_are_heisenberg():
    # mirror pairs fail to commute exactly by the central long root with
    # doubled parameter product; this pins the two-step nilpotent structure
    for a in (1, -1, 2):
        for b in (1, -1, 3):
            lhs = unitary_generator(Z, 2, -1, 1, 2, a) @ unitary_generator(Z, 2, -1, 1, 4, b)
            rhs = (unitary_generator(Z, 2, -1, 1, 4, b)
                   @ unitary_generator(Z, 2, -1, 1, 2, a)
                   @ unitary_generator(Z, 2, -1, 1, 3, 2 * a * b))
            assert lhs == rhs
            assert lhs != rhs @ unitary_generator(Z, 2, -1, 1, 3, 1)  # correction is exact


def test_orthogonal_row_generators_commute():
    for n in (2, 3):
        s1 = 1 + n
        gens = [unitary_generator(Z, n, 1, 1, i, a)
                for i in range(2, 2 * n + 1) if i != s1 for a in (1, 2)]
        for g1, g2 in itertools.combinations(gens, 2):
            assert g1 @ g2 == g2 @ g1


def test_context_validation():
    with pytest.raises(ValueError):
        StabilizerContext(Z, 3, (parse_matrix(Z, "2,0,0;0,1,0;0,0,1"),))  # det 2
    sym = form_matrix(Z, 2, "symplectic")
    with pytest.raises(ValueError):
        StabilizerContext(Z, 4, (elementary_matrix(Z, 4, 1, 2, 1),), sym)  # breaks the form
