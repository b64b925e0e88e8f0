import random

import pytest
from hypothesis import given, strategies as st

from diassoc import DiMSC, GL2, MSC, make_field
from diassoc.catalog import family
from diassoc.dialgebra import dia_check, dia_transform
from diassoc.msc import assoc_matrix_check, aut_check, kron2, mul_vec, transform
from diassoc.search import gl2_elements

GF3, GF5 = make_field("GF(3)"), make_field("GF(5)")


def test_kron2():
    assert kron2((1, 0), (1, 0)) == (1, 0, 0, 0)
    assert kron2((0, 1), (0, 1)) == (0, 0, 0, 1)
    assert kron2((1, 1), (1, 2), GF3) == (1, 2, 1, 2)


def test_mul_vec():
    as13 = MSC.of(GF5, [0, 0, 0, 0], [1, 0, 0, 0])
    assert mul_vec(as13, (1, 0), (1, 0)) == (0, 1)
    A = MSC.of(GF5, [1, 0, 0, 0], [0, 1, 0, 0])
    assert mul_vec(A, (1, 0), (0, 1)) == (0, 1)
    rng = random.Random(0)
    for _ in range(20):
        M = MSC(GF5, tuple(rng.randrange(5) for _ in range(8)))
        assert mul_vec(M, (0, 0), (rng.randrange(5), rng.randrange(5))) == (0, 0)


def test_assoc_examples():
    assert assoc_matrix_check(MSC.zero(GF5))
    assert assoc_matrix_check(MSC.of(GF5, [0, 0, 0, 0], [1, 0, 0, 0]))
    assert not assoc_matrix_check(MSC.of(GF5, [0, 1, 1, 0], [1, 1, 1, -1]))


def _product_assoc(A: MSC) -> bool:
    """Associativity straight from the bilinear product on basis vectors."""
    e = [(1, 0), (0, 1)]
    for x in e:
        for y in e:
            for z in e:
                if mul_vec(A, mul_vec(A, x, y), z) != mul_vec(A, x, mul_vec(A, y, z)):
                    return False
    return True


def test_assoc_check_matches_product(finite_ctx):
    rng = random.Random(5)
    els = finite_ctx.elements()
    for _ in range(100):
        A = MSC(finite_ctx, tuple(rng.choice(els) for _ in range(8)))
        assert assoc_matrix_check(A) == _product_assoc(A)


def test_transform_examples():
    rng = random.Random(1)
    A = MSC(GF5, tuple(rng.randrange(5) for _ in range(8)))
    assert transform(GL2.identity(GF5), A) == A
    # diag(1, a) rescales the a4 parameter of A3 by a^2
    a3 = family("A3")
    for a in range(1, 5):
        g = GL2.of(GF5, 1, 0, 0, a)
        assert transform(g, a3.instantiate(GF5, (2, 3, 4))) == a3.instantiate(GF5, (2, 3 * a * a % 5, 4))
    as35 = family("As3^5")
    assert as35.instantiate(GF5, (1,)) == MSC.of(GF5, [3, 0, 0, 1], [0, 3, 3, 0])
    assert transform(GL2.of(GF5, 1, 0, 0, 2), as35.instantiate(GF5, (1,))) == as35.instantiate(GF5, (4,))


def test_transform_is_change_of_basis():
    """transform(g, A) is the product written in the basis g e1, g e2."""
    rng = random.Random(2)
    for _ in range(30):
        A = MSC(GF5, tuple(rng.randrange(5) for _ in range(8)))
        g = rng.choice(list(gl2_elements(GF5)))
        B = transform(g, A)
        cols = [(g.x, g.z), (g.y, g.t)]
        for i in range(2):
            for j in range(2):
                prod = mul_vec(A, cols[i], cols[j])
                k = 2 * i + j
                coords = (B.entries[k], B.entries[4 + k])
                lin = tuple(GF5.add(GF5.mul(cols[0][r], coords[0]), GF5.mul(cols[1][r], coords[1])) for r in range(2))
                assert lin == prod


@given(st.data())
def test_action_law(data):
    ctx = make_field(data.draw(st.sampled_from(["GF(3)", "GF(4)", "GF(5)"])))
    els = ctx.elements()
    G = list(gl2_elements(ctx))
    A = MSC(ctx, tuple(data.draw(st.sampled_from(els)) for _ in range(8)))
    g, h = data.draw(st.sampled_from(G)), data.draw(st.sampled_from(G))
    assert transform(g, transform(h, A)) == transform(h @ g, A)
    assert transform(g.inverse(), transform(g, A)) == A
    assert assoc_matrix_check(transform(g, A)) == assoc_matrix_check(A)


def test_aut_check_examples():
    as13 = MSC.of(GF5, [0, 0, 0, 0], [1, 0, 0, 0])
    for x in range(1, 5):
        for z in range(5):
            assert aut_check(GL2.of(GF5, x, 0, z, x * x), as13)
    as33 = MSC.of(GF5, [1, 0, 0, 0], [0, 1, 0, 0])
    assert not aut_check(GL2.of(GF5, 0, 1, 1, 0), as33)
    assert aut_check(GL2.identity(GF5), as33)


def test_gl2_rejects_singular():
    with pytest.raises(ValueError):
        GL2.of(GF5, 1, 2, 2, 4)


def test_field_mismatch():
    with pytest.raises(ValueError):
        transform(GL2.identity(GF3), MSC.zero(GF5))


def test_dialgebra_examples():
    assert dia_check(DiMSC.zero(GF5))
    d34 = DiMSC.of(GF5, [1, 0, 0, 0, 0, 1, 0, 0], [1, 0, 0, 0, 0, 1, 0, 0])
    assert dia_check(d34)
    bad = DiMSC.of(GF5, [1, 0, 0, 0, 0, 1, 0, 0], [1, 0, 0, 0, 0, 0, 1, 0])
    assert not dia_check(bad)


def test_dia_transform():
    d = family("D3,3^6").instantiate(GF3)
    assert dia_transform(GL2.identity(GF3), d) == d
    g = GL2.of(GF3, 1, 0, 2, 1)
    moved = dia_transform(g, d)
    assert moved.left == transform(g, d.left) and moved.right == transform(g, d.right)
    rng = random.Random(4)
    G = list(gl2_elements(GF5))
    for _ in range(200):
        D = DiMSC(MSC(GF5, tuple(rng.randrange(5) for _ in range(8))), MSC(GF5, tuple(rng.randrange(5) for _ in range(8))))
        assert dia_check(dia_transform(rng.choice(G), D)) == dia_check(D)
