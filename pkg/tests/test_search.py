import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from diassoc import DiMSC, GL2, MSC, make_field
from diassoc.catalog import CanonicalLabel, family
from diassoc.dialgebra import dia_transform
from diassoc.field import UnsupportedError
from diassoc.msc import aut_check, transform
from diassoc.search import (
    ClassificationGap, automorphism_group, classify, dia_isomorphic, gl2_elements, gl2_order,
    isomorphic, orbit, orbit_key,
)

GF2, GF3, GF5, GF7 = (make_field(f"GF({q})") for q in (2, 3, 5, 7))


@pytest.mark.parametrize("q,n", [(2, 6), (3, 48), (5, 480)])
def test_gl2_count(q, n):
    ctx = make_field(f"GF({q})")
    # independent oracle: count invertible integer matrices mod q
    brute = sum((a * d - b * c) % q != 0 for a, b, c, d in itertools.product(range(q), repeat=4))
    assert brute == n
    els = list(gl2_elements(ctx))
    assert len(els) == n == gl2_order(ctx)
    assert len({g.entries for g in els}) == n


def test_gl2_extension_count():
    assert len(list(gl2_elements(make_field("GF(4)")))) == (16 - 1) * (16 - 4)


def test_infinite_field_rejected():
    Q = make_field("Q")
    with pytest.raises(UnsupportedError):
        list(gl2_elements(Q))
    with pytest.raises(UnsupportedError):
        orbit_key(MSC.zero(Q))


def test_isomorphic_examples():
    rng = random.Random(3)
    G = list(gl2_elements(GF5))
    A = family("As3^5").instantiate(GF5, (2,))
    g0 = rng.choice(G)
    g = isomorphic(A, transform(g0, A))
    assert g is not None and transform(g, transform(g0, A)) == A
    assert isomorphic(family("As3^2").instantiate(GF5), family("As3^3").instantiate(GF5)) is None
    as35 = family("As3^5")
    assert isomorphic(as35.instantiate(GF5, (1,)), as35.instantiate(GF5, (2,))) is None
    assert orbit_key(as35.instantiate(GF5, (3,))) == orbit_key(as35.instantiate(GF5, (2,)))


def test_orbit_key_basics():
    assert orbit_key(MSC.zero(GF5)) == MSC.zero(GF5)
    rng = random.Random(8)
    G = list(gl2_elements(GF5))
    for _ in range(10):
        A = MSC(GF5, tuple(rng.randrange(5) for _ in range(8)))
        assert orbit_key(transform(rng.choice(G), A)) == orbit_key(A)


@settings(max_examples=40)
@given(st.data())
def test_iso_iff_same_key(data):
    ctx = data.draw(st.sampled_from([GF2, GF3]))
    els = ctx.elements()
    A = MSC(ctx, tuple(data.draw(st.sampled_from(els)) for _ in range(8)))
    if data.draw(st.booleans()):
        B = transform(data.draw(st.sampled_from(list(gl2_elements(ctx)))), A)
    else:
        B = MSC(ctx, tuple(data.draw(st.sampled_from(els)) for _ in range(8)))
    assert (isomorphic(A, B) is not None) == (orbit_key(A) == orbit_key(B))


def test_automorphism_group_examples():
    assert len(automorphism_group(MSC.zero(GF2))) == 6
    # As6,2^3 has a nontrivial automorphism e1 -> e1 + e2, so the group has order 2
    auts = automorphism_group(family("As6,2^3").instantiate(GF2))
    assert {g.entries for g in auts} == {(1, 0, 0, 1), (1, 0, 1, 1)}
    # As3,3^4 over GF(3): brute force gives (1 0 / z t), six elements
    auts = automorphism_group(family("As3,3^4").instantiate(GF3))
    assert len(auts) == 6
    assert all(g.x == 1 and g.y == 0 for g in auts)


def test_as623_hand_check():
    """e1' = e1 + e2, e2' = e2 preserves the As6,2^3 products."""
    A = family("As6,2^3").instantiate(GF2)
    assert aut_check(GL2.of(GF2, 1, 0, 1, 1), A)


@pytest.mark.parametrize("fid,params,ctx", [
    ("As13^1", (), GF5), ("As3^5", (2,), GF5), ("As4,2^4", (1,), GF2), ("As3,3^5", (1,), GF3),
    ("D3^6", (), GF5), ("D6,2^4", (), GF2),
])
def test_automorphism_group_is_group(fid, params, ctx):
    A = family(fid).instantiate(ctx, params)
    auts = automorphism_group(A)
    S = {g.entries for g in auts}
    assert GL2.identity(ctx).entries in S
    for g in auts:
        assert g.inverse().entries in S
        for h in auts:
            assert (g @ h).entries in S
    assert gl2_order(ctx) % len(auts) == 0
    assert len(orbit(A)) * len(auts) == gl2_order(ctx)


def test_classify_examples():
    assert classify(MSC.of(GF5, [1, 0, 0, 0], [0, 0, 0, 0])) == CanonicalLabel("As3^2", (), "not23")
    rng = random.Random(11)
    G = list(gl2_elements(GF5))
    base = family("As3^5").instantiate(GF5, (2,))
    for _ in range(5):
        assert classify(transform(rng.choice(G), base)) == CanonicalLabel("As3^5", (2,), "not23")
    assert classify(MSC.zero(GF5)) == CanonicalLabel.zero("not23")
    assert str(classify(DiMSC.zero(GF5))) == "zero"


def test_classify_rejects_non_associative():
    with pytest.raises(ValueError):
        classify(MSC.of(GF5, [0, 1, 1, 0], [1, 1, 1, 4]))


def test_classify_gap():
    # A = 0 with a nilpotent right product satisfies every axiom but has no catalog class
    D = DiMSC(MSC.zero(GF3), MSC.of(GF3, [0, 0, 0, 0], [1, 0, 0, 0]))
    with pytest.raises(ClassificationGap):
        classify(D)


def test_classify_invariant_under_transform():
    rng = random.Random(12)
    G = list(gl2_elements(GF3))
    for fid, p in [("As3,3^4", ()), ("D3,3^6", ()), ("D13,3^1", (1,))]:
        A = family(fid).instantiate(GF3, p)
        lab = classify(A)
        g = rng.choice(G)
        moved = dia_transform(g, A) if isinstance(A, DiMSC) else transform(g, A)
        assert classify(moved) == lab


def test_dia_isomorphic_examples():
    assert dia_isomorphic(family("D3^2").instantiate(GF5), family("D3^3").instantiate(GF5)) is None
    for d in range(5):
        assert dia_isomorphic(family("D3^5").instantiate(GF5, (d,)), family("D3^6").instantiate(GF5)) is None
    dias4 = DiMSC(MSC.of(GF7, [1, 0, 0, 0], [0, 0, 1, 0]), MSC.of(GF7, [1, 0, 0, 0], [0, 1, 0, 0]))
    target = family("D3^6").instantiate(GF7)
    g = dia_isomorphic(target, dias4)
    assert g is not None and dia_transform(g, dias4) == target
