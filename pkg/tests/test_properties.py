"""Randomized invariants of the labeling transforms and products."""

from hypothesis import assume, given, settings, strategies as st

from crownmagic.graph_core import directed_cycle, is_single_cycle, star_loop, underlying
from crownmagic.labeling import (
    SUPER_EDGE_MAGIC,
    VertexLabeling,
    canonical_cycle,
    em_complement,
    extend_sem,
    odd_even,
    sem_complement,
    star_loop_labeling,
    verify,
)
from crownmagic.product import (
    ArcAssignment,
    FamilyMember,
    induced_product_labeling,
    oriented_identity_cycle,
    star_member,
)
from crownmagic.translation import sign_for_shift, translated_labeling

odd_lengths = st.sampled_from([3, 5, 7, 9, 11, 13, 15])
small_odd = st.sampled_from([3, 5, 7])
signs = st.sampled_from(["+", "-"])


@st.composite
def sem_labelings(draw):
    """Cycles, looped stars, and shifted crowns: a mixed pool of verified labelings."""
    kind = draw(st.sampled_from(["cycle", "star", "crown"]))
    if kind == "cycle":
        return extend_sem(canonical_cycle(draw(odd_lengths)))
    if kind == "star":
        n = draw(st.integers(1, 6))
        return star_loop_labeling(n, draw(st.integers(1, n + 1)))
    m = draw(st.sampled_from([3, 5, 9, 15]))
    n = draw(st.integers(1, 2))
    r = draw(st.integers(1, m * n + 1))
    sign = sign_for_shift(m, r)
    assume(sign is not None)
    return translated_labeling(extend_sem(canonical_cycle(m)), n, sign, r).labeling


@given(m=odd_lengths, sign=signs)
def test_directed_cycles_are_regular_and_strong(m, sign):
    d = directed_cycle(m, sign)
    assert d.is_one_regular()
    assert d.is_strongly_connected()
    assert is_single_cycle(underlying(d))


@given(f=sem_labelings())
@settings(deadline=None)
def test_extend_sem_reproduces_labeling(f):
    again = extend_sem(VertexLabeling(f.graph, f.vertex_labels))
    assert again.edge_labels == f.edge_labels
    assert again.valence == f.valence


@given(f=sem_labelings())
@settings(deadline=None)
def test_em_complement_valence_and_involution(f):
    c = em_complement(f)
    t = f.order + f.size + 1
    assert c.valence + f.valence == 3 * t
    back = em_complement(c)
    assert back.vertex_labels == f.vertex_labels
    assert back.edge_labels == f.edge_labels


@given(f=sem_labelings())
@settings(deadline=None)
def test_sem_complement_valence(f):
    c = sem_complement(f)
    assert c.kind == SUPER_EDGE_MAGIC
    assert c.valence + f.valence == 4 * f.order + f.size + 3


@given(f=sem_labelings())
@settings(deadline=None)
def test_odd_even_valences(f):
    assume(f.order == f.size)
    o = odd_even(f, "odd")
    e = odd_even(f, "even")
    assert o.valence == 2 * f.valence - 2 * f.order - 2
    assert e.valence == 2 * f.valence - 2 * f.order - 1
    for t in (o, e):
        again = verify(t.graph, t.vertex_labels, t.edge_labels)
        assert again.valence == t.valence


@given(
    m=small_odd,
    p=small_odd,
    data=st.data(),
)
@settings(deadline=None)
def test_product_valence_formula_with_mixed_members(m, p, data):
    outer_d, outer_f = oriented_identity_cycle(m, "+")
    members = [
        FamilyMember.from_digraph(directed_cycle(p, "+")),
        FamilyMember.from_digraph(directed_cycle(p, "-")),
    ]
    mapping = {
        arc: data.draw(st.sampled_from(members), label=f"member for {arc}")
        for arc in outer_d.arcs
    }
    result = induced_product_labeling(outer_d, outer_f, ArcAssignment(mapping))
    k = (p + 3) // 2
    assert result.valence == p * (outer_f.valence - 3) + k + p
    assert result.kind == SUPER_EDGE_MAGIC


@given(n=st.integers(1, 4), r=st.integers(1, 5), m=small_odd, sign=signs)
@settings(deadline=None)
def test_product_valence_formula_star_over_cycle(n, r, m, sign):
    assume(r <= n + 1)
    f = star_loop_labeling(n, r)
    outer = star_loop(n)
    h = ArcAssignment.constant(outer, FamilyMember.from_digraph(directed_cycle(m, sign)))
    result = induced_product_labeling(outer, f, h)
    assert result.valence == m * (f.valence - 3) + (m + 3) // 2 + m


@given(
    m=st.sampled_from([3, 5, 9, 15]),
    n=st.integers(1, 2),
    r=st.integers(2, 31),
    data=st.data(),
)
@settings(deadline=None)
def test_shift_law(m, n, r, data):
    assume(r <= m * n + 1)
    g = extend_sem(canonical_cycle(m))
    sign = data.draw(signs, label="sign")
    base = translated_labeling(g, n, sign, 1).labeling.valence
    assert translated_labeling(g, n, sign, r).labeling.valence == base + r - 1


@given(n=st.integers(1, 8))
def test_star_member_min_sum(n):
    for r in range(1, n + 2):
        assert star_member(n, r).min_sum == r + 1
